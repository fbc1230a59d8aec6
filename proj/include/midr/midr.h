/* midr — monomial ideals with nonnegative rational exponents.
 *
 * C interface to the midr shared library. Values are opaque handles created
 * by the parse/operation functions and released with the matching _free.
 * Every function that can fail returns a midr_status; string outputs are
 * heap-allocated and released with midr_string_free.
 *
 * Handles are immutable after creation: any number of threads may operate
 * on the same handle concurrently, as long as no thread frees it while
 * others still use it.
 *
 * Ideal expressions use the text grammar
 *   expr := term ('+' term)*
 *   term := atom | 'cap(' expr (',' expr)* ')'
 *   atom := 'I[' bounds ';' flags ']'      almost-principal box ideal
 *         | 'J[' bounds ';' flags ']'      pure-power (m-irreducible) ideal
 *         | 'Jp[' idx ',' bound ',' flag ']'  pure powers of one variable
 *         | 'gen(' monomial (',' monomial)* ')'
 * with bound a nonnegative rational "p/q" or "inf", flag 0 (closed) or
 * 1 (open), and monomials written X1^3/2*X2^2 (bare "1" is the identity).
 */
#ifndef MIDR_H
#define MIDR_H

#include <stddef.h>

#if defined(__GNUC__)
#define MIDR_API __attribute__((visibility("default")))
#else
#define MIDR_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum midr_status {
  MIDR_OK = 0,
  MIDR_ERR_PARSE = 2,  /* malformed input text */
  MIDR_ERR_DIM = 3,    /* dimension, arity or index mismatch */
  MIDR_ERR_DOMAIN = 4, /* operation outside its domain (e.g. staircase of 0) */
  MIDR_ERR_ARG = 5,    /* null handle or invalid argument */
  MIDR_ERR_INTERNAL = 6
} midr_status;

/* An ideal in sum-of-boxes form. */
typedef struct midr_ideal midr_ideal;
/* A finite intersection of pure-power ideals. */
typedef struct midr_decomp midr_decomp;

typedef struct midr_error {
  int status;
  size_t offset; /* byte offset of the first offending character */
  char message[232];
} midr_error;

MIDR_API const char* midr_version(void);

/* Parses and elaborates an expression over dim >= 1 variables. err may be
 * NULL. On success *out owns the value. */
MIDR_API int midr_ideal_parse(const char* text, unsigned dim, midr_ideal** out,
                              midr_error* err);
MIDR_API void midr_ideal_free(midr_ideal* v);
MIDR_API unsigned midr_ideal_dim(const midr_ideal* v);

/* Canonical text (as_json = 0) or canonical JSON (as_json = 1). */
MIDR_API int midr_ideal_format(const midr_ideal* v, int as_json, char** out);

/* Membership of a monomial given in text form. */
MIDR_API int midr_ideal_member(const midr_ideal* v, const char* monomial,
                               int* out, midr_error* err);

/* Containment inner <= outer. When the answer is no and witness != NULL,
 * *witness receives a point of inner's region outside outer's region, as
 * text "(1,3/2+)" (as_json = 0) or {"point":[...]} (as_json = 1); a
 * trailing '+' / "open":true marks a coordinate infinitesimally above the
 * printed value. *witness is NULL when contained. */
MIDR_API int midr_ideal_contains(const midr_ideal* outer,
                                 const midr_ideal* inner, int* out,
                                 char** witness, int as_json);

MIDR_API int midr_ideal_equal(const midr_ideal* a, const midr_ideal* b,
                              int* out);

/* Smallest sum-of-boxes form the library can produce: the irredundant
 * decomposition, recomposed. */
MIDR_API int midr_ideal_simplify(const midr_ideal* v, midr_ideal** out);

/* Irredundant finite decomposition into pure-power ideals. */
MIDR_API int midr_ideal_decompose(const midr_ideal* v, midr_decomp** out);

/* Whether the ideal is indecomposable under intersection. When it is not
 * and factor1/factor2 != NULL, they receive the canonical text of two
 * decomposition components, each strictly containing the ideal. */
MIDR_API int midr_ideal_is_irreducible(const midr_ideal* v, int* out,
                                       char** factor1, char** factor2);

/* Boundary staircase of a nonzero two-dimensional ideal.
 * format: 0 = text (one corner per line), 1 = JSON, 2 = SVG. */
MIDR_API int midr_ideal_staircase(const midr_ideal* v, int format, char** out,
                                  midr_error* err);

MIDR_API void midr_decomp_free(midr_decomp* d);
MIDR_API size_t midr_decomp_size(const midr_decomp* d);
MIDR_API int midr_decomp_format(const midr_decomp* d, int as_json, char** out);
MIDR_API int midr_decomp_recompose(const midr_decomp* d, midr_ideal** out);

MIDR_API void midr_string_free(char* s);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* MIDR_H */
