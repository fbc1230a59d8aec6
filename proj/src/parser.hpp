#pragma once

#include <string_view>
#include <variant>
#include <vector>

#include "ideals.hpp"

namespace midr {

// Abstract syntax of the ideal expression language:
//   expr := term ('+' term)*
//   term := atom | 'cap(' expr (',' expr)* ')'
//   atom := 'I[' bounds ';' flags ']' | 'J[' bounds ';' flags ']'
//         | 'Jp[' idx ',' bound ',' flag ']' | 'gen(' monomial (',' monomial)* ')'
//   bound := rational | 'inf' ;  flag := '0' | '1'
// Monomials are written X1^3/2*X2^2, with omitted exponent 1 and bare "1"
// for the identity. Whitespace between tokens is ignored.
struct Expr;

struct SumExpr {
  std::vector<Expr> terms;
};
struct CapExpr {
  std::vector<Expr> terms;
};

struct Expr {
  std::variant<BoxIdeal, IrreducibleIdeal, PurePowerIdeal, FiniteGeneratorSet,
               SumExpr, CapExpr>
      node;
};

/// Parses an expression, checking every literal against the ambient
/// dimension. Throws parse_error (with byte offset) on bad syntax and
/// dim_error on arity/dimension/index mismatches.
Expr parse_expr(std::string_view text, std::size_t dim);

/// Lowers an expression to its sum-of-boxes value.
AfgIdeal elaborate(const Expr& e, std::size_t dim);

/// parse_expr followed by elaborate.
AfgIdeal parse_ideal(std::string_view text, std::size_t dim);

/// Parses a standalone monomial in the X1^e1*... form.
Monomial parse_monomial(std::string_view text, std::size_t dim);

}  // namespace midr
