#include "midr/midr.h"

#include <cstdlib>
#include <cstring>
#include <new>

#include "decompose.hpp"
#include "json_io.hpp"
#include "parser.hpp"
#include "printer.hpp"
#include "staircase.hpp"

struct midr_ideal {
  midr::AfgIdeal v;
};

struct midr_decomp {
  midr::Decomposition v;
};

namespace {

void set_error(midr_error* err, int status, std::size_t offset,
               const char* msg) {
  if (!err) return;
  err->status = status;
  err->offset = offset;
  std::strncpy(err->message, msg, sizeof(err->message) - 1);
  err->message[sizeof(err->message) - 1] = '\0';
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs the body and maps exceptions onto status codes.
template <typename Fn>
int guarded(midr_error* err, Fn&& fn) {
  try {
    return fn();
  } catch (const midr::parse_error& e) {
    set_error(err, MIDR_ERR_PARSE, e.offset, e.what());
    return MIDR_ERR_PARSE;
  } catch (const midr::dim_error& e) {
    set_error(err, MIDR_ERR_DIM, 0, e.what());
    return MIDR_ERR_DIM;
  } catch (const midr::value_error& e) {
    set_error(err, MIDR_ERR_DOMAIN, 0, e.what());
    return MIDR_ERR_DOMAIN;
  } catch (const std::bad_alloc&) {
    set_error(err, MIDR_ERR_INTERNAL, 0, "out of memory");
    return MIDR_ERR_INTERNAL;
  } catch (const std::exception& e) {
    set_error(err, MIDR_ERR_INTERNAL, 0, e.what());
    return MIDR_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

const char* midr_version(void) { return "0.1.0"; }

int midr_ideal_parse(const char* text, unsigned dim, midr_ideal** out,
                     midr_error* err) {
  if (!text || !out) return MIDR_ERR_ARG;
  *out = nullptr;
  return guarded(err, [&] {
    auto* v = new midr_ideal{midr::parse_ideal(text, dim)};
    *out = v;
    return MIDR_OK;
  });
}

void midr_ideal_free(midr_ideal* v) { delete v; }

unsigned midr_ideal_dim(const midr_ideal* v) {
  return v ? static_cast<unsigned>(v->v.dim) : 0;
}

int midr_ideal_format(const midr_ideal* v, int as_json, char** out) {
  if (!v || !out) return MIDR_ERR_ARG;
  return guarded(nullptr, [&] {
    *out = dup_string(as_json ? midr::ideal_json(v->v).dump()
                              : midr::print_canonical(v->v));
    return *out ? MIDR_OK : MIDR_ERR_INTERNAL;
  });
}

int midr_ideal_member(const midr_ideal* v, const char* monomial, int* out,
                      midr_error* err) {
  if (!v || !monomial || !out) return MIDR_ERR_ARG;
  return guarded(err, [&] {
    midr::Monomial m = midr::parse_monomial(monomial, v->v.dim);
    *out = midr::afg_member(m, v->v) ? 1 : 0;
    return MIDR_OK;
  });
}

int midr_ideal_contains(const midr_ideal* outer, const midr_ideal* inner,
                        int* out, char** witness, int as_json) {
  if (!outer || !inner || !out) return MIDR_ERR_ARG;
  if (witness) *witness = nullptr;
  return guarded(nullptr, [&] {
    midr::ContainsResult r = midr::contains(outer->v, inner->v);
    *out = r.contained ? 1 : 0;
    if (!r.contained && witness)
      *witness = dup_string(as_json ? midr::witness_json(*r.witness).dump()
                                    : midr::witness_text(*r.witness));
    return MIDR_OK;
  });
}

int midr_ideal_equal(const midr_ideal* a, const midr_ideal* b, int* out) {
  if (!a || !b || !out) return MIDR_ERR_ARG;
  return guarded(nullptr, [&] {
    *out = midr::equal(a->v, b->v) ? 1 : 0;
    return MIDR_OK;
  });
}

int midr_ideal_simplify(const midr_ideal* v, midr_ideal** out) {
  if (!v || !out) return MIDR_ERR_ARG;
  *out = nullptr;
  return guarded(nullptr, [&] {
    *out = new midr_ideal{
        midr::recompose(midr::remove_redundant(midr::decompose(v->v)))};
    return MIDR_OK;
  });
}

int midr_ideal_decompose(const midr_ideal* v, midr_decomp** out) {
  if (!v || !out) return MIDR_ERR_ARG;
  *out = nullptr;
  return guarded(nullptr, [&] {
    *out = new midr_decomp{midr::remove_redundant(midr::decompose(v->v))};
    return MIDR_OK;
  });
}

int midr_ideal_is_irreducible(const midr_ideal* v, int* out, char** factor1,
                              char** factor2) {
  if (!v || !out) return MIDR_ERR_ARG;
  if (factor1) *factor1 = nullptr;
  if (factor2) *factor2 = nullptr;
  return guarded(nullptr, [&] {
    midr::IrreducibilityResult r = midr::is_m_irreducible(v->v);
    *out = r.irreducible ? 1 : 0;
    if (!r.irreducible && factor1 && factor2) {
      midr::Decomposition one{v->v.dim, {r.witness->first}};
      midr::Decomposition two{v->v.dim, {r.witness->second}};
      *factor1 = dup_string(midr::print_canonical(one));
      *factor2 = dup_string(midr::print_canonical(two));
    }
    return MIDR_OK;
  });
}

int midr_ideal_staircase(const midr_ideal* v, int format, char** out,
                         midr_error* err) {
  if (!v || !out) return MIDR_ERR_ARG;
  return guarded(err, [&] {
    auto path = midr::staircase_2d(v->v);
    switch (format) {
      case 0: *out = dup_string(midr::staircase_text(path)); break;
      case 1: *out = dup_string(midr::staircase_json(path).dump()); break;
      case 2: *out = dup_string(midr::staircase_svg(path)); break;
      default: return static_cast<int>(MIDR_ERR_ARG);
    }
    return static_cast<int>(*out ? MIDR_OK : MIDR_ERR_INTERNAL);
  });
}

void midr_decomp_free(midr_decomp* d) { delete d; }

size_t midr_decomp_size(const midr_decomp* d) {
  return d ? d->v.components.size() : 0;
}

int midr_decomp_format(const midr_decomp* d, int as_json, char** out) {
  if (!d || !out) return MIDR_ERR_ARG;
  return guarded(nullptr, [&] {
    *out = dup_string(as_json ? midr::ideal_json(d->v).dump()
                              : midr::print_canonical(d->v));
    return *out ? MIDR_OK : MIDR_ERR_INTERNAL;
  });
}

int midr_decomp_recompose(const midr_decomp* d, midr_ideal** out) {
  if (!d || !out) return MIDR_ERR_ARG;
  *out = nullptr;
  return guarded(nullptr, [&] {
    *out = new midr_ideal{midr::recompose(d->v)};
    return MIDR_OK;
  });
}

void midr_string_free(char* s) { std::free(s); }

}  // extern "C"
