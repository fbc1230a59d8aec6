#include "parser.hpp"

#include <cctype>

#include "decompose.hpp"

namespace midr {

namespace {

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t dim) : text_(text), dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t pos() const { return pos_; }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ == text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!accept(c)) fail(std::string("expected '") + c + "' in " + what);
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw parse_error(msg + " at byte " + std::to_string(pos_), pos_);
  }

  // One lexeme: digits, optionally '/' digits, no internal whitespace.
  Rational rational_token() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) fail("expected a rational number");
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      std::size_t den_start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      if (pos_ == den_start) fail("expected denominator digits");
    }
    auto q = parse_rational(text_.substr(start, pos_ - start));
    if (!q) {
      pos_ = start;
      fail("malformed rational");
    }
    return *q;
  }

  unsigned long integer_token(const char* what) {
    skip_ws();
    std::size_t start = pos_;
    unsigned long value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (value < 1000000000UL)
        value = value * 10 + static_cast<unsigned long>(text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail(std::string("expected ") + what);
    return value;  // saturates far above any valid variable index
  }

 private:
  std::string_view text_;
  std::size_t dim_;
  std::size_t pos_ = 0;
};

ExtExp bound_token(Cursor& c) {
  if (c.accept_word("inf")) return ExtExp::infinity();
  return ExtExp(c.rational_token());
}

Flag flag_token(Cursor& c) {
  if (c.accept('0')) return Flag::closed;
  if (c.accept('1')) return Flag::open;
  c.fail("expected flag 0 or 1");
}

// bounds ';' flags inside I[...] / J[...]; both lists must have dim entries.
std::vector<Ray> ray_vector(Cursor& c, const char* what) {
  std::vector<ExtExp> bounds;
  bounds.push_back(bound_token(c));
  while (c.accept(',')) bounds.push_back(bound_token(c));
  c.expect(';', what);
  std::vector<Flag> flags;
  flags.push_back(flag_token(c));
  while (c.accept(',')) flags.push_back(flag_token(c));
  c.expect(']', what);
  if (bounds.size() != flags.size())
    throw dim_error(std::string(what) + ": " + std::to_string(bounds.size()) +
                    " bounds but " + std::to_string(flags.size()) + " flags");
  if (bounds.size() != c.dim())
    throw dim_error(std::string(what) + " has " +
                    std::to_string(bounds.size()) + " coordinates, ambient dimension is " +
                    std::to_string(c.dim()));
  std::vector<Ray> rays;
  rays.reserve(bounds.size());
  for (std::size_t i = 0; i < bounds.size(); ++i)
    rays.emplace_back(bounds[i], flags[i]);
  return rays;
}

std::size_t var_index(Cursor& c) {
  unsigned long idx = c.integer_token("variable index");
  if (idx < 1 || idx > c.dim())
    throw dim_error("variable index " + std::to_string(idx) + " outside 1.." +
                    std::to_string(c.dim()));
  return idx - 1;
}

Monomial monomial_inner(Cursor& c) {
  std::vector<Rational> exps(c.dim(), Rational(0));
  if (c.accept('1')) return Monomial(std::move(exps));
  do {
    if (!c.accept('X')) c.fail("expected variable X<i> or 1");
    std::size_t var = var_index(c);
    Rational e(1);
    if (c.accept('^')) e = c.rational_token();
    exps[var] += e;
  } while (c.accept('*'));
  return Monomial(std::move(exps));
}

Expr parse_expr_inner(Cursor& c);

Expr parse_atom(Cursor& c) {
  if (c.accept_word("cap(")) {
    CapExpr cap;
    cap.terms.push_back(parse_expr_inner(c));
    while (c.accept(',')) cap.terms.push_back(parse_expr_inner(c));
    c.expect(')', "cap(...)");
    return Expr{std::move(cap)};
  }
  if (c.accept_word("gen(")) {
    FiniteGeneratorSet s{c.dim(), {}};
    s.gens.push_back(monomial_inner(c));
    while (c.accept(',')) s.gens.push_back(monomial_inner(c));
    c.expect(')', "gen(...)");
    return Expr{std::move(s)};
  }
  if (c.accept_word("Jp[")) {
    std::size_t var = var_index(c);
    c.expect(',', "Jp[...]");
    ExtExp bound = bound_token(c);
    c.expect(',', "Jp[...]");
    Flag f = flag_token(c);
    c.expect(']', "Jp[...]");
    return Expr{PurePowerIdeal{var, Ray(bound, f)}};
  }
  if (c.accept_word("J[")) return Expr{IrreducibleIdeal{ray_vector(c, "J[...]")}};
  if (c.accept_word("I[")) return Expr{BoxIdeal{ray_vector(c, "I[...]")}};
  c.fail("expected I[, J[, Jp[, gen( or cap(");
}

Expr parse_expr_inner(Cursor& c) {
  Expr first = parse_atom(c);
  if (c.peek() != '+') return first;
  SumExpr sum;
  sum.terms.push_back(std::move(first));
  while (c.accept('+')) sum.terms.push_back(parse_atom(c));
  return Expr{std::move(sum)};
}

}  // namespace

Expr parse_expr(std::string_view text, std::size_t dim) {
  if (dim == 0) throw dim_error("ambient dimension must be positive");
  Cursor c(text, dim);
  Expr e = parse_expr_inner(c);
  if (!c.at_end()) c.fail("unexpected trailing input");
  return e;
}

AfgIdeal elaborate(const Expr& e, std::size_t dim) {
  struct Lower {
    std::size_t dim;
    AfgIdeal operator()(const BoxIdeal& b) const {
      return normalize_sum(AfgIdeal{dim, {b}});
    }
    AfgIdeal operator()(const IrreducibleIdeal& j) const { return irr_to_afg(j); }
    AfgIdeal operator()(const PurePowerIdeal& p) const {
      BoxIdeal b;
      b.rays.assign(dim, Ray(ExtExp(Rational(0)), Flag::closed));
      b.rays[p.var] = p.ray;
      return normalize_sum(AfgIdeal{dim, {std::move(b)}});
    }
    AfgIdeal operator()(const FiniteGeneratorSet& s) const {
      return normalize_sum(finite_gen_to_afg(s));
    }
    AfgIdeal operator()(const SumExpr& s) const {
      AfgIdeal acc{dim, {}};
      for (const Expr& t : s.terms) acc = afg_sum(acc, elaborate(t, dim));
      return acc;
    }
    AfgIdeal operator()(const CapExpr& s) const {
      AfgIdeal acc = elaborate(s.terms.front(), dim);
      for (std::size_t i = 1; i < s.terms.size(); ++i)
        acc = afg_intersect(acc, elaborate(s.terms[i], dim));
      return acc;
    }
  };
  return std::visit(Lower{dim}, e.node);
}

AfgIdeal parse_ideal(std::string_view text, std::size_t dim) {
  return elaborate(parse_expr(text, dim), dim);
}

Monomial parse_monomial(std::string_view text, std::size_t dim) {
  if (dim == 0) throw dim_error("ambient dimension must be positive");
  Cursor c(text, dim);
  Monomial m = monomial_inner(c);
  if (!c.at_end()) c.fail("unexpected trailing input");
  return m;
}

}  // namespace midr
