#include "monomial.hpp"

namespace midr {

void require_same_dim(std::size_t a, std::size_t b) {
  if (a != b)
    throw dim_error("operands live in different ambient rings (" +
                    std::to_string(a) + " vs " + std::to_string(b) +
                    " variables)");
}

Monomial::Monomial(std::vector<Rational> exps) : exps_(std::move(exps)) {
  if (exps_.empty()) throw value_error("monomial needs at least one variable");
  for (const Rational& e : exps_)
    if (e < 0) throw value_error("monomial exponents must be nonnegative");
}

Monomial Monomial::identity(std::size_t dim) {
  return Monomial(std::vector<Rational>(dim, Rational(0)));
}

Monomial multiply(const Monomial& f, const Monomial& g) {
  require_same_dim(f.dim(), g.dim());
  std::vector<Rational> out;
  out.reserve(f.dim());
  for (std::size_t i = 0; i < f.dim(); ++i) out.emplace_back(f[i] + g[i]);
  return Monomial(std::move(out));
}

bool divides(const Monomial& f, const Monomial& g) {
  require_same_dim(f.dim(), g.dim());
  for (std::size_t i = 0; i < f.dim(); ++i)
    if (g[i] < f[i]) return false;
  return true;
}

Monomial lcm(std::span<const Monomial> fs) {
  if (fs.empty()) throw value_error("lcm of an empty monomial list");
  std::vector<Rational> out = fs.front().exps();
  for (const Monomial& f : fs.subspan(1)) {
    require_same_dim(fs.front().dim(), f.dim());
    for (std::size_t i = 0; i < out.size(); ++i)
      if (f[i] > out[i]) out[i] = f[i];
  }
  return Monomial(std::move(out));
}

}  // namespace midr
