#include "exponent.hpp"

namespace midr {

std::string extexp_text(const ExtExp& e) {
  return e.is_infinite() ? "inf" : rational_text(e.finite_value());
}

bool geq_eps(const ExtExp& r, const ExtExp& alpha, Flag eps) {
  if (alpha.is_infinite()) return r.is_infinite();
  if (r.is_infinite()) return true;
  return eps == Flag::closed ? r.finite_value() >= alpha.finite_value()
                             : r.finite_value() > alpha.finite_value();
}

bool ray_subset(const Ray& a, const Ray& b) {
  if (a.empty()) return true;
  if (b.empty()) return false;
  const Rational& va = a.alpha.finite_value();
  const Rational& vb = b.alpha.finite_value();
  if (va > vb) return true;
  if (va < vb) return false;
  return b.eps == Flag::closed || a.eps == Flag::open;
}

int ray_compare(const Ray& a, const Ray& b) {
  if (a.alpha < b.alpha) return -1;
  if (b.alpha < a.alpha) return 1;
  if (a.eps == b.eps) return 0;
  return a.eps == Flag::closed ? -1 : 1;
}

bool perturbed_satisfies(const PerturbedCoord& p, const Ray& ray) {
  if (ray.empty()) return false;
  const Rational& bound = ray.alpha.finite_value();
  if (p.plus) return p.base >= bound;
  return ray.eps == Flag::closed ? p.base >= bound : p.base > bound;
}

}  // namespace midr
