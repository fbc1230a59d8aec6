#pragma once

#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace midr {

/// A monomial X^r with a finite nonnegative rational exponent vector.
/// The all-zeros vector is the identity monomial.
class Monomial {
 public:
  /// Throws value_error on a negative coordinate or an empty vector.
  explicit Monomial(std::vector<Rational> exps);

  static Monomial identity(std::size_t dim);

  std::size_t dim() const { return exps_.size(); }
  const std::vector<Rational>& exps() const { return exps_; }
  const Rational& operator[](std::size_t i) const { return exps_[i]; }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exps_ == b.exps_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) {
    return !(a == b);
  }

 private:
  std::vector<Rational> exps_;
};

/// X^q * X^r = X^{q+r}. Throws dim_error on mismatched dimensions.
Monomial multiply(const Monomial& f, const Monomial& g);

/// f | g, i.e. g lies in the ideal generated by f: every coordinate of g
/// is at least the corresponding coordinate of f.
bool divides(const Monomial& f, const Monomial& g);

/// Coordinatewise maximum. Throws value_error on an empty list and
/// dim_error on mismatched dimensions.
Monomial lcm(std::span<const Monomial> fs);

void require_same_dim(std::size_t a, std::size_t b);

}  // namespace midr
