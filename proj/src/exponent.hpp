#pragma once

#include <string>

#include "errors.hpp"
#include "rational.hpp"

namespace midr {

/// An exponent bound: a nonnegative rational or infinity. The order is the
/// rational order with infinity strictly above every finite value.
///
/// Infinity encodes "no generator from this variable": a variable raised to
/// the infinite power is the zero element, so a ray with an infinite bound
/// is empty.
class ExtExp {
 public:
  ExtExp() : inf_(false), value_(0) {}

  /// Finite value; throws value_error if negative.
  explicit ExtExp(Rational v) : inf_(false), value_(std::move(v)) {
    if (value_ < 0) throw value_error("exponent bound must be nonnegative");
  }

  static ExtExp infinity() {
    ExtExp e;
    e.inf_ = true;
    return e;
  }

  bool is_infinite() const { return inf_; }

  /// Precondition: finite.
  const Rational& finite_value() const { return value_; }

  friend bool operator==(const ExtExp& a, const ExtExp& b) {
    if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
    return a.value_ == b.value_;
  }
  friend bool operator!=(const ExtExp& a, const ExtExp& b) { return !(a == b); }
  friend bool operator<(const ExtExp& a, const ExtExp& b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator>(const ExtExp& a, const ExtExp& b) { return b < a; }
  friend bool operator<=(const ExtExp& a, const ExtExp& b) { return !(b < a); }
  friend bool operator>=(const ExtExp& a, const ExtExp& b) { return !(a < b); }

 private:
  bool inf_;
  Rational value_;  // 0 when infinite
};

/// Text form: "p/q", "p", or "inf".
std::string extexp_text(const ExtExp& e);

/// Boundary flag of a ray: closed keeps the bound value, open excludes it.
enum class Flag : unsigned char { closed = 0, open = 1 };

/// r >= alpha (closed) or r > alpha (open); against an infinite bound only
/// infinity itself qualifies.
bool geq_eps(const ExtExp& r, const ExtExp& alpha, Flag eps);

/// The exponent set {r : r >= alpha} or {r : r > alpha} on one axis.
/// Ray(0, closed) is the vacuous constraint (all of the axis); an infinite
/// bound gives the empty set.
struct Ray {
  ExtExp alpha;
  Flag eps = Flag::closed;

  Ray() = default;
  Ray(ExtExp a, Flag e) : alpha(std::move(a)), eps(e) {}

  bool empty() const { return alpha.is_infinite(); }
  bool vacuous() const { return eps == Flag::closed && !alpha.is_infinite() && alpha.finite_value() == 0; }

  friend bool operator==(const Ray& a, const Ray& b) {
    return a.alpha == b.alpha && a.eps == b.eps;
  }
  friend bool operator!=(const Ray& a, const Ray& b) { return !(a == b); }
};

/// Set containment of rays: {r : r >=_a bound_a} inside {r : r >=_b bound_b}.
bool ray_subset(const Ray& a, const Ray& b);

/// Orders rays by (bound, flag) with closed before open; used for canonical
/// printing and deterministic tie-breaking.
int ray_compare(const Ray& a, const Ray& b);

/// A coordinate used as a containment witness: either an exact rational or
/// that rational plus a positive infinitesimal. The "plus" form never equals
/// any rational, so it can sit strictly inside an open bound.
struct PerturbedCoord {
  Rational base;
  bool plus = false;  // false: exact value, true: base + infinitesimal

  friend bool operator==(const PerturbedCoord& a, const PerturbedCoord& b) {
    return a.plus == b.plus && a.base == b.base;
  }
};

/// Whether the (possibly perturbed) coordinate lies in the ray. An
/// infinitesimal bump clears an open bound exactly when base >= bound.
bool perturbed_satisfies(const PerturbedCoord& p, const Ray& ray);

}  // namespace midr
