#pragma once

// Shared helpers for the test suites: literal builders, seeded random value
// generators, and a rationalizer that turns perturbed witness points into
// plain rational points small enough to stay on the correct side of every
// bound in sight.

#include <cstdint>
#include <random>
#include <vector>

#include "decompose.hpp"
#include "grid.hpp"
#include "ideals.hpp"

namespace midr::testing {

inline Rational rat(long num, long den = 1) { return make_rational(num, den); }

inline ExtExp fin(long num, long den = 1) { return ExtExp(rat(num, den)); }

inline ExtExp inf() { return ExtExp::infinity(); }

inline Ray ray(ExtExp a, int eps) {
  return Ray(std::move(a), eps ? Flag::open : Flag::closed);
}

inline BoxIdeal box(std::vector<Ray> rays) { return BoxIdeal{std::move(rays)}; }

inline IrreducibleIdeal irr(std::vector<Ray> rays) {
  return IrreducibleIdeal{std::move(rays)};
}

inline Monomial mono(std::vector<Rational> exps) {
  return Monomial(std::move(exps));
}

inline Monomial mono2(long nx, long dx, long ny, long dy) {
  return Monomial({rat(nx, dx), rat(ny, dy)});
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& raw() { return rng_; }

  long pick(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng_);
  }

  bool chance(double p) {
    return std::uniform_real_distribution<double>(0, 1)(rng_) < p;
  }

  Rational rational(long max_num = 24, long max_den = 12) {
    long den = pick(1, max_den);
    return make_rational(pick(0, max_num), den);
  }

  Ray finite_ray(long max_num = 24, long max_den = 12) {
    return Ray(ExtExp(rational(max_num, max_den)),
               chance(0.5) ? Flag::open : Flag::closed);
  }

  Ray any_ray(double p_inf = 0.125) {
    if (chance(p_inf))
      return Ray(ExtExp::infinity(), chance(0.5) ? Flag::open : Flag::closed);
    return finite_ray();
  }

  Monomial monomial(std::size_t dim, long max_num = 24, long max_den = 12) {
    std::vector<Rational> exps;
    exps.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) exps.push_back(rational(max_num, max_den));
    return Monomial(std::move(exps));
  }

  BoxIdeal random_box(std::size_t dim, double p_inf = 0.08) {
    BoxIdeal b;
    b.rays.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) b.rays.push_back(any_ray(p_inf));
    return b;
  }

  IrreducibleIdeal random_irr(std::size_t dim, double p_inf = 0.3) {
    IrreducibleIdeal j;
    j.rays.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) j.rays.push_back(any_ray(p_inf));
    return j;
  }

  AfgIdeal random_afg(std::size_t dim, std::size_t max_boxes = 4) {
    AfgIdeal a{dim, {}};
    std::size_t n = static_cast<std::size_t>(pick(0, static_cast<long>(max_boxes)));
    for (std::size_t i = 0; i < n; ++i) a.boxes.push_back(random_box(dim));
    return a;
  }

  Decomposition random_decomp(std::size_t dim, std::size_t max_comps = 4) {
    Decomposition d{dim, {}};
    std::size_t n = static_cast<std::size_t>(pick(0, static_cast<long>(max_comps)));
    for (std::size_t i = 0; i < n; ++i) d.components.push_back(random_irr(dim));
    return d;
  }

  FiniteGeneratorSet random_fgs(std::size_t dim, std::size_t max_gens = 4,
                                long max_num = 12, long max_den = 6) {
    FiniteGeneratorSet s{dim, {}};
    std::size_t n = static_cast<std::size_t>(pick(0, static_cast<long>(max_gens)));
    for (std::size_t i = 0; i < n; ++i)
      s.gens.push_back(monomial(dim, max_num, max_den));
    return s;
  }

 private:
  std::mt19937_64 rng_;
};

/// Replaces every infinitesimal offset in a witness by an explicit rational
/// eta chosen below half the least positive gap between any two bound or
/// base values of the given ideals, so the rational point classifies the
/// same way against every ray involved.
inline Monomial rationalize_witness(const std::vector<PerturbedCoord>& point,
                                    std::initializer_list<const AfgIdeal*> context) {
  std::vector<Rational> values;
  for (const PerturbedCoord& p : point) values.push_back(p.base);
  for (const AfgIdeal* a : context)
    for (const BoxIdeal& b : a->boxes)
      for (const Ray& r : b.rays)
        if (!r.alpha.is_infinite()) values.push_back(r.alpha.finite_value());

  Rational eta(1, 2);
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = 0; j < values.size(); ++j) {
      Rational gap = values[i] - values[j];
      if (gap > 0 && gap / 2 < eta) eta = gap / 2;
    }

  std::vector<Rational> coords;
  coords.reserve(point.size());
  for (const PerturbedCoord& p : point)
    coords.push_back(p.plus ? Rational(p.base + eta) : p.base);
  return Monomial(std::move(coords));
}

}  // namespace midr::testing
