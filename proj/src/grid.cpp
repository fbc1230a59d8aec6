#include "grid.hpp"

#include <algorithm>
#include <random>

namespace midr {

namespace {

void collect_rays(std::vector<std::vector<Rational>>& bounds,
                  const std::vector<Ray>& rays) {
  for (std::size_t i = 0; i < rays.size(); ++i)
    if (!rays[i].alpha.is_infinite())
      bounds[i].push_back(rays[i].alpha.finite_value());
}

}  // namespace

GridBuilder& GridBuilder::add(const BoxIdeal& b) {
  require_same_dim(dim_, b.dim());
  collect_rays(bounds_, b.rays);
  return *this;
}

GridBuilder& GridBuilder::add(const IrreducibleIdeal& j) {
  require_same_dim(dim_, j.dim());
  collect_rays(bounds_, j.rays);
  return *this;
}

GridBuilder& GridBuilder::add(const AfgIdeal& a) {
  require_same_dim(dim_, a.dim);
  for (const BoxIdeal& b : a.boxes) collect_rays(bounds_, b.rays);
  return *this;
}

GridBuilder& GridBuilder::add(const Decomposition& d) {
  require_same_dim(dim_, d.dim);
  for (const IrreducibleIdeal& j : d.components) collect_rays(bounds_, j.rays);
  return *this;
}

GridBuilder& GridBuilder::add(const FiniteGeneratorSet& s) {
  require_same_dim(dim_, s.dim);
  for (const Monomial& g : s.gens)
    for (std::size_t i = 0; i < dim_; ++i) bounds_[i].push_back(g[i]);
  return *this;
}

std::vector<Monomial> GridBuilder::build(std::uint64_t seed,
                                         unsigned random_points) const {
  mpz_class denom_lcm(1);
  Rational hi(1);
  for (const auto& coord : bounds_)
    for (const Rational& v : coord) {
      mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(),
              v.get_den().get_mpz_t());
      if (v + 1 > hi) hi = v + 1;
    }
  Rational step = make_rational(1, 2 * denom_lcm + 1);

  std::vector<std::vector<Rational>> values(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    std::vector<Rational>& vs = values[i];
    vs.emplace_back(0);
    for (const Rational& v : bounds_[i]) {
      if (v - step >= 0) vs.emplace_back(v - step);
      vs.emplace_back(v);
      vs.emplace_back(v + step);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  }

  std::vector<Monomial> points;
  std::vector<std::size_t> pick(dim_, 0);
  for (;;) {
    std::vector<Rational> coords;
    coords.reserve(dim_);
    for (std::size_t i = 0; i < dim_; ++i) coords.push_back(values[i][pick[i]]);
    points.emplace_back(std::move(coords));
    std::size_t i = 0;
    while (i < dim_ && ++pick[i] == values[i].size()) pick[i++] = 0;
    if (i == dim_) break;
  }

  std::mt19937_64 rng(seed);
  mpz_class hi_floor = hi.get_num() / hi.get_den();
  long num_hi = hi_floor.fits_slong_p() ? hi_floor.get_si() + 1 : 1000000;
  for (unsigned n = 0; n < random_points; ++n) {
    std::vector<Rational> coords;
    coords.reserve(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      long den = std::uniform_int_distribution<long>(1, 12)(rng);
      long num = std::uniform_int_distribution<long>(0, num_hi * den)(rng);
      coords.push_back(make_rational(num, den));
    }
    points.emplace_back(std::move(coords));
  }
  return points;
}

namespace oracle {

namespace {

// r in {x : x >=_eps a}, written out directly.
bool in_ray(const Rational& r, const Ray& ray) {
  if (ray.alpha.is_infinite()) return false;
  const Rational& a = ray.alpha.finite_value();
  return ray.eps == Flag::closed ? r >= a : r > a;
}

}  // namespace

bool member(const Monomial& m, const BoxIdeal& b) {
  for (std::size_t i = 0; i < b.dim(); ++i)
    if (!in_ray(m[i], b.rays[i])) return false;
  return true;
}

bool member(const Monomial& m, const IrreducibleIdeal& j) {
  for (std::size_t i = 0; i < j.dim(); ++i)
    if (in_ray(m[i], j.rays[i])) return true;
  return false;
}

bool member(const Monomial& m, const AfgIdeal& a) {
  for (const BoxIdeal& b : a.boxes)
    if (member(m, b)) return true;
  return false;
}

bool member(const Monomial& m, const Decomposition& d) {
  for (const IrreducibleIdeal& j : d.components)
    if (!member(m, j)) return false;
  return true;
}

bool member(const Monomial& m, const FiniteGeneratorSet& s) {
  for (const Monomial& g : s.gens) {
    bool mult = true;
    for (std::size_t i = 0; i < s.dim && mult; ++i) mult = m[i] >= g[i];
    if (mult) return true;
  }
  return false;
}

}  // namespace oracle

}  // namespace midr
