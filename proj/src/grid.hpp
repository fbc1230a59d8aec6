#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ideals.hpp"

namespace midr {

/// Builds the default test-point set for a family of ideals: the cartesian
/// product, per coordinate, of every bound value appearing in the inputs
/// together with its neighbors at distance 1/Q (clamped at 0), where
/// Q = 2*lcm(denominators)+1 keeps neighbors strictly between adjacent
/// bounds; plus a batch of uniformly random rational points.
class GridBuilder {
 public:
  explicit GridBuilder(std::size_t dim) : dim_(dim), bounds_(dim) {}

  GridBuilder& add(const BoxIdeal& b);
  GridBuilder& add(const IrreducibleIdeal& j);
  GridBuilder& add(const AfgIdeal& a);
  GridBuilder& add(const Decomposition& d);
  GridBuilder& add(const FiniteGeneratorSet& s);

  std::vector<Monomial> build(std::uint64_t seed,
                              unsigned random_points = 100) const;

 private:
  std::size_t dim_;
  std::vector<std::vector<Rational>> bounds_;
};

// Naive membership, evaluated directly from the generator descriptions with
// plain rational comparisons. This is the ground truth the algebraic
// operations are checked against; it deliberately shares no code with the
// membership or merge routines.
namespace oracle {

bool member(const Monomial& m, const BoxIdeal& b);
bool member(const Monomial& m, const IrreducibleIdeal& j);
bool member(const Monomial& m, const AfgIdeal& a);
bool member(const Monomial& m, const Decomposition& d);
bool member(const Monomial& m, const FiniteGeneratorSet& s);

template <typename Ideal>
std::vector<bool> bitmap(const Ideal& x, std::span<const Monomial> points) {
  std::vector<bool> out;
  out.reserve(points.size());
  for (const Monomial& p : points) out.push_back(member(p, x));
  return out;
}

}  // namespace oracle

}  // namespace midr
