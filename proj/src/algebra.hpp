#pragma once

#include <span>
#include <utility>
#include <vector>

#include "ideals.hpp"

namespace midr {

/// Collapses an intersection of same-variable pure-power ideals to one ray:
/// the bound is the maximum (0 for an empty list), and the result is open
/// exactly when some input achieving the maximum is open. An infinite bound
/// canonicalizes to the closed empty ray.
Ray merge_intersect_same_var(std::span<const Ray> rays);

/// Collapses a sum of same-variable pure-power ideals to one ray: the bound
/// is the minimum (infinity for an empty list), and the result is closed
/// exactly when some input achieving the minimum is closed — a closed
/// minimal generator survives in the union of generator sets.
Ray merge_sum_same_var(std::span<const Ray> rays);

/// Intersection of pure-power ideals in arbitrary variables, grouped per
/// variable and merged; variables with no term get the vacuous ray. Throws
/// value_error on a variable index outside 0..dim-1.
BoxIdeal intersect_pure(std::span<const std::pair<std::size_t, Ray>> terms,
                        std::size_t dim);

/// Sum of pure-power ideals in arbitrary variables; variables with no term
/// get the empty ray.
IrreducibleIdeal sum_pure(std::span<const std::pair<std::size_t, Ray>> terms,
                          std::size_t dim);

/// The d pure-power ideals whose intersection is the box.
std::vector<PurePowerIdeal> box_as_intersection(const BoxIdeal& b);

/// The d pure-power ideals whose sum is the irreducible ideal.
std::vector<PurePowerIdeal> irr_as_sum(const IrreducibleIdeal& j);

/// Intersection of finitely generated ideals: generated by the lcms of one
/// generator from each input. Output is deduplicated and divisor-reduced;
/// any empty input collapses the result to the zero ideal.
FiniteGeneratorSet intersect_finite_generated(
    std::span<const FiniteGeneratorSet> sets);

/// For a member X^b of (G)R, the d ideals (G ∪ {X_j^{b_j}})R. Their
/// intersection is (G)R again. Throws value_error if b is not a member.
std::vector<FiniteGeneratorSet> split_at_monomial(const FiniteGeneratorSet& g,
                                                  const Monomial& b);

/// One all-closed box per generator.
AfgIdeal finite_gen_to_afg(const FiniteGeneratorSet& s);

/// Box-with-box and sum-with-sum intersection, distributing over the sums
/// and merging rays per variable. Results are normalized.
BoxIdeal box_intersect(const BoxIdeal& a, const BoxIdeal& b);
AfgIdeal afg_intersect(const AfgIdeal& a, const AfgIdeal& b);

/// Concatenated sum, normalized.
AfgIdeal afg_sum(const AfgIdeal& a, const AfgIdeal& b);

}  // namespace midr
