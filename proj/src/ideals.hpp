#pragma once

#include <cstddef>
#include <vector>

#include "exponent.hpp"
#include "monomial.hpp"

namespace midr {

/// Ideal generated by pure powers of one variable: all X_var^r with r in the
/// ray. Empty ray (infinite bound) gives the zero ideal; a closed ray at 0
/// gives the unit ideal. `var` is zero-based.
struct PurePowerIdeal {
  std::size_t var = 0;
  Ray ray;
};

/// Ideal generated by pure powers of all variables, one ray per variable,
/// read disjunctively: X_i^{r_i} is a generator whenever r_i lies in
/// rays[i]. The zero ideal has every ray empty; the unit ideal has some
/// vacuous ray (then X_i^0 = 1 is a generator).
struct IrreducibleIdeal {
  std::vector<Ray> rays;

  std::size_t dim() const { return rays.size(); }
  bool zero() const;
  bool unit() const;

  friend bool operator==(const IrreducibleIdeal& a, const IrreducibleIdeal& b) {
    return a.rays == b.rays;
  }
};

/// Ideal generated by all monomials X^r whose exponent vector satisfies
/// every coordinate ray (conjunctive reading). Zero iff some ray is empty;
/// principal iff every ray is finite and closed.
struct BoxIdeal {
  std::vector<Ray> rays;

  std::size_t dim() const { return rays.size(); }
  bool zero() const;

  friend bool operator==(const BoxIdeal& a, const BoxIdeal& b) {
    return a.rays == b.rays;
  }
};

/// Finite sum of box ideals. The empty sum is the zero ideal.
struct AfgIdeal {
  std::size_t dim = 0;
  std::vector<BoxIdeal> boxes;
};

/// Finite intersection of irreducible ideals. The empty intersection is the
/// unit ideal.
struct Decomposition {
  std::size_t dim = 0;
  std::vector<IrreducibleIdeal> components;
};

/// Ideal generated by a finite list of monomials. The empty list is the
/// zero ideal.
struct FiniteGeneratorSet {
  std::size_t dim = 0;
  std::vector<Monomial> gens;
};

// Membership. A monomial is a multiple of a box generator iff it is itself a
// generator (the generator set is upward-closed), so box membership is just
// the conjunction of its rays. All of these throw dim_error on mismatch.
bool box_member(const Monomial& m, const BoxIdeal& b);
bool irr_member(const Monomial& m, const IrreducibleIdeal& j);
bool afg_member(const Monomial& m, const AfgIdeal& a);
bool decomp_member(const Monomial& m, const Decomposition& d);
bool fg_member(const Monomial& m, const FiniteGeneratorSet& s);

enum class BoxClass { zero, principal, open_box };
BoxClass classify_box(const BoxIdeal& b);

/// Whether the ideal has a finite monomial generating set. An open finite
/// ray has no minimal generator, so such a coordinate rules it out unless
/// the ideal collapses to zero (pure power / all-empty irreducible / zero
/// box) or to the unit ideal (vacuous ray in an irreducible).
bool is_finitely_generated(const PurePowerIdeal& p);
bool is_finitely_generated(const IrreducibleIdeal& j);
bool is_finitely_generated(const BoxIdeal& b);

// Containment tested ray-wise; exact for these shapes.
bool box_subset(const BoxIdeal& a, const BoxIdeal& b);
bool irr_subset(const IrreducibleIdeal& a, const IrreducibleIdeal& b);

/// Drops zero boxes and any box contained in another (keeps the first of
/// equal boxes). Preserves the denoted ideal.
AfgIdeal normalize_sum(const AfgIdeal& a);

/// Drops unit components and any component containing another (keeps the
/// first of equal components). Preserves the denoted ideal.
Decomposition normalize_intersection(const Decomposition& d);

// Canonical order used by printers and serializers: all bounds first, then
// all flags, both left to right.
int box_compare(const BoxIdeal& a, const BoxIdeal& b);
int irr_compare(const IrreducibleIdeal& a, const IrreducibleIdeal& b);

}  // namespace midr
