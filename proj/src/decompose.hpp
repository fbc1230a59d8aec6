#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "ideals.hpp"

namespace midr {

/// A finite m-irreducible decomposition of the sum. Each box is expanded
/// into its per-variable pure-power intersection and the sum is distributed
/// over those intersections one box at a time, collapsing same-variable sums
/// as it goes; unit and absorbed components are dropped after every step.
/// The zero ideal (empty sum) yields the single all-empty component.
///
/// The result is not guaranteed irredundant; see remove_redundant.
Decomposition decompose(const AfgIdeal& a);

/// The reverse direction: each component expands into its per-variable
/// pure-power sum and the intersection is distributed into a sum of boxes.
/// The unit ideal (empty intersection) yields the single vacuous box.
AfgIdeal recompose(const Decomposition& d);

/// A single irreducible component as a sum of pure-power boxes.
AfgIdeal irr_to_afg(const IrreducibleIdeal& j);

struct ContainsResult {
  bool contained = false;
  /// Set when not contained: a point in the right-hand ideal's region that
  /// lies outside the left-hand ideal's region.
  std::optional<std::vector<PerturbedCoord>> witness;
};

/// Decides whether `inner` is a subideal of `outer`. Regions here are finite
/// unions of upward-closed boxes, so a minimal counterexample can always be
/// pushed coordinatewise down onto a bound value of one of the operands or
/// its infinitesimal successor; the decision tests exactly that candidate
/// grid.
ContainsResult contains(const AfgIdeal& outer, const AfgIdeal& inner);

/// Mutual containment. Canonical forms are never compared.
bool equal(const AfgIdeal& a, const AfgIdeal& b);

/// Greedily removes components whose removal keeps the intersection inside
/// them, scanning in input order until a fixed point. The result denotes the
/// same ideal and no single component can be removed from it.
Decomposition remove_redundant(const Decomposition& d);

struct IrreducibilityResult {
  bool irreducible = false;
  /// Set when reducible: two components of an irredundant decomposition,
  /// each strictly containing the ideal.
  std::optional<std::pair<IrreducibleIdeal, IrreducibleIdeal>> witness;
};

/// An ideal is m-irreducible exactly when its irredundant decomposition has
/// at most one component (zero components meaning the unit ideal).
IrreducibilityResult is_m_irreducible(const AfgIdeal& a);

}  // namespace midr
