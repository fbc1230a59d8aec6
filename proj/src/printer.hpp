#pragma once

#include <span>
#include <string>

#include "ideals.hpp"

namespace midr {

/// Canonical text in the expression grammar. Values are normalized before
/// printing and terms are sorted by (bound vector, flag vector), so equal
/// inputs produced by the algebra print identically. The zero sum prints as
/// the all-infinite box; the unit intersection prints as the vacuous
/// irreducible.
std::string print_canonical(const AfgIdeal& a);
std::string print_canonical(const Decomposition& d);

/// X1^e1*...*Xd^ed with zero exponents omitted; "1" for the identity.
std::string monomial_text(const Monomial& m);

/// Witness point, e.g. "(1,3/2+)": a trailing '+' marks a coordinate
/// infinitesimally above the printed value.
std::string witness_text(std::span<const PerturbedCoord> point);

}  // namespace midr
