#pragma once

#include <json.hpp>
#include <span>

#include "ideals.hpp"
#include "staircase.hpp"

namespace midr {

// Canonical JSON forms. Field order is fixed (dim, form, terms; alpha before
// eps) and terms are sorted like the text printer, so serialization is
// byte-stable. "inf" spells the infinite bound.
//
//   {"dim":2,"form":"sum","terms":[{"alpha":["2","3/2"],"eps":[1,0]}]}
//   {"dim":2,"form":"intersection","terms":[...same term shape...]}
//   {"dim":2,"form":"gens","terms":[["1","2"],["2","1"]]}

nlohmann::ordered_json ideal_json(const AfgIdeal& a);
nlohmann::ordered_json ideal_json(const Decomposition& d);
nlohmann::ordered_json ideal_json(const FiniteGeneratorSet& s);

AfgIdeal afg_from_json(const nlohmann::json& j);
Decomposition decomp_from_json(const nlohmann::json& j);
FiniteGeneratorSet fgs_from_json(const nlohmann::json& j);

/// {"point":[{"v":"2","open":true},...]}
nlohmann::ordered_json witness_json(std::span<const PerturbedCoord> point);

/// [{"x":"1","y":"1","x_open":false,"y_open":false},...]
nlohmann::ordered_json staircase_json(std::span<const StaircaseCorner> path);

}  // namespace midr
