#pragma once

#include <span>
#include <string>
#include <vector>

#include "ideals.hpp"

namespace midr {

/// One corner of the boundary of a two-dimensional membership region. An
/// open flag means the bound value itself is excluded on that side.
struct StaircaseCorner {
  Rational x;
  Rational y;
  bool x_open = false;
  bool y_open = false;
};

/// The descending staircase bounding a nonzero two-dimensional sum: one
/// corner per surviving box after absorbed boxes are dropped, with x
/// strictly increasing and y strictly decreasing. Throws dim_error unless
/// the ideal is two-dimensional and value_error on the zero ideal (empty
/// region).
std::vector<StaircaseCorner> staircase_2d(const AfgIdeal& a);

/// One corner per line, e.g. "(2,3/2+)" with '+' marking an open bound.
std::string staircase_text(std::span<const StaircaseCorner> path);

/// Standalone SVG image of the staircase: shaded region, boundary (dashed
/// on open bounds), and corner dots (hollow when either bound is open).
std::string staircase_svg(std::span<const StaircaseCorner> path);

}  // namespace midr
