#include "printer.hpp"

#include <algorithm>

namespace midr {

namespace {

std::string ray_vector_text(const std::vector<Ray>& rays) {
  std::string out;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (i) out += ',';
    out += extexp_text(rays[i].alpha);
  }
  out += ';';
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (i) out += ',';
    out += rays[i].eps == Flag::open ? '1' : '0';
  }
  return out;
}

}  // namespace

std::string print_canonical(const AfgIdeal& a) {
  AfgIdeal v = normalize_sum(a);
  if (v.boxes.empty()) {
    std::vector<Ray> zero(a.dim, Ray(ExtExp::infinity(), Flag::closed));
    return "I[" + ray_vector_text(zero) + "]";
  }
  std::sort(v.boxes.begin(), v.boxes.end(),
            [](const BoxIdeal& x, const BoxIdeal& y) {
              return box_compare(x, y) < 0;
            });
  std::string out;
  for (std::size_t i = 0; i < v.boxes.size(); ++i) {
    if (i) out += '+';
    out += "I[" + ray_vector_text(v.boxes[i].rays) + "]";
  }
  return out;
}

std::string print_canonical(const Decomposition& d) {
  Decomposition v = normalize_intersection(d);
  if (v.components.empty()) {
    std::vector<Ray> unit(d.dim, Ray(ExtExp(Rational(0)), Flag::closed));
    return "cap(J[" + ray_vector_text(unit) + "])";
  }
  std::sort(v.components.begin(), v.components.end(),
            [](const IrreducibleIdeal& x, const IrreducibleIdeal& y) {
              return irr_compare(x, y) < 0;
            });
  std::string out = "cap(";
  for (std::size_t i = 0; i < v.components.size(); ++i) {
    if (i) out += ',';
    out += "J[" + ray_vector_text(v.components[i].rays) + "]";
  }
  return out + ")";
}

std::string monomial_text(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += "X" + std::to_string(i + 1);
    if (m[i] != 1) out += "^" + rational_text(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string witness_text(std::span<const PerturbedCoord> point) {
  std::string out = "(";
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i) out += ',';
    out += rational_text(point[i].base);
    if (point[i].plus) out += '+';
  }
  return out + ")";
}

}  // namespace midr
