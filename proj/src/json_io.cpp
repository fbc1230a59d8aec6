#include "json_io.hpp"

#include <algorithm>

namespace midr {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ordered_json term_json(const std::vector<Ray>& rays) {
  ordered_json alpha = ordered_json::array();
  ordered_json eps = ordered_json::array();
  for (const Ray& r : rays) {
    alpha.push_back(extexp_text(r.alpha));
    eps.push_back(r.eps == Flag::open ? 1 : 0);
  }
  return ordered_json{{"alpha", std::move(alpha)}, {"eps", std::move(eps)}};
}

ExtExp bound_from_json(const json& v) {
  if (!v.is_string()) throw parse_error("bound must be a string", 0);
  const std::string& s = v.get_ref<const json::string_t&>();
  if (s == "inf") return ExtExp::infinity();
  auto q = parse_rational(s);
  if (!q) throw parse_error("malformed bound \"" + s + "\"", 0);
  return ExtExp(*q);
}

std::vector<Ray> rays_from_json(const json& term, std::size_t dim) {
  if (!term.is_object() || !term.contains("alpha") || !term.contains("eps"))
    throw parse_error("term must carry alpha and eps arrays", 0);
  const json& alpha = term["alpha"];
  const json& eps = term["eps"];
  if (!alpha.is_array() || !eps.is_array() || alpha.size() != dim ||
      eps.size() != dim)
    throw parse_error("term arity does not match dim", 0);
  std::vector<Ray> rays;
  rays.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (!eps[i].is_number_integer() ||
        (eps[i].get<int>() != 0 && eps[i].get<int>() != 1))
      throw parse_error("eps entries must be 0 or 1", 0);
    rays.emplace_back(bound_from_json(alpha[i]),
                      eps[i].get<int>() == 1 ? Flag::open : Flag::closed);
  }
  return rays;
}

std::size_t dim_from_json(const json& j, const char* form) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("form") ||
      !j.contains("terms"))
    throw parse_error("ideal JSON needs dim, form and terms", 0);
  if (j["form"] != form)
    throw parse_error(std::string("expected form \"") + form + "\"", 0);
  if (!j["dim"].is_number_unsigned() || j["dim"].get<std::size_t>() == 0)
    throw parse_error("dim must be a positive integer", 0);
  if (!j["terms"].is_array()) throw parse_error("terms must be an array", 0);
  return j["dim"].get<std::size_t>();
}

}  // namespace

ordered_json ideal_json(const AfgIdeal& a) {
  AfgIdeal v = normalize_sum(a);
  std::sort(v.boxes.begin(), v.boxes.end(),
            [](const BoxIdeal& x, const BoxIdeal& y) {
              return box_compare(x, y) < 0;
            });
  ordered_json terms = ordered_json::array();
  for (const BoxIdeal& b : v.boxes) terms.push_back(term_json(b.rays));
  return ordered_json{{"dim", a.dim}, {"form", "sum"}, {"terms", std::move(terms)}};
}

ordered_json ideal_json(const Decomposition& d) {
  Decomposition v = normalize_intersection(d);
  std::sort(v.components.begin(), v.components.end(),
            [](const IrreducibleIdeal& x, const IrreducibleIdeal& y) {
              return irr_compare(x, y) < 0;
            });
  ordered_json terms = ordered_json::array();
  for (const IrreducibleIdeal& c : v.components) terms.push_back(term_json(c.rays));
  return ordered_json{
      {"dim", d.dim}, {"form", "intersection"}, {"terms", std::move(terms)}};
}

ordered_json ideal_json(const FiniteGeneratorSet& s) {
  std::vector<Monomial> gens = s.gens;
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return a.exps() < b.exps();
  });
  ordered_json terms = ordered_json::array();
  for (const Monomial& g : gens) {
    ordered_json t = ordered_json::array();
    for (std::size_t i = 0; i < g.dim(); ++i) t.push_back(rational_text(g[i]));
    terms.push_back(std::move(t));
  }
  return ordered_json{{"dim", s.dim}, {"form", "gens"}, {"terms", std::move(terms)}};
}

AfgIdeal afg_from_json(const json& j) {
  std::size_t dim = dim_from_json(j, "sum");
  AfgIdeal out{dim, {}};
  for (const json& t : j["terms"]) out.boxes.push_back(BoxIdeal{rays_from_json(t, dim)});
  return out;
}

Decomposition decomp_from_json(const json& j) {
  std::size_t dim = dim_from_json(j, "intersection");
  Decomposition out{dim, {}};
  for (const json& t : j["terms"])
    out.components.push_back(IrreducibleIdeal{rays_from_json(t, dim)});
  return out;
}

FiniteGeneratorSet fgs_from_json(const json& j) {
  std::size_t dim = dim_from_json(j, "gens");
  FiniteGeneratorSet out{dim, {}};
  for (const json& t : j["terms"]) {
    if (!t.is_array() || t.size() != dim)
      throw parse_error("generator arity does not match dim", 0);
    std::vector<Rational> exps;
    exps.reserve(dim);
    for (const json& v : t) {
      if (!v.is_string()) throw parse_error("exponent must be a string", 0);
      auto q = parse_rational(v.get_ref<const json::string_t&>());
      if (!q) throw parse_error("malformed exponent", 0);
      exps.push_back(*q);
    }
    out.gens.push_back(Monomial(std::move(exps)));
  }
  return out;
}

ordered_json witness_json(std::span<const PerturbedCoord> point) {
  ordered_json coords = ordered_json::array();
  for (const PerturbedCoord& p : point)
    coords.push_back(ordered_json{{"v", rational_text(p.base)}, {"open", p.plus}});
  return ordered_json{{"point", std::move(coords)}};
}

ordered_json staircase_json(std::span<const StaircaseCorner> path) {
  ordered_json out = ordered_json::array();
  for (const StaircaseCorner& c : path)
    out.push_back(ordered_json{{"x", rational_text(c.x)},
                               {"y", rational_text(c.y)},
                               {"x_open", c.x_open},
                               {"y_open", c.y_open}});
  return out;
}

}  // namespace midr
