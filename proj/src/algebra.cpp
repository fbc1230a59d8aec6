#include "algebra.hpp"

#include <algorithm>

namespace midr {

Ray merge_intersect_same_var(std::span<const Ray> rays) {
  if (rays.empty()) return Ray(ExtExp(Rational(0)), Flag::closed);
  ExtExp best = rays.front().alpha;
  for (const Ray& r : rays.subspan(1))
    if (r.alpha > best) best = r.alpha;
  if (best.is_infinite()) return Ray(ExtExp::infinity(), Flag::closed);
  Flag flag = Flag::closed;
  for (const Ray& r : rays)
    if (r.alpha == best && r.eps == Flag::open) flag = Flag::open;
  return Ray(best, flag);
}

Ray merge_sum_same_var(std::span<const Ray> rays) {
  if (rays.empty()) return Ray(ExtExp::infinity(), Flag::closed);
  ExtExp best = rays.front().alpha;
  for (const Ray& r : rays.subspan(1))
    if (r.alpha < best) best = r.alpha;
  if (best.is_infinite()) return Ray(ExtExp::infinity(), Flag::closed);
  Flag flag = Flag::open;
  for (const Ray& r : rays)
    if (r.alpha == best && r.eps == Flag::closed) flag = Flag::closed;
  return Ray(best, flag);
}

namespace {

std::vector<std::vector<Ray>> group_by_var(
    std::span<const std::pair<std::size_t, Ray>> terms, std::size_t dim) {
  std::vector<std::vector<Ray>> groups(dim);
  for (const auto& [var, ray] : terms) {
    if (var >= dim)
      throw value_error("variable index " + std::to_string(var + 1) +
                        " outside 1.." + std::to_string(dim));
    groups[var].push_back(ray);
  }
  return groups;
}

}  // namespace

BoxIdeal intersect_pure(std::span<const std::pair<std::size_t, Ray>> terms,
                        std::size_t dim) {
  auto groups = group_by_var(terms, dim);
  BoxIdeal out;
  out.rays.reserve(dim);
  for (const auto& g : groups) out.rays.push_back(merge_intersect_same_var(g));
  return out;
}

IrreducibleIdeal sum_pure(std::span<const std::pair<std::size_t, Ray>> terms,
                          std::size_t dim) {
  auto groups = group_by_var(terms, dim);
  IrreducibleIdeal out;
  out.rays.reserve(dim);
  for (const auto& g : groups) out.rays.push_back(merge_sum_same_var(g));
  return out;
}

std::vector<PurePowerIdeal> box_as_intersection(const BoxIdeal& b) {
  std::vector<PurePowerIdeal> out;
  out.reserve(b.dim());
  for (std::size_t i = 0; i < b.dim(); ++i)
    out.push_back(PurePowerIdeal{i, b.rays[i]});
  return out;
}

std::vector<PurePowerIdeal> irr_as_sum(const IrreducibleIdeal& j) {
  std::vector<PurePowerIdeal> out;
  out.reserve(j.dim());
  for (std::size_t i = 0; i < j.dim(); ++i)
    out.push_back(PurePowerIdeal{i, j.rays[i]});
  return out;
}

FiniteGeneratorSet intersect_finite_generated(
    std::span<const FiniteGeneratorSet> sets) {
  if (sets.empty()) throw value_error("intersection of zero generator sets");
  const std::size_t dim = sets.front().dim;
  for (const FiniteGeneratorSet& s : sets) require_same_dim(dim, s.dim);
  for (const FiniteGeneratorSet& s : sets)
    if (s.gens.empty()) return FiniteGeneratorSet{dim, {}};

  // All lcm combinations, one generator per set.
  std::vector<Monomial> gens;
  std::vector<std::size_t> pick(sets.size(), 0);
  for (;;) {
    Monomial m = sets[0].gens[pick[0]];
    for (std::size_t i = 1; i < sets.size(); ++i) {
      const Monomial pair[2] = {m, sets[i].gens[pick[i]]};
      m = lcm(pair);
    }
    if (std::find(gens.begin(), gens.end(), m) == gens.end())
      gens.push_back(std::move(m));
    std::size_t i = 0;
    while (i < sets.size() && ++pick[i] == sets[i].gens.size()) pick[i++] = 0;
    if (i == sets.size()) break;
  }

  // Drop generators that are multiples of other (distinct) generators.
  std::vector<Monomial> reduced;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    bool dominated = false;
    for (std::size_t i = 0; i < gens.size() && !dominated; ++i)
      dominated = i != j && gens[i] != gens[j] && divides(gens[i], gens[j]);
    if (!dominated) reduced.push_back(gens[j]);
  }
  return FiniteGeneratorSet{dim, std::move(reduced)};
}

std::vector<FiniteGeneratorSet> split_at_monomial(const FiniteGeneratorSet& g,
                                                  const Monomial& b) {
  require_same_dim(g.dim, b.dim());
  if (!fg_member(b, g))
    throw value_error("monomial is not in the ideal being split");
  std::vector<FiniteGeneratorSet> out;
  out.reserve(g.dim);
  for (std::size_t j = 0; j < g.dim; ++j) {
    FiniteGeneratorSet part = g;
    std::vector<Rational> pure(g.dim, Rational(0));
    pure[j] = b[j];
    part.gens.push_back(Monomial(std::move(pure)));
    out.push_back(std::move(part));
  }
  return out;
}

AfgIdeal finite_gen_to_afg(const FiniteGeneratorSet& s) {
  AfgIdeal out{s.dim, {}};
  out.boxes.reserve(s.gens.size());
  for (const Monomial& g : s.gens) {
    BoxIdeal b;
    b.rays.reserve(s.dim);
    for (std::size_t i = 0; i < s.dim; ++i)
      b.rays.emplace_back(ExtExp(g[i]), Flag::closed);
    out.boxes.push_back(std::move(b));
  }
  return out;
}

BoxIdeal box_intersect(const BoxIdeal& a, const BoxIdeal& b) {
  require_same_dim(a.dim(), b.dim());
  BoxIdeal out;
  out.rays.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Ray pair[2] = {a.rays[i], b.rays[i]};
    out.rays.push_back(merge_intersect_same_var(pair));
  }
  return out;
}

AfgIdeal afg_intersect(const AfgIdeal& a, const AfgIdeal& b) {
  require_same_dim(a.dim, b.dim);
  AfgIdeal out{a.dim, {}};
  for (const BoxIdeal& x : a.boxes)
    for (const BoxIdeal& y : b.boxes) out.boxes.push_back(box_intersect(x, y));
  return normalize_sum(out);
}

AfgIdeal afg_sum(const AfgIdeal& a, const AfgIdeal& b) {
  require_same_dim(a.dim, b.dim);
  AfgIdeal out{a.dim, a.boxes};
  out.boxes.insert(out.boxes.end(), b.boxes.begin(), b.boxes.end());
  return normalize_sum(out);
}

}  // namespace midr
