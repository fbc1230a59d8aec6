#include "decompose.hpp"

#include <algorithm>

namespace midr {

namespace {

IrreducibleIdeal zero_irreducible(std::size_t dim) {
  IrreducibleIdeal j;
  j.rays.assign(dim, Ray(ExtExp::infinity(), Flag::closed));
  return j;
}

BoxIdeal unit_box(std::size_t dim) {
  BoxIdeal b;
  b.rays.assign(dim, Ray(ExtExp(Rational(0)), Flag::closed));
  return b;
}

}  // namespace

Decomposition decompose(const AfgIdeal& a) {
  AfgIdeal sum = normalize_sum(a);
  if (sum.boxes.empty())
    return Decomposition{a.dim, {zero_irreducible(a.dim)}};

  // First box: its pure-power intersection, one component per variable.
  Decomposition acc{a.dim, {}};
  for (const PurePowerIdeal& p : box_as_intersection(sum.boxes.front())) {
    IrreducibleIdeal j = zero_irreducible(a.dim);
    if (!p.ray.empty()) j.rays[p.var] = p.ray;
    acc.components.push_back(std::move(j));
  }
  acc = normalize_intersection(acc);

  // Adding a box distributes over the accumulated intersection: each
  // component picks up one of the box's pure powers, merged into the
  // matching variable's ray.
  for (std::size_t t = 1; t < sum.boxes.size(); ++t) {
    const BoxIdeal& box = sum.boxes[t];
    Decomposition next{a.dim, {}};
    for (const IrreducibleIdeal& j : acc.components) {
      for (std::size_t i = 0; i < a.dim; ++i) {
        IrreducibleIdeal merged = j;
        const Ray pair[2] = {j.rays[i], box.rays[i]};
        merged.rays[i] = merge_sum_same_var(pair);
        next.components.push_back(std::move(merged));
      }
    }
    acc = normalize_intersection(next);
  }
  return acc;  // empty when the sum was the unit ideal
}

AfgIdeal recompose(const Decomposition& d) {
  Decomposition inter = normalize_intersection(d);
  if (inter.components.empty()) return AfgIdeal{d.dim, {unit_box(d.dim)}};

  AfgIdeal acc = irr_to_afg(inter.components.front());
  for (std::size_t t = 1; t < inter.components.size(); ++t) {
    const IrreducibleIdeal& j = inter.components[t];
    AfgIdeal next{d.dim, {}};
    for (const BoxIdeal& b : acc.boxes) {
      for (std::size_t i = 0; i < d.dim; ++i) {
        if (j.rays[i].empty()) continue;  // no generators from this variable
        BoxIdeal merged = b;
        const Ray pair[2] = {b.rays[i], j.rays[i]};
        merged.rays[i] = merge_intersect_same_var(pair);
        next.boxes.push_back(std::move(merged));
      }
    }
    acc = normalize_sum(next);
  }
  return acc;
}

AfgIdeal irr_to_afg(const IrreducibleIdeal& j) {
  AfgIdeal out{j.dim(), {}};
  for (const PurePowerIdeal& p : irr_as_sum(j)) {
    if (p.ray.empty()) continue;
    BoxIdeal b = unit_box(j.dim());
    b.rays[p.var] = p.ray;
    out.boxes.push_back(std::move(b));
  }
  return normalize_sum(out);
}

namespace {

bool perturbed_in_box(const std::vector<PerturbedCoord>& p, const BoxIdeal& b) {
  for (std::size_t i = 0; i < b.dim(); ++i)
    if (!perturbed_satisfies(p[i], b.rays[i])) return false;
  return true;
}

bool perturbed_in_afg(const std::vector<PerturbedCoord>& p, const AfgIdeal& a) {
  return std::any_of(a.boxes.begin(), a.boxes.end(),
                     [&](const BoxIdeal& b) { return perturbed_in_box(p, b); });
}

bool perturbed_less(const PerturbedCoord& a, const PerturbedCoord& b) {
  if (a.base != b.base) return a.base < b.base;
  return a.plus < b.plus;
}

}  // namespace

ContainsResult contains(const AfgIdeal& outer, const AfgIdeal& inner) {
  require_same_dim(outer.dim, inner.dim);
  const std::size_t dim = outer.dim;

  for (const BoxIdeal& box : inner.boxes) {
    if (box.zero()) continue;

    // Candidate coordinates: the box's own corner, plus every finite bound
    // of the outer sum (exact and just above), kept when they satisfy the
    // box's ray. Sorted so the least counterexample is reported.
    std::vector<std::vector<PerturbedCoord>> cands(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      const Ray& ray = box.rays[i];
      std::vector<PerturbedCoord> cs;
      cs.push_back({ray.alpha.finite_value(), ray.eps == Flag::open});
      for (const BoxIdeal& ob : outer.boxes) {
        if (ob.rays[i].alpha.is_infinite()) continue;
        const Rational& v = ob.rays[i].alpha.finite_value();
        cs.push_back({v, false});
        cs.push_back({v, true});
      }
      std::erase_if(cs, [&](const PerturbedCoord& p) {
        return !perturbed_satisfies(p, ray);
      });
      std::sort(cs.begin(), cs.end(), perturbed_less);
      cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
      cands[i] = std::move(cs);
    }

    std::vector<std::size_t> pick(dim, 0);
    for (;;) {
      std::vector<PerturbedCoord> point;
      point.reserve(dim);
      for (std::size_t i = 0; i < dim; ++i) point.push_back(cands[i][pick[i]]);
      if (!perturbed_in_afg(point, outer))
        return {false, std::move(point)};
      std::size_t i = dim;
      while (i > 0 && ++pick[i - 1] == cands[i - 1].size()) pick[--i] = 0;
      if (i == 0) break;
    }
  }
  return {true, std::nullopt};
}

bool equal(const AfgIdeal& a, const AfgIdeal& b) {
  return contains(a, b).contained && contains(b, a).contained;
}

Decomposition remove_redundant(const Decomposition& d) {
  Decomposition cur = normalize_intersection(d);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t t = 0; t < cur.components.size();) {
      Decomposition reduced{cur.dim, {}};
      for (std::size_t u = 0; u < cur.components.size(); ++u)
        if (u != t) reduced.components.push_back(cur.components[u]);
      AfgIdeal rest = recompose(reduced);
      if (contains(irr_to_afg(cur.components[t]), rest).contained) {
        cur = std::move(reduced);
        changed = true;
      } else {
        ++t;
      }
    }
  }
  return cur;
}

IrreducibilityResult is_m_irreducible(const AfgIdeal& a) {
  Decomposition d = remove_redundant(decompose(a));
  if (d.components.size() <= 1) return {true, std::nullopt};
  return {false, std::make_pair(d.components[0], d.components[1])};
}

}  // namespace midr
