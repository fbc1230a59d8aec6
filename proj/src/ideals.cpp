#include "ideals.hpp"

#include <algorithm>

namespace midr {

bool IrreducibleIdeal::zero() const {
  return std::all_of(rays.begin(), rays.end(),
                     [](const Ray& r) { return r.empty(); });
}

bool IrreducibleIdeal::unit() const {
  return std::any_of(rays.begin(), rays.end(),
                     [](const Ray& r) { return r.vacuous(); });
}

bool BoxIdeal::zero() const {
  return std::any_of(rays.begin(), rays.end(),
                     [](const Ray& r) { return r.empty(); });
}

bool box_member(const Monomial& m, const BoxIdeal& b) {
  require_same_dim(m.dim(), b.dim());
  for (std::size_t i = 0; i < b.dim(); ++i)
    if (!geq_eps(ExtExp(m[i]), b.rays[i].alpha, b.rays[i].eps)) return false;
  return true;
}

bool irr_member(const Monomial& m, const IrreducibleIdeal& j) {
  require_same_dim(m.dim(), j.dim());
  for (std::size_t i = 0; i < j.dim(); ++i)
    if (geq_eps(ExtExp(m[i]), j.rays[i].alpha, j.rays[i].eps)) return true;
  return false;
}

bool afg_member(const Monomial& m, const AfgIdeal& a) {
  require_same_dim(m.dim(), a.dim);
  return std::any_of(a.boxes.begin(), a.boxes.end(),
                     [&](const BoxIdeal& b) { return box_member(m, b); });
}

bool decomp_member(const Monomial& m, const Decomposition& d) {
  require_same_dim(m.dim(), d.dim);
  return std::all_of(d.components.begin(), d.components.end(),
                     [&](const IrreducibleIdeal& j) { return irr_member(m, j); });
}

bool fg_member(const Monomial& m, const FiniteGeneratorSet& s) {
  require_same_dim(m.dim(), s.dim);
  return std::any_of(s.gens.begin(), s.gens.end(),
                     [&](const Monomial& g) { return divides(g, m); });
}

BoxClass classify_box(const BoxIdeal& b) {
  if (b.zero()) return BoxClass::zero;
  bool all_closed = std::all_of(b.rays.begin(), b.rays.end(), [](const Ray& r) {
    return r.eps == Flag::closed;
  });
  return all_closed ? BoxClass::principal : BoxClass::open_box;
}

bool is_finitely_generated(const PurePowerIdeal& p) {
  return p.ray.empty() || p.ray.eps == Flag::closed;
}

bool is_finitely_generated(const IrreducibleIdeal& j) {
  if (j.unit()) return true;  // generated by 1 whatever the other rays say
  return std::all_of(j.rays.begin(), j.rays.end(), [](const Ray& r) {
    return r.empty() || r.eps == Flag::closed;
  });
}

bool is_finitely_generated(const BoxIdeal& b) {
  if (b.zero()) return true;  // generated by the empty set
  return std::all_of(b.rays.begin(), b.rays.end(), [](const Ray& r) {
    return r.eps == Flag::closed;
  });
}

bool box_subset(const BoxIdeal& a, const BoxIdeal& b) {
  require_same_dim(a.dim(), b.dim());
  if (a.zero()) return true;
  if (b.zero()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!ray_subset(a.rays[i], b.rays[i])) return false;
  return true;
}

bool irr_subset(const IrreducibleIdeal& a, const IrreducibleIdeal& b) {
  require_same_dim(a.dim(), b.dim());
  if (b.unit()) return true;
  // A nonempty ray of `a` can only be covered by the matching ray of `b`:
  // its pure powers have zero exponent in every other variable.
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!a.rays[i].empty() && !ray_subset(a.rays[i], b.rays[i])) return false;
  return true;
}

namespace {

// Keeps element j unless some other element absorbs it: strictly (one-way
// containment) or as an equal duplicate with a smaller index.
template <typename T, typename Subset>
std::vector<T> prune(const std::vector<T>& items, Subset absorbed_by) {
  std::vector<T> out;
  for (std::size_t j = 0; j < items.size(); ++j) {
    bool drop = false;
    for (std::size_t i = 0; i < items.size() && !drop; ++i) {
      if (i == j) continue;
      if (absorbed_by(items[j], items[i]))
        drop = !absorbed_by(items[i], items[j]) || i < j;
    }
    if (!drop) out.push_back(items[j]);
  }
  return out;
}

}  // namespace

AfgIdeal normalize_sum(const AfgIdeal& a) {
  std::vector<BoxIdeal> live;
  for (const BoxIdeal& b : a.boxes)
    if (!b.zero()) live.push_back(b);
  return AfgIdeal{a.dim, prune(live, [](const BoxIdeal& x, const BoxIdeal& y) {
                    return box_subset(x, y);  // smaller summand is absorbed
                  })};
}

Decomposition normalize_intersection(const Decomposition& d) {
  std::vector<IrreducibleIdeal> live;
  for (const IrreducibleIdeal& j : d.components)
    if (!j.unit()) live.push_back(j);
  return Decomposition{
      d.dim, prune(live, [](const IrreducibleIdeal& x, const IrreducibleIdeal& y) {
        return irr_subset(y, x);  // a component containing another is redundant
      })};
}

namespace {

int rayvec_compare(const std::vector<Ray>& a, const std::vector<Ray>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].alpha < b[i].alpha) return -1;
    if (b[i].alpha < a[i].alpha) return 1;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].eps != b[i].eps) return a[i].eps == Flag::closed ? -1 : 1;
  }
  return 0;
}

}  // namespace

int box_compare(const BoxIdeal& a, const BoxIdeal& b) {
  return rayvec_compare(a.rays, b.rays);
}

int irr_compare(const IrreducibleIdeal& a, const IrreducibleIdeal& b) {
  return rayvec_compare(a.rays, b.rays);
}

}  // namespace midr
