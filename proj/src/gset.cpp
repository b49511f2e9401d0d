#include "equimon/gset.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <string>

#include "equimon/errors.hpp"

namespace equimon {

GSet::GSet(GroupTable group, Point n_points, std::vector<Point> act)
    : group_(std::move(group)), n_points_(n_points), act_(std::move(act)) {
  validate();
}

void GSet::validate() const {
  const std::uint32_t n = group_.order();
  for (Point x = 0; x < n_points_; ++x)
    if (act(0, x) != x) throw Error("inconsistent action: identity moves a point");
  for (Elem g = 0; g < n; ++g) {
    std::vector<bool> hit(n_points_, false);
    for (Point x = 0; x < n_points_; ++x) {
      Point y = act(g, x);
      if (y >= n_points_ || hit[y])
        throw Error("inconsistent action: element does not act bijectively");
      hit[y] = true;
    }
  }
  for (Elem g = 0; g < n; ++g)
    for (Elem h = 0; h < n; ++h) {
      Elem gh = group_.mul(g, h);
      for (Point x = 0; x < n_points_; ++x)
        if (act(g, act(h, x)) != act(gh, x))
          throw Error("inconsistent action: compatibility axiom fails");
    }
}

GSet GSet::from_generator_action(const GroupTable& group,
                                 const std::vector<Perm>& generator_images,
                                 Point n_points) {
  const auto& gen_idx = group.generator_indices();
  if (generator_images.size() != gen_idx.size())
    throw Error("inconsistent action: expected one image permutation per generator");
  if (n_points == 0) {
    if (generator_images.empty())
      throw Error("n_points required for a generator-free group");
    n_points = generator_images.front().degree();
  }
  for (const Perm& img : generator_images)
    if (img.degree() != n_points)
      throw Error("degree mismatch: generator image has degree " +
                  std::to_string(img.degree()) + ", expected " +
                  std::to_string(n_points));

  // Extend along the Cayley graph, then verify every edge: whenever two
  // generator words reach the same group element their induced permutations
  // on X must agree, otherwise the assignment is not a homomorphism.
  const std::uint32_t order = group.order();
  std::vector<Perm> phi(order, Perm::identity(n_points));
  std::vector<bool> known(order, false);
  known[0] = true;
  std::queue<Elem> frontier;
  frontier.push(0);
  while (!frontier.empty()) {
    Elem cur = frontier.front();
    frontier.pop();
    for (std::size_t i = 0; i < gen_idx.size(); ++i) {
      Elem next = group.mul(cur, gen_idx[i]);
      Perm image = compose(phi[cur], generator_images[i]);
      if (!known[next]) {
        phi[next] = std::move(image);
        known[next] = true;
        frontier.push(next);
      } else if (phi[next] != image) {
        throw Error("inconsistent action: generator images do not extend to a "
                    "group action");
      }
    }
  }

  std::vector<Point> act(static_cast<std::size_t>(order) * n_points);
  for (Elem g = 0; g < order; ++g)
    for (Point x = 0; x < n_points; ++x) act[g * n_points + x] = phi[g][x];
  return GSet{group, n_points, std::move(act)};
}

GSet GSet::from_coset_spaces(const GroupTable& group,
                             const std::vector<Subgroup>& subgroups) {
  const std::uint32_t order = group.order();

  // Lay out points block by block: within a block, cosets are numbered in
  // order of their smallest member. point_of[b][a] is the point of aH_b.
  std::vector<std::vector<Point>> point_of;
  std::vector<std::vector<Elem>> coset_rep;  // block -> local point -> rep
  Point n_points = 0;
  constexpr Point kUnassigned = UINT32_MAX;
  for (const Subgroup& h : subgroups) {
    std::vector<Point> map(order, kUnassigned);
    std::vector<Elem> reps;
    for (Elem a = 0; a < order; ++a) {
      if (map[a] != kUnassigned) continue;
      for (Elem m : h.members.members()) map[group.mul(a, m)] = n_points;
      reps.push_back(a);
      ++n_points;
    }
    point_of.push_back(std::move(map));
    coset_rep.push_back(std::move(reps));
  }

  std::vector<Point> act(static_cast<std::size_t>(order) * n_points);
  for (std::size_t b = 0; b < point_of.size(); ++b) {
    for (Elem rep : coset_rep[b]) {
      Point p = point_of[b][rep];
      for (Elem g = 0; g < order; ++g)
        act[g * n_points + p] = point_of[b][group.mul(g, rep)];  // g.(aH) = (ga)H
    }
  }
  return GSet{group, n_points, std::move(act)};
}

std::vector<Orbit> orbits(const GSet& x) {
  std::vector<Orbit> out;
  std::vector<bool> seen(x.n_points(), false);
  for (Point p = 0; p < x.n_points(); ++p) {
    if (seen[p]) continue;
    Orbit orbit;
    orbit.representative = p;
    for (Elem g = 0; g < x.group().order(); ++g) {
      Point q = x.act(g, p);
      if (!seen[q]) {
        seen[q] = true;
        orbit.points.push_back(q);
      }
    }
    std::sort(orbit.points.begin(), orbit.points.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

Subgroup stabilizer(const GSet& x, Point p) {
  Subgroup s{ElemSet{x.group().order()}};
  for (Elem g = 0; g < x.group().order(); ++g)
    if (x.act(g, p) == p) s.members.set(g);
  return s;
}

MapExistence map_exists(const GSet& x, Point from, Point to) {
  Subgroup gx = stabilizer(x, from);
  Subgroup gy = stabilizer(x, to);
  if (gx == gy) return MapExistence::iso;
  if (gy.contains(gx)) return MapExistence::hom;
  return MapExistence::none;
}

BoxDecomposition::BoxDecomposition(GSet gset, std::uint32_t cap)
    : gset_(std::move(gset)), lattice_(gset_.group(), cap) {
  orbit_list_ = orbits(gset_);
  stab_.reserve(gset_.n_points());
  for (Point p = 0; p < gset_.n_points(); ++p)
    stab_.push_back(stabilizer(gset_, p));

  orbit_class_.reserve(orbit_list_.size());
  for (const Orbit& orbit : orbit_list_) {
    std::uint32_t cid = lattice_.class_id_of(stab_[orbit.representative]);
    orbit_class_.push_back(cid);
    alpha_[cid] += 1;
  }
  for (const auto& [cid, count] : alpha_) {
    stab_class_ids_.push_back(cid);
    const Subgroup& rep = lattice_.classes()[cid].representative;
    index_[cid] = normalizer(gset_.group(), rep).size() / rep.size();
  }
}

}  // namespace equimon
