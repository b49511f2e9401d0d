#ifndef EQUIMON_GSET_HPP
#define EQUIMON_GSET_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "equimon/group.hpp"
#include "equimon/subgroup.hpp"

namespace equimon {

/// A finite G-set: a point set {0..n_points-1} with a fully materialized,
/// validated action table. Both constructors verify the action axioms
/// exhaustively, so a constructed GSet is always a genuine G-set.
class GSet {
public:
  /// Extends per-generator images to the whole group along the Cayley graph.
  /// Every Cayley edge is checked, so an assignment that is not a
  /// homomorphism is rejected with Error("inconsistent action").
  /// `n_points` may be 0 to infer the size from the first image; it is
  /// required when the group has no generators.
  static GSet from_generator_action(const GroupTable& group,
                                    const std::vector<Perm>& generator_images,
                                    Point n_points = 0);

  /// Disjoint union of left coset spaces G/H_i with g.(aH) = (ga)H.
  /// Always valid; realizes any prescribed stabilizer family.
  static GSet from_coset_spaces(const GroupTable& group,
                                const std::vector<Subgroup>& subgroups);

  const GroupTable& group() const { return group_; }
  Point n_points() const { return n_points_; }
  Point act(Elem g, Point x) const { return act_[g * n_points_ + x]; }

private:
  GSet(GroupTable group, Point n_points, std::vector<Point> act);
  void validate() const;

  GroupTable group_;
  Point n_points_;
  std::vector<Point> act_;  // order x n_points, row-major
};

struct Orbit {
  Point representative;  // smallest point index
  std::vector<Point> points;

  std::uint32_t size() const { return static_cast<std::uint32_t>(points.size()); }
};

/// The orbit partition, sorted by representative.
std::vector<Orbit> orbits(const GSet& x);

/// G_x = {g : g.x = x}.
Subgroup stabilizer(const GSet& x, Point p);

enum class MapExistence { none, hom, iso };

/// Whether some equivariant map sends x to y: iso iff G_x = G_y, hom iff
/// G_x < G_y, none otherwise.
MapExistence map_exists(const GSet& x, Point from, Point to);

/// The stabilizer-class decomposition of a G-set: which conjugacy classes
/// occur as stabilizers, how many orbits sit in each box B_[H], the exact
/// stabilizer of every point, and the class partial order. This is the
/// single input every counting formula consumes.
class BoxDecomposition {
public:
  explicit BoxDecomposition(GSet gset,
                            std::uint32_t cap = kDefaultMaxGroupOrder);

  const GSet& gset() const { return gset_; }
  const SubgroupLattice& lattice() const { return lattice_; }

  /// Class ids present as stabilizers (Conj_G(X)), ascending.
  const std::vector<std::uint32_t>& stabilizer_class_ids() const {
    return stab_class_ids_;
  }
  const std::vector<Orbit>& orbit_list() const { return orbit_list_; }
  std::uint32_t orbit_class(std::uint32_t orbit_index) const {
    return orbit_class_[orbit_index];
  }
  const Subgroup& point_stabilizer(Point p) const { return stab_[p]; }

  /// alpha_[H]: number of orbits in the box of `class_id`.
  std::uint32_t alpha(std::uint32_t class_id) const { return alpha_.at(class_id); }
  /// [N_G(H):H] for the canonical representative of `class_id`.
  std::uint32_t index_n_h(std::uint32_t class_id) const {
    return index_.at(class_id);
  }
  const Subgroup& canonical_rep(std::uint32_t class_id) const {
    return lattice_.classes()[class_id].representative;
  }

  bool leq(std::uint32_t a, std::uint32_t b) const { return lattice_.leq(a, b); }

private:
  GSet gset_;
  SubgroupLattice lattice_;
  std::vector<Orbit> orbit_list_;
  std::vector<std::uint32_t> orbit_class_;
  std::vector<Subgroup> stab_;
  std::vector<std::uint32_t> stab_class_ids_;
  std::map<std::uint32_t, std::uint32_t> alpha_;
  std::map<std::uint32_t, std::uint32_t> index_;
};

}  // namespace equimon

#endif
