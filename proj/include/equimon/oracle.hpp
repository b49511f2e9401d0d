#ifndef EQUIMON_ORACLE_HPP
#define EQUIMON_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "equimon/bignat.hpp"
#include "equimon/gset.hpp"

namespace equimon {

/// A total function X -> X commuting with the action, stored as its image
/// array. Producers in this module guarantee equivariance; is_equivariant
/// re-checks it.
struct EquivariantMap {
  std::vector<Point> images;

  Point operator()(Point x) const { return images[x]; }
  friend bool operator==(const EquivariantMap&, const EquivariantMap&) = default;
  friend bool operator<(const EquivariantMap& lhs, const EquivariantMap& rhs) {
    return lhs.images < rhs.images;
  }
};

EquivariantMap identity_map(const GSet& x);

/// (f o g)(x) = f(g(x)).
EquivariantMap compose_maps(const EquivariantMap& f, const EquivariantMap& g);

/// Commutation with every generator (which implies commutation with every
/// element; is_equivariant_full checks all elements directly).
bool is_equivariant(const GSet& x, std::span<const Point> images);
bool is_equivariant_full(const GSet& x, std::span<const Point> images);

/// [x |-> y]: sends g.x to g.y and fixes everything else. Requires
/// G_x <= G_y (Error("stabilizer condition violated") otherwise).
EquivariantMap collapsing_map(const GSet& gs, Point x, Point y);

/// (x <-> y): exchanges the orbits of x and y equivariantly and fixes the
/// rest; bijective. Requires G_x = G_y (Error("stabilizer mismatch")).
/// When x and y share an orbit the two exchange rules coincide only on the
/// rotation g.x -> g.y, so that rotation is returned (identity for x = y).
EquivariantMap swap_map(const GSet& gs, Point x, Point y);

struct EndoEnumeration {
  BigNat count;  // always exact
  std::optional<std::vector<EquivariantMap>> maps;  // absent when count > cap
};

/// Direct search: one representative per orbit, every target with a
/// pointwise-larger stabilizer, each choice extended uniquely by
/// equivariance. Choices across orbits are independent, so the exact count
/// is the product of the per-orbit option counts; maps are materialized
/// only when the count fits under `cap` (otherwise a deterministic sample
/// of assignments is built and re-verified).
EndoEnumeration enumerate_endomorphisms(const GSet& gs, const BigNat& cap);

/// Second-level oracle: filters all n^n functions through the full
/// equivariance check. Only for n_points <= 8.
std::vector<EquivariantMap> enumerate_endomorphisms_by_filter(const GSet& gs);

/// All bijective equivariant maps, by backtracking over orbit
/// representatives (targets need equal stabilizers and an unused orbit).
std::vector<EquivariantMap> enumerate_automorphisms(const GSet& gs);

/// Same backtracking, counting only. Throws CapExceeded beyond `cap`.
std::uint64_t count_automorphisms_direct(const GSet& gs,
                                         std::uint64_t cap = UINT64_MAX);

/// True iff `maps` is closed under composition, contains the identity, and
/// every member has an inverse in the set.
bool forms_group(const GSet& gs, const std::vector<EquivariantMap>& maps);

/// The type (H, [K]_{N_H}) of a fixing elementary collapsing, canonicalized:
/// H is conjugated to its class representative and the N_H-class transported
/// along the same element, which is well-defined because conjugating the
/// pair (H, K) preserves N-class cardinalities and membership.
struct CollapsingType {
  std::uint32_t h_class = 0;
  Subgroup h_rep;
  NConjClass k_nclass;

  friend bool operator==(const CollapsingType& a, const CollapsingType& b) {
    return a.h_class == b.h_class && a.k_nclass == b.k_nclass;
  }
  friend bool operator<(const CollapsingType& a, const CollapsingType& b) {
    if (a.h_class != b.h_class) return a.h_class < b.h_class;
    return a.k_nclass < b.k_nclass;
  }
};

/// Checks the elementary-collapsing conditions directly: searches for
/// witnesses (x, y), compares the kernel pair set literally against the
/// three-part union, and requires Fix(f) = X minus the collapsed orbit.
/// Non-collapsings yield nullopt.
std::optional<CollapsingType> classify_collapsing(const GSet& gs,
                                                  const EquivariantMap& f);

/// All distinct maps [x |-> y] over pairs with G_x <= G_y and Gx != Gy,
/// deduplicated as functions.
std::vector<EquivariantMap> enumerate_fixing_collapsings(const GSet& gs);

/// Distinct canonical types of the fixing elementary collapsings.
std::vector<CollapsingType> enumerate_collapsing_types(const GSet& gs);

/// Closure of `seed` under composition (plus the identity). Throws
/// CapExceeded("cap exceeded") when the closure grows past `cap`.
std::vector<EquivariantMap> monoid_closure(const GSet& gs,
                                           const std::vector<EquivariantMap>& seed,
                                           std::uint64_t cap);

}  // namespace equimon

#endif
