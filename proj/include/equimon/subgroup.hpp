#ifndef EQUIMON_SUBGROUP_HPP
#define EQUIMON_SUBGROUP_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "equimon/elemset.hpp"
#include "equimon/group.hpp"

namespace equimon {

/// A subgroup of a GroupTable, stored as a membership bitset over element
/// indices. Always contains the identity (bit 0) and is closed under the
/// group operation and inversion.
struct Subgroup {
  ElemSet members;

  std::uint32_t size() const { return members.count(); }
  bool contains(Elem e) const { return members.test(e); }
  bool contains(const Subgroup& other) const { return members.contains(other.members); }

  friend bool operator==(const Subgroup&, const Subgroup&) = default;
  friend bool operator<(const Subgroup& lhs, const Subgroup& rhs) {
    return lhs.members < rhs.members;
  }
};

/// A conjugacy class of subgroups [H] = {g^-1 H g : g in G}. The
/// representative is the canonically smallest member (see ElemSet ordering);
/// class ids are assigned by sorting classes by (subgroup size, representative).
struct SubgroupClass {
  Subgroup representative;
  std::vector<Subgroup> members;  // sorted, no duplicates
  std::uint32_t class_id = 0;
};

/// An N-conjugacy class [H]_N = {n^-1 H n : n in N}: sorted, no duplicates.
using NConjClass = std::vector<Subgroup>;

inline constexpr std::uint32_t kDefaultMaxGroupOrder = 64;

Subgroup trivial_subgroup(const GroupTable& g);
Subgroup full_subgroup(const GroupTable& g);

/// Smallest subgroup containing `seed` (closure under multiplication; the
/// group is finite, so inverses come for free).
Subgroup subgroup_generated(const GroupTable& g, std::span<const Elem> seed);

/// All subgroups of g, sorted by (size, membership bitset). Seeds with the
/// cyclic subgroups and closes under joins with them. Throws
/// Error("subgroup enumeration refused") when g.order() > cap.
std::vector<Subgroup> all_subgroups(const GroupTable& g,
                                    std::uint32_t cap = kDefaultMaxGroupOrder);

/// All subgroups T with h <= T <= G, sorted. Same join closure seeded at h;
/// not subject to the cap (used on groups that already passed it).
std::vector<Subgroup> overgroups(const GroupTable& g, const Subgroup& h);

/// {g^-1 h g : h in H}.
Subgroup conjugate_subgroup(const GroupTable& g, const Subgroup& h, Elem by);

/// N_G(H) = {g : g^-1 H g = H}.
Subgroup normalizer(const GroupTable& g, const Subgroup& h);

std::vector<SubgroupClass> subgroup_conjugacy_classes(
    const GroupTable& g, std::uint32_t cap = kDefaultMaxGroupOrder);

/// Partial order on conjugacy classes: [A] <= [B] iff some member of [B]
/// contains the representative of [A].
bool class_leq(const GroupTable& g, const SubgroupClass& a, const SubgroupClass& b);

/// [H]_N = {n^-1 H n : n in N}.
NConjClass n_conjugacy_class(const GroupTable& g, const Subgroup& h,
                             const Subgroup& n);

/// U(H,K): the N_H-conjugacy classes of subgroups T with H <= T and T
/// conjugate to K. Empty iff no conjugate of K contains H. Classes and
/// their members are sorted canonically.
std::vector<NConjClass> u_set(const GroupTable& g, const Subgroup& h,
                              const Subgroup& k);

/// U(H): the N_H-conjugacy classes of all overgroups of H.
std::vector<NConjClass> u_union(const GroupTable& g, const Subgroup& h);

/// Cached subgroup-level data for one group: the full subgroup list, the
/// conjugacy classes with ids, a class lookup, and the class partial order.
class SubgroupLattice {
public:
  explicit SubgroupLattice(const GroupTable& g,
                           std::uint32_t cap = kDefaultMaxGroupOrder);

  const GroupTable& group() const { return *group_; }
  const std::vector<Subgroup>& subgroups() const { return subgroups_; }
  const std::vector<SubgroupClass>& classes() const { return classes_; }
  std::uint32_t class_id_of(const Subgroup& h) const;
  bool leq(std::uint32_t a, std::uint32_t b) const {
    return leq_[a * classes_.size() + b];
  }

private:
  const GroupTable* group_;
  std::vector<Subgroup> subgroups_;
  std::vector<SubgroupClass> classes_;
  std::vector<bool> leq_;  // classes x classes, row-major
};

}  // namespace equimon

#endif
