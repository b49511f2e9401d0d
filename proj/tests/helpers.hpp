#ifndef EQUIMON_TESTS_HELPERS_HPP
#define EQUIMON_TESTS_HELPERS_HPP

#include <stdexcept>
#include <vector>

#include "equimon/gset.hpp"
#include "equimon/group.hpp"
#include "equimon/perm.hpp"

namespace equimon::testing {

inline GroupTable trivial_group() {
  return GroupTable::from_generators({}, 1, 8);
}

inline GroupTable z2() {
  return GroupTable::from_generators({perm_from_cycles(2, {{0, 1}})}, 2, 8);
}

inline GroupTable z3() {
  return GroupTable::from_generators({perm_from_cycles(3, {{0, 1, 2}})}, 3, 8);
}

inline GroupTable z4() {
  return GroupTable::from_generators({perm_from_cycles(4, {{0, 1, 2, 3}})}, 4, 8);
}

inline GroupTable v4() {
  return GroupTable::from_generators(
      {perm_from_cycles(4, {{0, 1}}), perm_from_cycles(4, {{2, 3}})}, 4, 8);
}

inline GroupTable s3() {
  return GroupTable::from_generators(
      {perm_from_cycles(3, {{0, 1}}), perm_from_cycles(3, {{0, 1, 2}})}, 3, 8);
}

inline GroupTable d4() {
  return GroupTable::from_generators(
      {perm_from_cycles(4, {{0, 1, 2, 3}}), perm_from_cycles(4, {{1, 3}})}, 4, 16);
}

inline GroupTable z6() {
  return GroupTable::from_generators(
      {perm_from_cycles(5, {{0, 1}, {2, 3, 4}})}, 5, 8);
}

inline GroupTable s4() {
  return GroupTable::from_generators(
      {perm_from_cycles(4, {{0, 1}}), perm_from_cycles(4, {{0, 1, 2, 3}})}, 4, 32);
}

/// The reference Z2-set on {0..5}: the non-trivial element swaps 0<->1 and
/// 2<->3 and fixes 4 and 5 (two free orbits, two fixed points).
inline GSet z2_reference_gset() {
  return GSet::from_generator_action(z2(),
                                     {perm_from_cycles(6, {{0, 1}, {2, 3}})});
}

/// The regular action of g on itself (one coset space of the trivial
/// subgroup).
inline GSet regular_gset(const GroupTable& g) {
  return GSet::from_coset_spaces(g, {trivial_subgroup(g)});
}

/// Element index of a permutation in g; throws if absent.
inline Elem index_of(const GroupTable& g, const Perm& p) {
  for (Elem e = 0; e < g.order(); ++e)
    if (g.element(e) == p) return e;
  throw std::runtime_error("permutation not in group");
}

}  // namespace equimon::testing

#endif
