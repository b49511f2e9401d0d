#ifndef EQUIMON_COUNTING_HPP
#define EQUIMON_COUNTING_HPP

#include <cstdint>
#include <map>

#include "equimon/bignat.hpp"
#include "equimon/gset.hpp"

namespace equimon {

/// Everything the closed-form route produces for one G-set.
struct CardinalityReport {
  BigNat end_count;
  BigNat aut_count;
  BigNat fixing_collapsing_count;
  std::uint64_t collapsing_type_count = 0;

  std::map<std::uint32_t, BigNat> per_class_options;  // class_id -> options
  std::map<std::uint32_t, std::uint32_t> alpha;       // class_id -> alpha_[H]
  std::map<std::uint32_t, std::uint32_t> indices;     // class_id -> [N_G(H):H]

  /// Sum of |U(H)| over the stabilizer classes, and the correction it
  /// implies against the realizable type count (documentation fields).
  std::uint64_t u_total = 0;
  std::uint64_t kappa_implied = 0;
};

/// Number of admissible images of a point whose stabilizer is exactly the
/// canonical representative H of `class_id`: the sum over classes [K] >= [H]
/// in Conj_G(X) of alpha_[K] * [N_G(K):K] * (total number of overgroups of H
/// inside [K], accumulated N_H-class by N_H-class).
BigNat target_options(const BoxDecomposition& box, std::uint32_t class_id);

/// |End_G(X)|: product over stabilizer classes of target_options^alpha.
BigNat count_endomorphisms(const BoxDecomposition& box);

/// |Aut_G(X)|: product over stabilizer classes of alpha! * [N_G(H):H]^alpha.
BigNat count_automorphisms(const BoxDecomposition& box);

/// Number of distinct fixing elementary collapsings: for each box, alpha
/// times (the options strictly above it plus (alpha-1)*[N:H] inside it).
BigNat count_fixing_collapsings(const BoxDecomposition& box);

/// Number of realizable collapsing types (H, [K]_{N_H}): classes of U(H)
/// whose [K] occurs as a stabilizer class, excluding [K] = [H] when the box
/// holds a single orbit.
std::uint64_t count_collapsing_types(const BoxDecomposition& box);

CardinalityReport cardinality_report(const BoxDecomposition& box);

}  // namespace equimon

#endif
