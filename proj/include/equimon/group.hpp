#ifndef EQUIMON_GROUP_HPP
#define EQUIMON_GROUP_HPP

#include <cstdint>
#include <vector>

#include "equimon/perm.hpp"

namespace equimon {

using Elem = std::uint32_t;

/// A finite group materialized from permutation generators: the element list
/// (index 0 is the identity, the rest in breadth-first discovery order) plus
/// full multiplication and inverse tables. Immutable after construction.
class GroupTable {
public:
  /// Closes `generators` under composition by BFS from the identity.
  /// Discovery order is deterministic given the generator order. Throws
  /// Error("group too large") when the closure exceeds `max_order`.
  static GroupTable from_generators(const std::vector<Perm>& generators,
                                    Point degree, std::uint32_t max_order);

  std::uint32_t order() const { return static_cast<std::uint32_t>(elements_.size()); }
  Point degree() const { return degree_; }

  const Perm& element(Elem i) const { return elements_[i]; }
  const std::vector<Perm>& elements() const { return elements_; }

  /// Product a*b (b acts first, matching compose()).
  Elem mul(Elem a, Elem b) const { return mul_[a * order() + b]; }
  Elem inv(Elem a) const { return inv_[a]; }

  /// g^-1 * h * g.
  Elem conj(Elem h, Elem g) const { return mul(mul(inv_[g], h), g); }

  /// Indices of the input generators in the element list, in input order.
  const std::vector<Elem>& generator_indices() const { return generator_indices_; }

private:
  GroupTable() = default;

  Point degree_ = 1;
  std::vector<Perm> elements_;
  std::vector<Elem> mul_;  // order x order, row-major
  std::vector<Elem> inv_;
  std::vector<Elem> generator_indices_;
};

}  // namespace equimon

#endif
