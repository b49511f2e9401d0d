#ifndef EQUIMON_PERM_HPP
#define EQUIMON_PERM_HPP

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace equimon {

using Point = std::uint32_t;

/// A permutation of {0, ..., degree-1}, stored as its image array.
class Perm {
public:
  /// Validates that `images` is a bijection; throws Error("not a permutation")
  /// otherwise.
  explicit Perm(std::vector<Point> images);

  static Perm identity(Point degree);

  Point degree() const { return static_cast<Point>(images_.size()); }
  Point operator[](Point i) const { return images_[i]; }
  const std::vector<Point>& images() const { return images_; }
  bool is_identity() const;

  Perm inverse() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend bool operator<(const Perm& lhs, const Perm& rhs) {
    return lhs.images_ < rhs.images_;
  }

private:
  std::vector<Point> images_;
};

/// Product p*q under the repo-wide convention: the right factor acts first,
/// so (p*q)(i) = p(q(i)).
Perm compose(const Perm& p, const Perm& q);

/// Builds a permutation from disjoint cycles, e.g.
/// perm_from_cycles(6, {{0, 1}, {2, 3}}) swaps 0<->1 and 2<->3 on 6 points.
Perm perm_from_cycles(Point degree,
                      std::initializer_list<std::initializer_list<Point>> cycles);

}  // namespace equimon

#endif
