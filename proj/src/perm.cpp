#include "equimon/perm.hpp"

#include <numeric>
#include <string>

#include "equimon/errors.hpp"

namespace equimon {

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point img : images_) {
    if (img >= images_.size() || seen[img])
      throw Error("not a permutation: image array is not a bijection on {0..." +
                  std::to_string(images_.size() ? images_.size() - 1 : 0) + "}");
    seen[img] = true;
  }
}

Perm Perm::identity(Point degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), 0);
  return Perm{std::move(images)};
}

bool Perm::is_identity() const {
  for (Point i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<Point> inv(images_.size());
  for (Point i = 0; i < degree(); ++i) inv[images_[i]] = i;
  return Perm{std::move(inv)};
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw Error("degree mismatch: cannot compose permutations of degree " +
                std::to_string(p.degree()) + " and " + std::to_string(q.degree()));
  std::vector<Point> images(p.degree());
  for (Point i = 0; i < p.degree(); ++i) images[i] = p[q[i]];
  return Perm{std::move(images)};
}

Perm perm_from_cycles(Point degree,
                      std::initializer_list<std::initializer_list<Point>> cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), 0);
  for (const auto& cycle : cycles) {
    const Point* data = cycle.begin();
    std::size_t len = cycle.size();
    for (std::size_t i = 0; i < len; ++i) {
      if (data[i] >= degree) throw Error("cycle point out of range");
      images[data[i]] = data[(i + 1) % len];
    }
  }
  return Perm{std::move(images)};
}

}  // namespace equimon
