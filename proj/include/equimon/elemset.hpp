#ifndef EQUIMON_ELEMSET_HPP
#define EQUIMON_ELEMSET_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace equimon {

/// A subset of {0, ..., universe-1}, stored as a packed bitset. Used for
/// subgroup membership over group-element indices.
class ElemSet {
public:
  ElemSet() : n_(0) {}
  explicit ElemSet(std::uint32_t universe)
      : words_((universe + 63) / 64, 0), n_(universe) {}

  std::uint32_t universe() const { return n_; }

  void set(std::uint32_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(std::uint32_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::uint32_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  std::uint32_t count() const {
    std::uint32_t total = 0;
    for (std::uint64_t w : words_) total += static_cast<std::uint32_t>(std::popcount(w));
    return total;
  }

  bool contains(const ElemSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((other.words_[i] & ~words_[i]) != 0) return false;
    return true;
  }

  std::vector<std::uint32_t> members() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for (std::uint32_t i = 0; i < n_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

  friend bool operator==(const ElemSet&, const ElemSet&) = default;

  /// Canonical ordering: ascending member lists compared lexicographically,
  /// so {0,3} < {1,2}. Determines class representatives and report order.
  friend bool operator<(const ElemSet& lhs, const ElemSet& rhs) {
    std::uint32_t n = lhs.n_ < rhs.n_ ? lhs.n_ : rhs.n_;
    for (std::uint32_t i = 0; i < n; ++i) {
      bool a = lhs.test(i), b = rhs.test(i);
      if (a != b) return a;  // the set containing the smaller element is smaller
    }
    return lhs.n_ < rhs.n_;
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint64_t w : words_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return h;
  }

private:
  std::vector<std::uint64_t> words_;
  std::uint32_t n_;
};

}  // namespace equimon

#endif
