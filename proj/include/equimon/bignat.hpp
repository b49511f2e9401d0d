#ifndef EQUIMON_BIGNAT_HPP
#define EQUIMON_BIGNAT_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace equimon {

/// Arbitrary-precision natural number. All counting results are exact;
/// they overflow 64 bits already for modest inputs (n^n, products of
/// factorials), so every count in the public API is a BigNat.
///
/// Representation: base 2^32 limbs, least significant first, no trailing
/// zero limbs (zero is the empty limb vector).
class BigNat {
public:
  BigNat() = default;
  BigNat(std::uint64_t value);  // NOLINT: implicit by design

  bool is_zero() const { return limbs_.empty(); }

  /// Exact value as u64; throws Error if it does not fit.
  std::uint64_t to_u64() const;
  bool fits_u64() const { return limbs_.size() <= 2; }

  std::string to_decimal() const;

  BigNat& operator+=(const BigNat& rhs);
  BigNat& operator*=(const BigNat& rhs);
  friend BigNat operator+(BigNat lhs, const BigNat& rhs) { return lhs += rhs; }
  friend BigNat operator*(const BigNat& lhs, const BigNat& rhs);

  friend bool operator==(const BigNat&, const BigNat&) = default;
  friend std::strong_ordering operator<=>(const BigNat& lhs, const BigNat& rhs);

  static BigNat pow(const BigNat& base, std::uint64_t exponent);
  static BigNat factorial(std::uint64_t n);

private:
  void trim();

  std::vector<std::uint32_t> limbs_;
};

}  // namespace equimon

#endif
