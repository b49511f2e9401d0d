#include "equimon/bignat.hpp"

#include <algorithm>

#include "equimon/errors.hpp"

namespace equimon {

BigNat::BigNat(std::uint64_t value) {
  if (value != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(value));
    if (value >> 32) limbs_.push_back(static_cast<std::uint32_t>(value >> 32));
  }
}

void BigNat::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

std::uint64_t BigNat::to_u64() const {
  if (!fits_u64()) throw Error("value does not fit in 64 bits");
  std::uint64_t v = 0;
  if (limbs_.size() > 1) v = static_cast<std::uint64_t>(limbs_[1]) << 32;
  if (!limbs_.empty()) v |= limbs_[0];
  return v;
}

BigNat& BigNat::operator+=(const BigNat& rhs) {
  limbs_.resize(std::max(limbs_.size(), rhs.limbs_.size()), 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t sum = carry + limbs_[i];
    if (i < rhs.limbs_.size()) sum += rhs.limbs_[i];
    limbs_[i] = static_cast<std::uint32_t>(sum);
    carry = sum >> 32;
  }
  if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
  return *this;
}

BigNat operator*(const BigNat& lhs, const BigNat& rhs) {
  BigNat out;
  if (lhs.is_zero() || rhs.is_zero()) return out;
  out.limbs_.assign(lhs.limbs_.size() + rhs.limbs_.size(), 0);
  for (std::size_t i = 0; i < lhs.limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
      std::uint64_t cur = out.limbs_[i + j] + carry +
                          static_cast<std::uint64_t>(lhs.limbs_[i]) * rhs.limbs_[j];
      out.limbs_[i + j] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    out.limbs_[i + rhs.limbs_.size()] += static_cast<std::uint32_t>(carry);
  }
  out.trim();
  return out;
}

BigNat& BigNat::operator*=(const BigNat& rhs) {
  *this = *this * rhs;
  return *this;
}

std::strong_ordering operator<=>(const BigNat& lhs, const BigNat& rhs) {
  if (lhs.limbs_.size() != rhs.limbs_.size())
    return lhs.limbs_.size() <=> rhs.limbs_.size();
  for (std::size_t i = lhs.limbs_.size(); i-- > 0;) {
    if (lhs.limbs_[i] != rhs.limbs_[i]) return lhs.limbs_[i] <=> rhs.limbs_[i];
  }
  return std::strong_ordering::equal;
}

std::string BigNat::to_decimal() const {
  if (is_zero()) return "0";
  // Repeated division by 10^9; quotient computed limb-by-limb from the top.
  std::vector<std::uint32_t> work = limbs_;
  std::string out;
  while (!work.empty()) {
    std::uint64_t rem = 0;
    for (std::size_t i = work.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | work[i];
      work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
      rem = cur % 1000000000u;
    }
    while (!work.empty() && work.back() == 0) work.pop_back();
    std::string chunk = std::to_string(rem);
    if (!work.empty()) chunk.insert(0, 9 - chunk.size(), '0');
    out.insert(0, chunk);
  }
  return out;
}

BigNat BigNat::pow(const BigNat& base, std::uint64_t exponent) {
  BigNat result{1};
  BigNat sq = base;
  while (exponent > 0) {
    if (exponent & 1) result *= sq;
    exponent >>= 1;
    if (exponent) sq *= sq;
  }
  return result;
}

BigNat BigNat::factorial(std::uint64_t n) {
  BigNat result{1};
  for (std::uint64_t i = 2; i <= n; ++i) result *= BigNat{i};
  return result;
}

}  // namespace equimon
