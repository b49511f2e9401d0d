#include <doctest.h>

#include <cstdint>

#include "equimon/bignat.hpp"
#include "equimon/errors.hpp"

using equimon::BigNat;

TEST_CASE("bignat matches 64-bit arithmetic on small values") {
  std::uint64_t x = 1;
  for (int i = 0; i < 200; ++i) {
    x = x * 6364136223846793005ull + 1442695040888963407ull;
    std::uint64_t a = x >> 44, b = (x >> 20) & 0xFFFFF;
    CHECK(BigNat{a} + BigNat{b} == BigNat{a + b});
    CHECK(BigNat{a} * BigNat{b} == BigNat{a * b});
    CHECK((BigNat{a} < BigNat{b}) == (a < b));
    CHECK((BigNat{a} + BigNat{b}).to_u64() == a + b);
  }
}

TEST_CASE("bignat decimal rendering") {
  CHECK(BigNat{}.to_decimal() == "0");
  CHECK(BigNat{1}.to_decimal() == "1");
  CHECK(BigNat{1000000000}.to_decimal() == "1000000000");
  CHECK(BigNat{UINT64_MAX}.to_decimal() == "18446744073709551615");
  CHECK(BigNat::pow(BigNat{2}, 100).to_decimal() ==
        "1267650600228229401496703205376");
  CHECK(BigNat::pow(BigNat{10}, 30).to_decimal() ==
        "1000000000000000000000000000000");
}

TEST_CASE("bignat pow and factorial") {
  CHECK(BigNat::pow(BigNat{7}, 0) == BigNat{1});
  CHECK(BigNat::pow(BigNat{0}, 5) == BigNat{0});
  CHECK(BigNat::pow(BigNat{3}, 7) == BigNat{2187});
  CHECK(BigNat::factorial(0) == BigNat{1});
  CHECK(BigNat::factorial(20) == BigNat{2432902008176640000ull});
  CHECK(BigNat::factorial(25).to_decimal() == "15511210043330985984000000");
}

TEST_CASE("bignat carries across limbs") {
  BigNat big = BigNat{UINT64_MAX} * BigNat{UINT64_MAX};
  CHECK(big.to_decimal() == "340282366920938463426481119284349108225");
  CHECK(big > BigNat{UINT64_MAX});
  CHECK_FALSE(big.fits_u64());
  CHECK_THROWS_AS((void)big.to_u64(), equimon::Error);
  CHECK(big + BigNat{1} > big);
}
