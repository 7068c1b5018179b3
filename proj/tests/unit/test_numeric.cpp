#include <gtest/gtest.h>

#include "dcenter/error.hpp"
#include "dcenter/numeric.hpp"
#include "oracles.hpp"

using namespace dcenter;

TEST(Numeric, PowersAndZeroToTheZero) {
  EXPECT_EQ(ipow(0L, 0), 1);
  EXPECT_EQ(ipow(0L, 3), 0);
  EXPECT_EQ(ipow(3L, 5), 243);
  EXPECT_EQ(ipow(BigInt(6), 18).get_str(), "101559956668416");
  EXPECT_EQ(ipow(-2L, 3), -8);
}

TEST(Numeric, Binomial) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(5, 0), 1);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(60, 30).get_str(), "118264581564861424");
}

TEST(Numeric, TotientExamples) {
  EXPECT_EQ(totient(5), 4u);
  EXPECT_EQ(totient(1), 1u);
  EXPECT_EQ(totient(12), 4u);
}

TEST(Numeric, TotientMatchesGcdCount) {
  for (unsigned m = 1; m <= 300; ++m) EXPECT_EQ(totient(m), oracle::totient(m)) << m;
}

TEST(Numeric, TotientDivisorSum) {
  for (unsigned n = 1; n <= 14; ++n) {
    std::uint64_t sum = 0;
    for (unsigned m = 1; m <= n; ++m)
      if (n % m == 0) sum += totient(m);
    EXPECT_EQ(sum, n);
  }
}

TEST(Numeric, TotientRejectsZero) {
  try {
    totient(0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Domain);
  }
}

TEST(Numeric, MoebiusMatchesFactorization) {
  for (unsigned m = 1; m <= 300; ++m) EXPECT_EQ(moebius(m), oracle::moebius(m)) << m;
}

TEST(Numeric, GcdU64) {
  EXPECT_EQ(gcd_u64(12, 18), 6u);
  EXPECT_EQ(gcd_u64(0, 7), 7u);
}
