#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "dcenter/dynamics.hpp"
#include "dcenter/error.hpp"
#include "oracles.hpp"

using namespace dcenter;

namespace {

// h_{n-1} by repeated convolution on machine integers (small cases only).
std::vector<long long> gleason_oracle(unsigned d, unsigned n) {
  std::vector<long long> h{0, 1};
  for (unsigned step = 1; step < n; ++step) {
    std::vector<long long> power{1};
    for (unsigned k = 0; k < d; ++k) power = oracle::convolve(power, h);
    power[1] += 1;
    h = power;
  }
  return h;
}

std::vector<long long> as_ll(const IntPolynomial& p) {
  std::vector<long long> out;
  for (const auto& c : p.coeffs()) out.push_back(c.get_si());
  return out;
}

}  // namespace

TEST(Gleason, SmallExamples) {
  EXPECT_EQ(as_ll(gleason_poly(2, 2)), (std::vector<long long>{0, 1, 1}));
  EXPECT_EQ(as_ll(gleason_poly(3, 2)), (std::vector<long long>{0, 1, 0, 1}));
  const auto h3 = gleason_poly(2, 4);
  EXPECT_EQ(h3.degree(), 8);
  EXPECT_TRUE(h3.is_monic());
  EXPECT_EQ(as_ll(h3), gleason_oracle(2, 4));
}

TEST(Gleason, MatchesConvolutionOracle) {
  for (unsigned d = 2; d <= 4; ++d)
    for (unsigned n = 1; n <= 4; ++n) EXPECT_EQ(as_ll(gleason_poly(d, n)), gleason_oracle(d, n)) << d << "," << n;
}

TEST(Gleason, DegreeCapIsSizeError) {
  try {
    gleason_poly(2, 12, 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Size);
  }
}

TEST(Polynomial, DivmodRecoversFactors) {
  const IntPolynomial a({BigInt(1), BigInt(2), BigInt(-3)});
  const IntPolynomial b({BigInt(-5), BigInt(0), BigInt(1)});
  const auto [q, r] = divmod_monic(a * b + IntPolynomial({BigInt(7)}), b);
  EXPECT_EQ(q, a);
  EXPECT_EQ(r, IntPolynomial({BigInt(7)}));
}

TEST(Divisibility, Examples) {
  EXPECT_TRUE(divisibility_check(2, 2, 4).exact);
  EXPECT_TRUE(divisibility_check(3, 2, 4).exact);
  for (unsigned d = 2; d <= 4; ++d)
    for (unsigned n = 1; n <= 4; ++n) EXPECT_TRUE(divisibility_check(d, 1, n).exact);
}

TEST(Divisibility, NonDivisorIsPrecondition) {
  try {
    divisibility_check(2, 2, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Precondition);
  }
}

TEST(Centers, Examples) {
  const auto one = find_centers(2, 1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].c, std::complex<double>(0, 0));

  const auto two = find_centers(2, 2);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_NEAR(two[0].c.real(), -1.0, 1e-12);
  EXPECT_NEAR(std::abs(two[1].c), 0.0, 1e-12);

  const auto three = find_centers(2, 3);
  ASSERT_EQ(three.size(), 4u);
  EXPECT_NEAR(three[0].c.real(), -1.75487766624669, 1e-12);
  EXPECT_NEAR(three[1].c.real(), -0.12256116687665, 1e-12);
  EXPECT_NEAR(std::abs(three[1].c.imag()), 0.74486176661974, 1e-12);
  EXPECT_NEAR(three[1].c.imag(), -three[2].c.imag(), 1e-12);
}

TEST(Centers, RootsAreSimpleAndAccurate) {
  for (auto [d, n] : std::vector<std::pair<unsigned, unsigned>>{{2, 6}, {3, 4}, {4, 3}, {5, 3}}) {
    const auto roots = find_centers(d, n);
    ASSERT_EQ(roots.size(), static_cast<std::size_t>(std::pow(d, n - 1)));
    for (std::size_t i = 0; i < roots.size(); ++i) {
      // residual by direct iteration of z -> z^d + c from the critical point
      std::complex<double> z = 0;
      for (unsigned k = 0; k < n; ++k) z = std::pow(z, static_cast<int>(d)) + roots[i].c;
      EXPECT_LT(std::abs(z), 1e-8);
      for (std::size_t j = i + 1; j < roots.size(); ++j) EXPECT_GT(std::abs(roots[i].c - roots[j].c), 1e-8);
    }
  }
}

TEST(Centers, SymmetryUnderRotation) {
  // the center set of degree d is invariant under c -> e^{2 pi i/(d-1)} c and conjugation
  const auto roots = find_centers(3, 4);
  for (const auto& r : roots) {
    const auto rotated = -r.c;
    const auto conj = std::conj(r.c);
    bool has_rot = false, has_conj = false;
    for (const auto& s : roots) {
      has_rot = has_rot || std::abs(s.c - rotated) < 1e-9;
      has_conj = has_conj || std::abs(s.c - conj) < 1e-9;
    }
    EXPECT_TRUE(has_rot && has_conj);
  }
}

TEST(Census, Examples) {
  EXPECT_EQ(exact_period_census(2, 4), (std::map<unsigned, unsigned>{{1, 1}, {2, 1}, {4, 6}}));
  for (unsigned d = 2; d <= 4; ++d) EXPECT_EQ(exact_period_census(d, 1), (std::map<unsigned, unsigned>{{1, 1}}));
  EXPECT_EQ(exact_period_census(3, 2), (std::map<unsigned, unsigned>{{1, 1}, {2, 2}}));
}

TEST(Census, MoebiusOracle) {
  for (unsigned d = 2; d <= 4; ++d) {
    for (unsigned n = 1; n <= 6; ++n) {
      const auto counts = moebius_period_counts(d, n);
      BigInt total = 0;
      for (const auto& [m, c] : counts) {
        BigInt oracle_count = 0;
        for (unsigned k = 1; k <= m; ++k)
          if (m % k == 0) oracle_count += oracle::moebius(m / k) * ipow(static_cast<long>(d), k - 1);
        EXPECT_EQ(c, oracle_count);
        total += c;
      }
      EXPECT_EQ(total, ipow(static_cast<long>(d), n - 1));
    }
  }
}

TEST(Census, AgreesWithMoebiusOnSmallSweep) {
  for (auto [d, n] : std::vector<std::pair<unsigned, unsigned>>{{2, 6}, {3, 4}, {4, 4}}) {
    const auto census = exact_period_census(d, n);
    for (const auto& [m, c] : moebius_period_counts(d, n)) EXPECT_EQ(BigInt(census.at(m)), c);
  }
}

TEST(Census, ContainmentOfDivisorRoots) {
  const auto big = find_centers(2, 6);
  for (unsigned m : {1u, 2u, 3u}) {
    for (const auto& s : find_centers(2, m)) {
      bool found = false;
      for (const auto& r : big) found = found || std::abs(r.c - s.c) <= 1e-8;
      EXPECT_TRUE(found);
    }
  }
}

TEST(CriticalOrbit, Examples) {
  const auto zero = critical_orbit(0, 2, 5);
  for (const auto& z : zero.points) EXPECT_EQ(z, std::complex<double>(0, 0));
  EXPECT_FALSE(zero.escaped);

  const auto basilica = critical_orbit(-1, 2, 6);
  ASSERT_EQ(basilica.points.size(), 6u);
  for (std::size_t j = 0; j < 6; ++j) EXPECT_EQ(basilica.points[j], std::complex<double>(j % 2 == 0 ? -1 : 0, 0));

  const auto escaping = critical_orbit(1, 2, 4);
  ASSERT_GE(escaping.points.size(), 4u);
  EXPECT_EQ(escaping.points[0], std::complex<double>(1, 0));
  EXPECT_EQ(escaping.points[1], std::complex<double>(2, 0));
  EXPECT_EQ(escaping.points[2], std::complex<double>(5, 0));
  EXPECT_EQ(escaping.points[3], std::complex<double>(26, 0));
  EXPECT_TRUE(escaping.escaped);
}

TEST(Csv, HeaderAndRows) {
  std::ostringstream out;
  write_centers_csv(out, find_centers(2, 2), 2, 2);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "d,n,re,im,exact_period,residual");
  std::getline(in, line);
  EXPECT_EQ(line.rfind("2,2,-1,0,2,", 0), 0u);
  std::getline(in, line);
  EXPECT_EQ(line.rfind("2,2,0,0,1,", 0), 0u);
}

TEST(Divisors, Basic) {
  EXPECT_EQ(divisors(12), (std::vector<unsigned>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(divisors(1), (std::vector<unsigned>{1}));
}
