#pragma once

#include <complex>
#include <map>
#include <ostream>
#include <utility>
#include <vector>

#include "dcenter/numeric.hpp"

namespace dcenter {

/// Dense integer polynomial, coefficients from low to high degree. The zero
/// polynomial has no coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  static IntPolynomial monomial(unsigned degree, const BigInt& coeff = 1);

  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  const BigInt& operator[](std::size_t k) const { return coeffs_.at(k); }

  /// Largest |coefficient|, as log2, for root bounds. -inf for the zero polynomial.
  double log2_max_abs_coeff() const;

  /// Horner evaluation carried out in double-double precision.
  std::complex<double> evaluate(std::complex<double> z) const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Quotient and remainder of a by a monic divisor (exact over the integers).
std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& a, const IntPolynomial& divisor);

constexpr unsigned long kDefaultDegreeCap = 100000;

/// h_{n-1}, where h_0 = z and h_r = h_{r-1}^d + z. Throws Error{Size} when
/// d^{n-1} exceeds degree_cap.
IntPolynomial gleason_poly(unsigned d, unsigned n, unsigned long degree_cap = kDefaultDegreeCap);

struct DivisibilityResult {
  IntPolynomial quotient;
  bool exact = false;
};

/// h_{n-1} / h_{m-1}; requires m | n (Error{Precondition} otherwise).
DivisibilityResult divisibility_check(unsigned d, unsigned m, unsigned n,
                                      unsigned long degree_cap = kDefaultDegreeCap);

struct SolverConfig {
  unsigned long degree_cap = kDefaultDegreeCap;
  double residual_tolerance = 1e-8;
  double separation = 1e-8;
  double period_band = 1e-6;
  double gap_factor = 1e3;
  unsigned max_iterations = 5000;
  unsigned newton_iterations = 5;
  unsigned max_restarts = 3;
};

struct DCenter {
  std::complex<double> c;
  unsigned target_n = 0;
  unsigned exact_period = 0;
  double residual = 0.0;
};

/// All d^{n-1} roots of h_{n-1}, sorted by real then imaginary part.
/// Aberth-Ehrlich sweeps in double precision followed by double-double Newton.
/// Throws Error{Solver} on non-convergence and Error{Census} when roots
/// collide within cfg.separation.
std::vector<DCenter> find_centers(unsigned d, unsigned n, const SolverConfig& cfg = {});

/// |f_c^m(0)| = |h_{m-1}(c)| evaluated in double-double precision.
double orbit_return_distance(std::complex<double> c, unsigned d, unsigned m);

/// Smallest divisor m of n with |f_c^m(0)| <= cfg.period_band; all smaller
/// divisors must sit above band * gap_factor (Error{Classification} otherwise).
unsigned classify_exact_period(std::complex<double> c, unsigned d, unsigned n, const SolverConfig& cfg = {});

/// divisor -> number of centers of that exact period among the roots of h_{n-1}.
std::map<unsigned, unsigned> exact_period_census(unsigned d, unsigned n, const SolverConfig& cfg = {});
std::map<unsigned, unsigned> exact_period_census(const std::vector<DCenter>& centers, unsigned n);

/// sum_{k | m} mu(m/k) d^{k-1} for every divisor m of n.
std::map<unsigned, BigInt> moebius_period_counts(unsigned d, unsigned n);

struct CriticalOrbit {
  std::vector<std::complex<double>> points;  ///< z_1 .. z_n (fewer if the orbit overflowed)
  bool escaped = false;
};

/// z_j = f_c^j(0) for f_c(z) = z^d + c. `escaped` is set once |z_j| exceeds
/// max(|c|, 2^{1/(d-1)}), which certifies an unbounded orbit.
CriticalOrbit critical_orbit(std::complex<double> c, unsigned d, unsigned n);

/// CSV with header d,n,re,im,exact_period,residual in the given (sorted) order.
void write_centers_csv(std::ostream& out, const std::vector<DCenter>& centers, unsigned d, unsigned n);

std::vector<unsigned> divisors(unsigned n);

}  // namespace dcenter
