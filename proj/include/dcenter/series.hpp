#pragma once

#include <span>
#include <vector>

#include "dcenter/numeric.hpp"

namespace dcenter {

/// Truncated power series sum_{k=0}^{N} c_k z^k with exact rational
/// coefficients. Binary operations on operands of different order truncate to
/// the smaller order.
class FormalPowerSeries {
 public:
  explicit FormalPowerSeries(unsigned order);
  /// Coefficients beyond `order` are dropped; missing ones are zero.
  FormalPowerSeries(std::vector<Rational> coeffs, unsigned order);

  static FormalPowerSeries one(unsigned order);
  static FormalPowerSeries monomial(unsigned k, const Rational& coeff, unsigned order);

  unsigned order() const noexcept { return static_cast<unsigned>(coeffs_.size() - 1); }
  const Rational& operator[](unsigned k) const { return coeffs_.at(k); }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  FormalPowerSeries truncated(unsigned order) const;
  FormalPowerSeries scaled(const Rational& factor) const;
  /// Multiplicative inverse; throws Error{Domain} if the constant term is 0.
  FormalPowerSeries inverse() const;
  /// Integer power; negative exponents go through inverse().
  FormalPowerSeries pow(long exponent) const;

  friend FormalPowerSeries operator+(const FormalPowerSeries& a, const FormalPowerSeries& b);
  friend FormalPowerSeries operator-(const FormalPowerSeries& a, const FormalPowerSeries& b);
  friend FormalPowerSeries operator*(const FormalPowerSeries& a, const FormalPowerSeries& b);
  friend bool operator==(const FormalPowerSeries& a, const FormalPowerSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<Rational> coeffs_;
};

/// sum_{m=1}^{N} phi(m) z^m / (1 - z^m), truncated at N.
FormalPowerSeries lambert_series(unsigned order);

/// (1-z)^{-b} z^b (1-z^s)^b, the generating function of bounded compositions.
FormalPowerSeries bounded_composition_gf(unsigned b, unsigned s, unsigned order);

/// G(z) as the triple sum over first part m, multiplicity w and length r,
/// each inner count taken from count_hcomps_by.
FormalPowerSeries g_series(unsigned d, unsigned order);

/// The intermediate forms of G(z) met while collapsing the triple sum.
struct GSeriesStages {
  /// sum over m, r after summing out n with the bounded-composition GF and
  /// w with the negative-binomial series.
  FormalPowerSeries collapsed;
  /// (d-1)(1-z)/(1-dz) times the Lambert series.
  FormalPowerSeries reduced;
};
GSeriesStages g_series_stages(unsigned d, unsigned order);

/// (d-1) z / ((1 - dz)(1 - z)) expanded exactly.
FormalPowerSeries closed_form_series(unsigned d, unsigned order);

}  // namespace dcenter
