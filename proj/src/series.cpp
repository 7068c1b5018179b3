#include "dcenter/series.hpp"

#include <algorithm>

#include "dcenter/error.hpp"
#include "dcenter/hcomp.hpp"

namespace dcenter {

FormalPowerSeries::FormalPowerSeries(unsigned order) : coeffs_(std::size_t{order} + 1) {}

FormalPowerSeries::FormalPowerSeries(std::vector<Rational> coeffs, unsigned order)
    : coeffs_(std::move(coeffs)) {
  coeffs_.resize(std::size_t{order} + 1);
}

FormalPowerSeries FormalPowerSeries::one(unsigned order) { return monomial(0, 1, order); }

FormalPowerSeries FormalPowerSeries::monomial(unsigned k, const Rational& coeff, unsigned order) {
  FormalPowerSeries out(order);
  if (k <= order) out.coeffs_[k] = coeff;
  return out;
}

FormalPowerSeries FormalPowerSeries::truncated(unsigned order) const {
  return FormalPowerSeries(
      std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + std::min<std::size_t>(coeffs_.size(), order + 1)),
      order);
}

FormalPowerSeries FormalPowerSeries::scaled(const Rational& factor) const {
  FormalPowerSeries out(*this);
  for (auto& c : out.coeffs_) c *= factor;
  return out;
}

FormalPowerSeries FormalPowerSeries::inverse() const {
  if (sgn(coeffs_[0]) == 0)
    throw Error(ErrorKind::Domain, "invert_unit: constant coefficient is zero");
  const unsigned n = order();
  FormalPowerSeries out(n);
  const Rational inv0 = 1 / coeffs_[0];
  out.coeffs_[0] = inv0;
  Rational acc;
  for (unsigned k = 1; k <= n; ++k) {
    acc = 0;
    for (unsigned j = 1; j <= k; ++j) {
      if (sgn(coeffs_[j]) == 0) continue;
      acc += coeffs_[j] * out.coeffs_[k - j];
    }
    out.coeffs_[k] = -acc * inv0;
  }
  return out;
}

FormalPowerSeries FormalPowerSeries::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  FormalPowerSeries result = one(order());
  FormalPowerSeries base = *this;
  auto e = static_cast<unsigned long>(exponent);
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

FormalPowerSeries operator+(const FormalPowerSeries& a, const FormalPowerSeries& b) {
  const unsigned n = std::min(a.order(), b.order());
  FormalPowerSeries out(n);
  for (unsigned k = 0; k <= n; ++k) out.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
  return out;
}

FormalPowerSeries operator-(const FormalPowerSeries& a, const FormalPowerSeries& b) {
  const unsigned n = std::min(a.order(), b.order());
  FormalPowerSeries out(n);
  for (unsigned k = 0; k <= n; ++k) out.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
  return out;
}

FormalPowerSeries operator*(const FormalPowerSeries& a, const FormalPowerSeries& b) {
  const unsigned n = std::min(a.order(), b.order());
  FormalPowerSeries out(n);
  for (unsigned i = 0; i <= n; ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (unsigned j = 0; i + j <= n; ++j) {
      if (sgn(b.coeffs_[j]) == 0) continue;
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

namespace {

// 1 - coeff * z^k
FormalPowerSeries one_minus(const Rational& coeff, unsigned k, unsigned order) {
  return FormalPowerSeries::one(order) - FormalPowerSeries::monomial(k, coeff, order);
}

void require_order(unsigned order, const char* who) {
  if (order == 0) throw Error(ErrorKind::Domain, std::string(who) + ": order must be >= 1");
}

}  // namespace

FormalPowerSeries lambert_series(unsigned order) {
  require_order(order, "lambert_series");
  FormalPowerSeries sum(order);
  for (unsigned m = 1; m <= order; ++m) {
    const auto term = FormalPowerSeries::monomial(m, static_cast<unsigned long>(totient(m)), order) *
                      one_minus(1, m, order).inverse();
    sum = sum + term;
  }
  return sum;
}

FormalPowerSeries bounded_composition_gf(unsigned b, unsigned s, unsigned order) {
  require_order(order, "bounded_composition_gf");
  if (s == 0) throw Error(ErrorKind::Domain, "bounded_composition_gf: s must be >= 1");
  const auto zb = FormalPowerSeries::monomial(b, 1, order);
  return one_minus(1, 1, order).pow(-static_cast<long>(b)) * zb * one_minus(1, s, order).pow(b);
}

FormalPowerSeries g_series(unsigned d, unsigned order) {
  require_order(order, "g_series");
  if (d == 0) throw Error(ErrorKind::Domain, "g_series: d must be >= 1");
  std::vector<Rational> coeffs(std::size_t{order} + 1);
  for (unsigned n = 1; n <= order; ++n) {
    BigInt total;
    for (unsigned m = 1; m <= n; ++m) {
      const BigInt phi = static_cast<unsigned long>(totient(m));
      for (unsigned w = 0; (w + 1) * m <= n; ++w) {
        const unsigned r_max = w + 1 + (n - (w + 1) * m);
        for (unsigned r = w + 1; r <= r_max; ++r) {
          const BigInt count = count_hcomps_by(m, w, r, n);
          if (count == 0) continue;
          total += count * phi * ipow(static_cast<long>(d) - 1, r - w) * ipow(static_cast<long>(d), w);
        }
      }
    }
    coeffs[n] = total;
  }
  return FormalPowerSeries(std::move(coeffs), order);
}

GSeriesStages g_series_stages(unsigned d, unsigned order) {
  require_order(order, "g_series_stages");
  if (d == 0) throw Error(ErrorKind::Domain, "g_series_stages: d must be >= 1");
  const Rational dm1 = static_cast<long>(d) - 1;
  const Rational dq = static_cast<long>(d);
  const auto inv_one_minus_z = one_minus(1, 1, order).inverse();

  FormalPowerSeries collapsed(order);
  for (unsigned m = 1; m <= order; ++m) {
    const Rational phi = static_cast<unsigned long>(totient(m));
    // Per-r factor z(1 - z^{m-1})/(1 - z); for m = 1 it vanishes identically.
    const auto step = FormalPowerSeries::monomial(1, 1, order) * one_minus(1, m - 1, order) * inv_one_minus_z;
    const auto inv_geom = one_minus(dq, m, order).inverse();  // (1 - d z^m)^{-1}
    const auto head = FormalPowerSeries::monomial(m, phi * dm1, order) * inv_geom;
    FormalPowerSeries power = FormalPowerSeries::one(order);  // step^r
    FormalPowerSeries tail = head;                           // phi (d-1)^{r+1} z^m (1-dz^m)^{-r-1}
    for (unsigned r = 0; r + m <= order; ++r) {
      collapsed = collapsed + power * tail;
      power = power * step;
      tail = (tail * inv_geom).scaled(dm1);
    }
  }

  auto reduced = (one_minus(1, 1, order) * one_minus(dq, 1, order).inverse()).scaled(dm1) *
                 lambert_series(order);
  return {std::move(collapsed), std::move(reduced)};
}

FormalPowerSeries closed_form_series(unsigned d, unsigned order) {
  require_order(order, "closed_form_series");
  if (d == 0) throw Error(ErrorKind::Domain, "closed_form_series: d must be >= 1");
  return FormalPowerSeries::monomial(1, static_cast<long>(d) - 1, order) *
         one_minus(static_cast<long>(d), 1, order).inverse() * one_minus(1, 1, order).inverse();
}

}  // namespace dcenter
