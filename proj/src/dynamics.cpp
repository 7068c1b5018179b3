#include "dcenter/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "dcenter/error.hpp"
#include "double_double.hpp"

namespace dcenter {

using detail::ComplexDD;
using detail::DoubleDouble;

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::monomial(unsigned degree, const BigInt& coeff) {
  std::vector<BigInt> c(std::size_t{degree} + 1);
  c[degree] = coeff;
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

double IntPolynomial::log2_max_abs_coeff() const {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& c : coeffs_) {
    if (c == 0) continue;
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, c.get_mpz_t());
    best = std::max(best, std::log2(std::abs(mant)) + static_cast<double>(exp));
  }
  return best;
}

namespace {

DoubleDouble to_dd(const BigInt& v) {
  const double hi = v.get_d();
  const BigInt rest = v - BigInt(hi);
  return {hi, rest.get_d()};
}

}  // namespace

std::complex<double> IntPolynomial::evaluate(std::complex<double> z) const {
  const ComplexDD x(z);
  ComplexDD acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + ComplexDD(to_dd(*it), 0.0);
  return acc.value();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) mpz_addmul(c[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
  }
  return IntPolynomial(std::move(c));
}

std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& a, const IntPolynomial& divisor) {
  if (!divisor.is_monic()) throw Error(ErrorKind::Domain, "divmod_monic: divisor must be monic");
  const auto& dv = divisor.coeffs();
  std::vector<BigInt> rem = a.coeffs();
  const std::size_t m = dv.size() - 1;
  if (rem.size() < dv.size()) return {IntPolynomial{}, a};
  std::vector<BigInt> quot(rem.size() - m);
  for (std::size_t k = rem.size(); k-- > m;) {
    const BigInt lead = rem[k];
    quot[k - m] = lead;
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= m; ++j) mpz_submul(rem[k - m + j].get_mpz_t(), lead.get_mpz_t(), dv[j].get_mpz_t());
  }
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

namespace {

unsigned long checked_degree(unsigned d, unsigned n, unsigned long cap) {
  if (d < 2) throw Error(ErrorKind::Domain, "Gleason polynomial: d must be >= 2");
  if (n < 1) throw Error(ErrorKind::Domain, "Gleason polynomial: n must be >= 1");
  unsigned long degree = 1;
  for (unsigned i = 1; i < n; ++i) {
    if (degree > cap / d) throw Error(ErrorKind::Size, "Gleason polynomial: degree d^(n-1) exceeds the cap");
    degree *= d;
  }
  if (degree > cap) throw Error(ErrorKind::Size, "Gleason polynomial: degree d^(n-1) exceeds the cap");
  return degree;
}

}  // namespace

IntPolynomial gleason_poly(unsigned d, unsigned n, unsigned long degree_cap) {
  checked_degree(d, n, degree_cap);
  const IntPolynomial z = IntPolynomial::monomial(1);
  IntPolynomial h = z;
  for (unsigned r = 1; r < n; ++r) {
    IntPolynomial power = h;
    for (unsigned e = 1; e < d; ++e) power = power * h;
    h = power + z;
  }
  return h;
}

DivisibilityResult divisibility_check(unsigned d, unsigned m, unsigned n, unsigned long degree_cap) {
  if (m == 0 || n % m != 0) throw Error(ErrorKind::Precondition, "divisibility_check: m must divide n");
  const auto [quotient, remainder] = divmod_monic(gleason_poly(d, n, degree_cap), gleason_poly(d, m, degree_cap));
  return {quotient, remainder.is_zero()};
}

std::vector<unsigned> divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned m = 1; m <= n; ++m)
    if (n % m == 0) out.push_back(m);
  return out;
}

namespace {

// h_{n-1}(c) and its derivative through the recursion; double precision.
std::pair<std::complex<double>, std::complex<double>> gleason_eval(std::complex<double> c, unsigned d, unsigned n) {
  std::complex<double> h = c;
  std::complex<double> dh = 1.0;
  for (unsigned r = 1; r < n; ++r) {
    std::complex<double> pw = 1.0;
    for (unsigned e = 1; e < d; ++e) pw *= h;  // h^{d-1}
    dh = static_cast<double>(d) * pw * dh + 1.0;
    h = pw * h + c;
  }
  return {h, dh};
}

std::pair<ComplexDD, ComplexDD> gleason_eval_dd(const ComplexDD& c, unsigned d, unsigned n) {
  ComplexDD h = c;
  ComplexDD dh(DoubleDouble(1.0), DoubleDouble(0.0));
  const ComplexDD one(DoubleDouble(1.0), DoubleDouble(0.0));
  const ComplexDD deg(DoubleDouble(static_cast<double>(d)), DoubleDouble(0.0));
  for (unsigned r = 1; r < n; ++r) {
    ComplexDD pw = one;
    for (unsigned e = 1; e < d; ++e) pw = pw * h;
    dh = deg * pw * dh + one;
    h = pw * h + c;
  }
  return {h, dh};
}

bool finite(std::complex<double> z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Newton correction p/p'; far from the roots the recursion overflows and
// p/p' ~ c/degree is used instead.
std::complex<double> newton_ratio(std::complex<double> c, unsigned d, unsigned n, double degree) {
  const auto [h, dh] = gleason_eval(c, d, n);
  if (finite(h) && finite(dh) && std::abs(dh) > 0.0) {
    const auto ratio = h / dh;
    if (finite(ratio)) return ratio;
  }
  return c / degree;
}

struct AberthOutcome {
  std::vector<std::complex<double>> roots;
  bool converged = false;
  unsigned iterations = 0;
};

AberthOutcome aberth(unsigned d, unsigned n, std::size_t degree, double radius, double twist, unsigned max_iter) {
  AberthOutcome out;
  auto& z = out.roots;
  z.resize(degree);
  for (std::size_t k = 0; k < degree; ++k) {
    const double angle = 2.0 * std::numbers::pi * (static_cast<double>(k) + twist) / static_cast<double>(degree);
    z[k] = std::polar(radius, angle);
  }
  std::vector<bool> done(degree, false);
  std::vector<std::complex<double>> next(degree);
  const double deg = static_cast<double>(degree);
  for (unsigned iter = 0; iter < max_iter; ++iter) {
    std::size_t active = 0;
    for (std::size_t i = 0; i < degree; ++i) {
      next[i] = z[i];
      if (done[i]) continue;
      ++active;
      const auto ratio = newton_ratio(z[i], d, n, deg);
      std::complex<double> repulsion = 0.0;
      for (std::size_t j = 0; j < degree; ++j)
        if (j != i) repulsion += 1.0 / (z[i] - z[j]);
      auto step = ratio / (1.0 - ratio * repulsion);
      if (!finite(step)) step = ratio;
      next[i] = z[i] - step;
      if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(next[i])))
        done[i] = true;
    }
    z.swap(next);
    out.iterations = iter + 1;
    if (active == 0) {
      out.converged = true;
      break;
    }
  }
  if (!out.converged) out.converged = std::all_of(done.begin(), done.end(), [](bool b) { return b; });
  return out;
}

std::complex<double> refine(std::complex<double> c, unsigned d, unsigned n, unsigned iterations, double& residual) {
  ComplexDD x(c);
  for (unsigned i = 0; i < iterations; ++i) {
    const auto [h, dh] = gleason_eval_dd(x, d, n);
    if (abs(dh) == 0.0) break;
    x = x - h / dh;
  }
  residual = abs(gleason_eval_dd(x, d, n).first);
  return x.value();
}

bool center_less(const DCenter& a, const DCenter& b) {
  constexpr double kTie = 1e-12;
  if (std::abs(a.c.real() - b.c.real()) > kTie) return a.c.real() < b.c.real();
  return a.c.imag() < b.c.imag();
}

}  // namespace

double orbit_return_distance(std::complex<double> c, unsigned d, unsigned m) {
  if (m == 0) return 0.0;
  return abs(gleason_eval_dd(ComplexDD(c), d, m).first);
}

unsigned classify_exact_period(std::complex<double> c, unsigned d, unsigned n, const SolverConfig& cfg) {
  const double reject_floor = cfg.period_band * cfg.gap_factor;
  for (unsigned m : divisors(n)) {
    const double dist = orbit_return_distance(c, d, m);
    if (dist <= cfg.period_band) return m;
    if (dist < reject_floor) {
      std::ostringstream msg;
      msg << "classify_exact_period: |f_c^" << m << "(0)| = " << dist << " for c = " << c
          << " falls between the acceptance band and the rejection floor";
      throw Error(ErrorKind::Classification, msg.str());
    }
  }
  std::ostringstream msg;
  msg << "classify_exact_period: c = " << c << " is not a center of period " << n;
  throw Error(ErrorKind::Classification, msg.str());
}

std::vector<DCenter> find_centers(unsigned d, unsigned n, const SolverConfig& cfg) {
  const unsigned long degree = checked_degree(d, n, cfg.degree_cap);
  if (degree == 1) return {DCenter{{0.0, 0.0}, n, 1, 0.0}};

  const IntPolynomial poly = gleason_poly(d, n, cfg.degree_cap);
  const double radius = 1.0 + std::exp2(poly.log2_max_abs_coeff() / static_cast<double>(degree));

  std::string last_failure;
  for (unsigned attempt = 0; attempt <= cfg.max_restarts; ++attempt) {
    const double twist = 0.25 + 0.1 * attempt;
    const auto outcome = aberth(d, n, degree, radius * (1.0 + 0.05 * attempt), twist, cfg.max_iterations);

    std::vector<DCenter> centers;
    centers.reserve(degree);
    bool residual_ok = true;
    for (const auto& z : outcome.roots) {
      DCenter center;
      center.target_n = n;
      center.c = refine(z, d, n, cfg.newton_iterations, center.residual);
      if (!(center.residual <= cfg.residual_tolerance)) {
        residual_ok = false;
        std::ostringstream msg;
        msg << "find_centers(d=" << d << ", n=" << n << "): root " << center.c << " has residual "
            << center.residual << " after " << outcome.iterations << " Aberth sweeps"
            << (outcome.converged ? "" : " (sweeps did not converge)");
        last_failure = msg.str();
        break;
      }
      centers.push_back(center);
    }
    if (!residual_ok) continue;

    std::sort(centers.begin(), centers.end(), center_less);
    double closest = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < centers.size(); ++i)
      for (std::size_t j = i + 1; j < centers.size(); ++j) closest = std::min(closest, std::abs(centers[i].c - centers[j].c));
    if (!(closest > cfg.separation)) {
      std::ostringstream msg;
      msg << "find_centers(d=" << d << ", n=" << n << "): two roots within " << closest
          << "; distinct roots fewer than " << degree;
      last_failure = msg.str();
      continue;
    }

    for (auto& center : centers) center.exact_period = classify_exact_period(center.c, d, n, cfg);
    return centers;
  }
  if (last_failure.find("residual") != std::string::npos) throw Error(ErrorKind::Solver, last_failure);
  throw Error(ErrorKind::Census, last_failure);
}

std::map<unsigned, unsigned> exact_period_census(const std::vector<DCenter>& centers, unsigned n) {
  std::map<unsigned, unsigned> census;
  for (unsigned m : divisors(n)) census[m] = 0;
  for (const auto& c : centers) ++census[c.exact_period];
  return census;
}

std::map<unsigned, unsigned> exact_period_census(unsigned d, unsigned n, const SolverConfig& cfg) {
  return exact_period_census(find_centers(d, n, cfg), n);
}

std::map<unsigned, BigInt> moebius_period_counts(unsigned d, unsigned n) {
  std::map<unsigned, BigInt> out;
  for (unsigned m : divisors(n)) {
    BigInt total;
    for (unsigned k : divisors(m)) total += moebius(m / k) * ipow(static_cast<long>(d), k - 1);
    out[m] = total;
  }
  return out;
}

CriticalOrbit critical_orbit(std::complex<double> c, unsigned d, unsigned n) {
  if (d < 2) throw Error(ErrorKind::Domain, "critical_orbit: d must be >= 2");
  CriticalOrbit out;
  const double escape = std::max(std::abs(c), std::pow(2.0, 1.0 / (d - 1)));
  std::complex<double> z = 0.0;
  for (unsigned j = 1; j <= n; ++j) {
    std::complex<double> pw = 1.0;
    for (unsigned e = 0; e < d; ++e) pw *= z;
    z = pw + c;
    if (!finite(z)) {
      out.escaped = true;
      break;
    }
    out.points.push_back(z);
    if (std::abs(z) > escape) out.escaped = true;
  }
  return out;
}

void write_centers_csv(std::ostream& out, const std::vector<DCenter>& centers, unsigned d, unsigned n) {
  out << "d,n,re,im,exact_period,residual\n";
  std::ostringstream line;
  line << std::setprecision(17);
  for (const auto& c : centers) {
    line.str("");
    line << d << ',' << n << ',' << c.c.real() << ',' << c.c.imag() << ',' << c.exact_period << ','
         << c.residual << '\n';
    out << line.str();
  }
}

}  // namespace dcenter
