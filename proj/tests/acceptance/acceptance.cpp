// Acceptance suite. Each criterion calls the library and checks the result
// against references computed here, independently of the library code.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "../unit/oracles.hpp"
#include "dcenter/circle.hpp"
#include "dcenter/dynamics.hpp"
#include "dcenter/hcomp.hpp"
#include "dcenter/render.hpp"
#include "dcenter/series.hpp"

using namespace dcenter;

namespace {

struct Outcome {
  std::vector<std::string> failures;
  std::string detail;

  void fail(const std::string& what) {
    if (failures.size() < 5) failures.push_back(what);
    else if (failures.size() == 5) failures.push_back("...");
  }
};

BigInt big_pow(unsigned long base, unsigned long exp) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
  return out;
}

BigInt big_binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

// term for parts computed from scratch
BigInt oracle_term(const std::vector<unsigned>& parts, unsigned d) {
  unsigned omega = 0;
  for (std::size_t i = 1; i < parts.size(); ++i) omega += parts[i] == parts[0];
  return oracle::totient(parts[0]) * big_pow(d - 1, parts.size() - omega) * big_pow(d, omega);
}

// ---------------------------------------------------------------------------

void ac1_identity(Outcome& out) {
  unsigned pairs = 0;
  for (unsigned n = 1; n <= 18; ++n) {
    const auto h = oracle::h_compositions(n);
    for (unsigned d = 1; d <= 6; ++d) {
      BigInt brute = 0;
      for (const auto& parts : h) brute += oracle_term(parts, d);
      const BigInt rhs = big_pow(d, n) - 1;
      const auto ic = identity_check(n, d);
      ++pairs;
      if (!ic.equal || ic.lhs != rhs || ic.rhs != rhs || brute != rhs)
        out.fail("n=" + std::to_string(n) + " d=" + std::to_string(d) + ": lhs " + ic.lhs.get_str() + ", oracle " +
                 brute.get_str() + ", d^n-1 " + rhs.get_str());
    }
  }
  // worked example n = 5, d = 3, in the expected order
  const std::vector<std::vector<unsigned>> listed{{5}, {4, 1}, {3, 2}, {3, 1, 1}, {2, 2, 1}, {2, 1, 2}, {2, 1, 1, 1}, {1, 1, 1, 1, 1}};
  const std::vector<long> listed_terms{8, 8, 8, 16, 12, 12, 16, 162};
  const auto h5 = enumerate_hcompositions(5);
  if (h5.size() != listed.size()) out.fail("|H(5)| = " + std::to_string(h5.size()));
  BigInt sum = 0;
  for (std::size_t i = 0; i < std::min(h5.size(), listed.size()); ++i) {
    const std::vector<unsigned> parts(h5[i].parts().begin(), h5[i].parts().end());
    if (parts != listed[i]) out.fail("H(5) element " + std::to_string(i) + " out of order");
    const BigInt t = term_value(h5[i], 3);
    if (t != listed_terms[i]) out.fail("term " + std::to_string(i) + " = " + t.get_str());
    sum += t;
  }
  if (sum != 242 || identity_check(5, 3).lhs != 242) out.fail("(5,3) sum " + sum.get_str());
  out.detail = std::to_string(pairs) + " (n,d) pairs exact; (5,3) terms 8,8,8,16,12,12,16,162 = 242";
}

void ac2_series(Outcome& out) {
  for (unsigned d = 1; d <= 5; ++d) {
    const auto g = g_series(d, 30);
    const auto closed = closed_form_series(d, 30);
    for (unsigned k = 0; k <= 30; ++k) {
      const Rational expected = k == 0 ? Rational(0) : Rational(big_pow(d, k) - 1);
      if (g[k] != expected || closed[k] != expected)
        out.fail("d=" + std::to_string(d) + " z^" + std::to_string(k) + ": G " + g[k].get_str() + ", closed " + closed[k].get_str());
    }
  }
  const auto lambert = lambert_series(200);
  for (unsigned k = 1; k <= 200; ++k)
    if (lambert[k] != k) out.fail("Lambert z^" + std::to_string(k) + " = " + lambert[k].get_str());
  unsigned compared = 0;
  for (unsigned b = 0; b <= 8; ++b) {
    for (unsigned s = 1; s <= 8; ++s) {
      const auto gf = bounded_composition_gf(b, s, 40);
      for (long n = 0; n <= 40; ++n, ++compared) {
        // inclusion-exclusion over parts exceeding s
        BigInt expected = 0;
        if (b == 0) {
          expected = n == 0 ? 1 : 0;
        } else {
          for (long j = 0; j <= static_cast<long>(b); ++j) {
            const BigInt term = big_binomial(b, j) * big_binomial(n - j * static_cast<long>(s) - 1, b - 1);
            expected += (j % 2 ? -1 : 1) * term;
          }
        }
        if (gf[static_cast<unsigned>(n)] != Rational(expected) || count_bounded_compositions(n, b, s) != expected)
          out.fail("C(" + std::to_string(n) + "," + std::to_string(b) + "," + std::to_string(s) + ")");
      }
    }
  }
  out.detail = "G = closed form = d^k-1 (d<=5, k<=30); Lambert 1..200; " + std::to_string(compared) +
               " bounded-composition coefficients";
}

void ac3_rotation_sets(Outcome& out) {
  unsigned cases = 0;
  for (unsigned d = 2; d <= 5; ++d) {
    for (unsigned q = 2; q <= 7; ++q) {
      const BigInt period_den = big_pow(d, q) - 1;
      for (unsigned p = 1; p < q; ++p) {
        if (std::gcd(p, q) != 1) continue;
        ++cases;
        const std::string tag = "(" + std::to_string(d) + "," + std::to_string(p) + "," + std::to_string(q) + ")";
        const auto sets = enumerate_rotation_sets(d, p, q);
        if (sets.size() != d - 1) out.fail(tag + ": " + std::to_string(sets.size()) + " sets");
        std::set<Rational> used;
        for (const auto& rs : sets) {
          std::vector<Rational> v;
          for (const auto& a : rs.angles) v.push_back(a.value());
          if (v.size() != q || !std::is_sorted(v.begin(), v.end())) {
            out.fail(tag + ": malformed set");
            continue;
          }
          for (std::size_t i = 0; i < q; ++i) {
            if (v[i] < 0 || v[i] >= 1 || period_den % v[i].get_den() != 0) out.fail(tag + ": bad angle");
            Rational image = v[i] * d;
            image -= Rational(BigInt(image.get_num() / image.get_den()));
            if (image != v[(i + p) % q]) out.fail(tag + ": does not rotate by p/q");
            if (!used.insert(v[i]).second) out.fail(tag + ": sets overlap");
          }
          // widest gap from scratch; the wrap-around gap is the one through 0
          std::vector<Rational> gaps;
          for (std::size_t i = 0; i < q; ++i) gaps.push_back(i + 1 < q ? Rational(v[i + 1] - v[i]) : Rational(v[0] + 1 - v[i]));
          const auto widest = std::max_element(gaps.begin(), gaps.end());
          if (std::count(gaps.begin(), gaps.end(), *widest) != 1) out.fail(tag + ": widest gap tie");
          if (widest != gaps.end() - 1) out.fail(tag + ": widest gap misses 0");
          const auto g = widest_gap(rs);
          if (g.length != *widest || !g.contains_zero()) out.fail(tag + ": library gap disagrees");
        }
      }
    }
  }
  std::vector<Angle> two_fifths;
  for (long k : {5, 14, 15, 42, 45}) two_fifths.emplace_back(k, 121);
  const auto fig = enumerate_rotation_sets(3, 2, 5);
  if (std::none_of(fig.begin(), fig.end(), [&](const RotationSet& rs) { return rs.angles == two_fifths; }))
    out.fail("(3,2,5) lacks {5,14,15,42,45}/121");
  out.detail = std::to_string(cases) + " rotation numbers, d-1 sets each; {5,14,15,42,45}/121 present; gaps contain 0";
}

void ac4_ledger(Outcome& out) {
  unsigned checked = 0;
  for (unsigned d = 1; d <= 4; ++d) {
    for (unsigned n = 1; n <= 8; ++n) {
      BigInt total = 1;
      for (const auto& p : enumerate_hcompositions(n)) {
        if (p.first() == 1) continue;
        const std::vector<unsigned> parts(p.parts().begin(), p.parts().end());
        const BigInt assembled = prop32_count(p, d);
        ++checked;
        if (assembled != oracle_term(parts, d))
          out.fail("d=" + std::to_string(d) + " n=" + std::to_string(n) + ": " + assembled.get_str() + " vs " +
                   oracle_term(parts, d).get_str());
        total += assembled;
      }
      if (total != big_pow(d, n - 1)) out.fail("d=" + std::to_string(d) + " n=" + std::to_string(n) + " total " + total.get_str());
    }
  }
  out.detail = std::to_string(checked) + " compositions; every sum + 1 = d^(n-1)";
}

std::complex<long double> iterate(std::complex<long double> c, unsigned d, unsigned m) {
  std::complex<long double> z = 0;
  for (unsigned k = 0; k < m; ++k) {
    std::complex<long double> p = 1;
    for (unsigned e = 0; e < d; ++e) p *= z;
    z = p + c;
  }
  return z;
}

void ac5_census(Outcome& out) {
  std::vector<std::pair<unsigned, unsigned>> points;
  for (unsigned n = 1; n <= 9; ++n) points.emplace_back(2, n);
  for (unsigned n = 1; n <= 6; ++n) points.emplace_back(3, n);
  for (unsigned n = 1; n <= 5; ++n) points.emplace_back(4, n);

  std::map<std::pair<unsigned, unsigned>, std::vector<DCenter>> found;
  double worst_residual = 0, closest = 1e9;
  unsigned divisions = 0;
  for (auto [d, n] : points) {
    const std::string tag = "(d=" + std::to_string(d) + ",n=" + std::to_string(n) + ")";
    std::vector<DCenter> roots;
    try {
      roots = find_centers(d, n);
    } catch (const std::exception& e) {
      out.fail(tag + " " + e.what());
      continue;
    }
    found[{d, n}] = roots;
    if (BigInt(static_cast<unsigned long>(roots.size())) != big_pow(d, n - 1)) out.fail(tag + " root count " + std::to_string(roots.size()));

    std::map<unsigned, long> census;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      const std::complex<long double> c(roots[i].c.real(), roots[i].c.imag());
      const double residual = static_cast<double>(std::abs(iterate(c, d, n)));
      worst_residual = std::max(worst_residual, residual);
      if (!(residual < 1e-8)) out.fail(tag + " residual " + std::to_string(residual));
      for (std::size_t j = i + 1; j < roots.size(); ++j) {
        const double dist = std::abs(roots[i].c - roots[j].c);
        closest = std::min(closest, dist);
        if (!(dist > 1e-8)) out.fail(tag + " roots closer than 1e-8");
      }
      unsigned period = 0;
      for (unsigned m = 1; m <= n && !period; ++m)
        if (n % m == 0 && std::abs(iterate(c, d, m)) < 1e-6L) period = m;
      ++census[period];
      if (period != roots[i].exact_period) out.fail(tag + " period label " + std::to_string(roots[i].exact_period) + " vs " + std::to_string(period));
    }
    for (unsigned m = 1; m <= n; ++m) {
      if (n % m) continue;
      long expected = 0;
      for (unsigned k = 1; k <= m; ++k)
        if (m % k == 0) expected += oracle::moebius(m / k) * big_pow(d, k - 1).get_si();
      if (census[m] != expected) out.fail(tag + " exact period " + std::to_string(m) + ": " + std::to_string(census[m]) + " vs " + std::to_string(expected));

      // exact division by schoolbook long division over the integers
      const auto big = gleason_poly(d, n).coeffs();
      const auto small = gleason_poly(d, m).coeffs();
      std::vector<BigInt> rem(big.begin(), big.end());
      for (std::size_t top = rem.size(); top-- >= small.size();) {
        const BigInt lead = rem[top];
        if (lead == 0) continue;
        for (std::size_t k = 0; k < small.size(); ++k) rem[top - (small.size() - 1) + k] -= lead * small[k];
        if (top == 0) break;
      }
      ++divisions;
      if (std::any_of(rem.begin(), rem.end(), [](const BigInt& v) { return v != 0; })) out.fail(tag + " h_" + std::to_string(m - 1) + " leaves a remainder");
      if (!divisibility_check(d, m, n).exact) out.fail(tag + " library division inexact for m=" + std::to_string(m));

      if (m < n && found.count({d, m})) {
        for (const auto& s : found[{d, m}]) {
          const bool present = std::any_of(roots.begin(), roots.end(), [&](const DCenter& r) { return std::abs(r.c - s.c) <= 1e-8; });
          if (!present) out.fail(tag + " misses a root of h_" + std::to_string(m - 1));
        }
      }
    }
  }
  std::ostringstream s;
  s << points.size() << " census points; worst residual " << worst_residual << "; closest pair " << closest << "; "
    << divisions << " exact divisions";
  out.detail = s.str();
}

void ac6_renormalization(Outcome& out) {
  unsigned renormalizable = 0;
  for (unsigned n = 1; n <= 12; ++n) {
    for (const auto& parts : oracle::h_compositions(n)) {
      const unsigned r = static_cast<unsigned>(parts.size());
      unsigned block = 0;
      for (unsigned len = 1; len < r && !block; ++len) {
        if (r % len) continue;
        bool repeats = true;
        for (unsigned i = len; i < r; ++i) repeats = repeats && parts[i] == parts[i - len];
        if (repeats) block = len;
      }
      const auto split = renormalization_split(HComposition(parts));
      if (static_cast<bool>(split) != (block != 0)) {
        out.fail("n=" + std::to_string(n) + " split presence disagrees");
        continue;
      }
      if (!split) continue;
      ++renormalizable;
      unsigned omega = 0, w_block = 0, n_block = 0;
      for (unsigned i = 1; i < r; ++i) omega += parts[i] == parts[0];
      for (unsigned i = 0; i < block; ++i) {
        n_block += parts[i];
        w_block += i > 0 && parts[i] == parts[0];
      }
      if (split->r_prime != block || split->n_prime != n_block || split->w_prime != w_block) out.fail("n=" + std::to_string(n) + " block data");
      if ((r * (w_block + 1)) % block != 0 || r * (w_block + 1) / block - 1 != omega) out.fail("n=" + std::to_string(n) + " omega relation");
      if ((block * n) % r != 0 || block * n / r != n_block) out.fail("n=" + std::to_string(n) + " n' relation");
    }
  }
  out.detail = std::to_string(renormalizable) + " renormalizable compositions with n <= 12";
}

void ac7_portraits(Outcome& out) {
  const auto p = build_portrait(Angle(1, 7), Angle(6, 7), 2, 3);
  const std::vector<std::vector<Rational>> expected{{Rational(1, 7), Rational(6, 7)}, {Rational(2, 7), Rational(5, 7)}, {Rational(3, 7), Rational(4, 7)}};
  std::vector<std::vector<Rational>> got;
  for (const auto& set : p.theta_sets) {
    got.emplace_back();
    for (const auto& a : set) got.back().push_back(a.value());
    std::sort(got.back().begin(), got.back().end());
  }
  if (got != expected) out.fail("valid portrait differs");
  std::string named = "none";
  try {
    build_portrait(Angle(1, 7), Angle(2, 7), 2, 3);
    out.fail("{1/7,2/7} accepted");
  } catch (const PortraitError& e) {
    named = to_string(e.property());
    if (e.property() != PortraitProperty::Unlinked) out.fail(std::string("rejected for ") + named);
  }
  out.detail = "period-3 portrait validates; {1/7,2/7} rejected (" + named + ")";
}

void ac8_render(Outcome& out) {
  namespace fs = std::filesystem;
  const fs::path base = fs::temp_directory_path() / ("dcenter-acceptance-" + std::to_string(::getpid()));
  Viewport vp;
  vp.width = vp.height = 256;
  const auto read = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  render_julia(0, 2, vp, base.string() + "-1.ppm");
  render_julia(0, 2, vp, base.string() + "-2.ppm");
  const std::string a = read(base.string() + "-1.ppm");
  const std::string b = read(base.string() + "-2.ppm");
  fs::remove(base.string() + "-1.ppm");
  fs::remove(base.string() + "-2.ppm");
  if (a != b) out.fail("runs differ");
  const std::string header = "P6\n256 256\n255\n";
  if (a.compare(0, header.size(), header) != 0 || a.size() != header.size() + 256 * 256 * 3) {
    out.fail("malformed P6");
    return;
  }
  // pixel centres on [-2,2]^2, row 0 at the top
  const double px = 4.0 / 256;
  unsigned off = 0;
  for (unsigned y = 0; y < 256; ++y)
    for (unsigned x = 0; x < 256; ++x) {
      const std::complex<double> z(-2 + (x + 0.5) * px, 2 - (y + 0.5) * px);
      const std::size_t at = header.size() + 3 * (y * 256 + x);
      const bool interior = a[at] == 0 && a[at + 1] == 0 && a[at + 2] == 0;
      if ((std::abs(z) < 1 - px && !interior) || (std::abs(z) > 1 + px && interior)) ++off;
    }
  if (off) out.fail(std::to_string(off) + " pixels outside the 1-pixel band disagree with the unit disk");
  out.detail = "256x256 P6 byte-identical across runs; mask = unit disk within 1 pixel";
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget_s;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria{
      {"AC1 identity", 60, ac1_identity},          {"AC2 generating functions", 10, ac2_series},
      {"AC3 rotation sets", 60, ac3_rotation_sets}, {"AC4 count ledger", 30, ac4_ledger},
      {"AC5 Gleason census", 180, ac5_census},      {"AC6 renormalization", 60, ac6_renormalization},
      {"AC7 portraits", 60, ac7_portraits},         {"AC8 render", 60, ac8_render},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budget_s) out.fail("took " + std::to_string(seconds) + " s, budget " + std::to_string(c.budget_s) + " s");
    const bool pass = out.failures.empty();
    failed += !pass;
    std::cout << (pass ? "PASS" : "FAIL") << "  " << c.name << "  (" << std::fixed << std::setprecision(2) << seconds
              << " s)  " << (pass ? out.detail : "") << "\n";
    std::cout.unsetf(std::ios::fixed);
    for (const auto& f : out.failures) std::cout << "      " << f << "\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
