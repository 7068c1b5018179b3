#include "dcenter/verify.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <numeric>
#include <sstream>

#include <unistd.h>

#include "dcenter/circle.hpp"
#include "dcenter/error.hpp"
#include "dcenter/hcomp.hpp"
#include "dcenter/parallel.hpp"
#include "dcenter/render.hpp"
#include "dcenter/series.hpp"

namespace dcenter {

std::vector<std::pair<unsigned, unsigned>> default_census_points() {
  std::vector<std::pair<unsigned, unsigned>> points;
  for (unsigned n = 1; n <= 9; ++n) points.emplace_back(2, n);
  for (unsigned n = 1; n <= 6; ++n) points.emplace_back(3, n);
  for (unsigned n = 1; n <= 5; ++n) points.emplace_back(4, n);
  return points;
}

namespace {

using Clock = std::chrono::steady_clock;

// Collects the first few failures of a sweep.
class Failures {
 public:
  void add(const std::string& what) {
    ++count_;
    if (count_ <= 3) text_ += (text_.empty() ? "" : "; ") + what;
  }
  bool empty() const { return count_ == 0; }
  std::string str() const {
    return count_ <= 3 ? text_ : text_ + "; ... (" + std::to_string(count_) + " failures)";
  }

 private:
  std::size_t count_ = 0;
  std::string text_;
};

CheckRecord timed(std::string id, std::map<std::string, std::string> params, std::string expected, double budget_s,
                  const std::function<std::string(Failures&)>& body) {
  CheckRecord rec{std::move(id), std::move(params), std::move(expected), "", false, 0.0};
  Failures failures;
  const auto start = Clock::now();
  try {
    rec.actual = body(failures);
  } catch (const std::exception& e) {
    failures.add(std::string("exception: ") + e.what());
  }
  rec.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  if (budget_s > 0 && rec.elapsed_ms > budget_s * 1000.0)
    failures.add("exceeded time budget of " + std::to_string(budget_s) + " s");
  rec.pass = failures.empty();
  if (!rec.pass) rec.actual = failures.str();
  return rec;
}

std::string str(unsigned v) { return std::to_string(v); }

std::string join(const std::vector<std::string>& items, const char* sep = ",") {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : sep) + s;
  return out;
}

}  // namespace

CheckRecord check_identity(const VerifyConfig& cfg) {
  return timed(
      "AC1.identity", {{"n_max", str(cfg.identity_n_max)}, {"d_max", str(cfg.identity_d_max)}},
      "sum over H(n) equals d^n-1 for every (n,d); H(5), d=3 gives terms 8,8,8,16,12,12,16,162 summing to 242",
      cfg.identity_budget_s, [&](Failures& f) {
        unsigned pairs = 0;
        for (unsigned n = 1; n <= cfg.identity_n_max; ++n) {
          for (unsigned d = 1; d <= cfg.identity_d_max; ++d) {
            const auto ic = identity_check(n, d);
            ++pairs;
            if (!ic.equal) f.add("(n=" + str(n) + ",d=" + str(d) + ") lhs=" + to_string(ic.lhs) + " rhs=" + to_string(ic.rhs));
          }
        }
        const std::vector<std::vector<unsigned>> h5{{5}, {4, 1}, {3, 2}, {3, 1, 1}, {2, 2, 1}, {2, 1, 2}, {2, 1, 1, 1}, {1, 1, 1, 1, 1}};
        const std::vector<long> terms{8, 8, 8, 16, 12, 12, 16, 162};
        const auto listed = enumerate_hcompositions(5);
        std::vector<std::string> got;
        BigInt sum;
        if (listed.size() != h5.size()) f.add("|H(5)| = " + std::to_string(listed.size()));
        for (std::size_t i = 0; i < std::min(listed.size(), h5.size()); ++i) {
          const auto parts = listed[i].parts();
          if (!std::equal(parts.begin(), parts.end(), h5[i].begin(), h5[i].end())) f.add("H(5) element " + std::to_string(i) + " differs");
          const BigInt t = term_value(listed[i], 3);
          got.push_back(to_string(t));
          sum += t;
          if (t != terms[i]) f.add("term " + std::to_string(i) + " = " + to_string(t));
        }
        if (sum != 242) f.add("H(5) sum = " + to_string(sum));
        return std::to_string(pairs) + " pairs equal; H(5), d=3 terms " + join(got) + " sum " + to_string(sum);
      });
}

CheckRecord check_generating_functions(const VerifyConfig& cfg) {
  return timed(
      "AC2.generating_functions",
      {{"d_max", str(cfg.series_d_max)}, {"order", str(cfg.series_order)}, {"lambert_order", str(cfg.lambert_order)},
       {"bounded_bs_max", str(cfg.bounded_bs_max)}, {"bounded_order", str(cfg.bounded_order)}},
      "G(z) = (d-1)z/((1-dz)(1-z)) coefficientwise; Lambert coefficients 1..N; bounded-composition GF = DP counts",
      cfg.series_budget_s, [&](Failures& f) {
        for (unsigned d = 1; d <= cfg.series_d_max; ++d) {
          const auto closed = closed_form_series(d, cfg.series_order);
          const auto g = g_series(d, cfg.series_order);
          const auto stages = g_series_stages(d, cfg.series_order);
          if (!(g == closed)) f.add("triple sum != closed form for d=" + str(d));
          if (!(stages.collapsed == closed)) f.add("collapsed form != closed form for d=" + str(d));
          if (!(stages.reduced == closed)) f.add("reduced form != closed form for d=" + str(d));
        }
        const auto lambert = lambert_series(cfg.lambert_order);
        for (unsigned k = 0; k <= cfg.lambert_order; ++k)
          if (lambert[k] != k) f.add("Lambert coefficient " + str(k) + " = " + lambert[k].get_str());
        unsigned compared = 0;
        for (unsigned b = 0; b <= cfg.bounded_bs_max; ++b) {
          for (unsigned s = 1; s <= cfg.bounded_bs_max; ++s) {
            const auto gf = bounded_composition_gf(b, s, cfg.bounded_order);
            for (unsigned n = 0; n <= cfg.bounded_order; ++n, ++compared)
              if (gf[n] != count_bounded_compositions(n, b, s))
                f.add("C(" + str(n) + "," + str(b) + "," + str(s) + ") GF=" + gf[n].get_str());
          }
        }
        return "G = closed form for d<=" + str(cfg.series_d_max) + " through z^" + str(cfg.series_order) +
               "; Lambert ok through z^" + str(cfg.lambert_order) + "; " + std::to_string(compared) +
               " bounded-composition coefficients match";
      });
}

CheckRecord check_rotation_sets(const VerifyConfig& cfg) {
  return timed(
      "AC3.rotation_sets", {{"d_max", str(cfg.rotation_d_max)}, {"q_max", str(cfg.rotation_q_max)}},
      "exactly d-1 disjoint valid rotation sets per p/q, widest gap unique and containing 0; "
      "(3,2,5) contains {5/121,14/121,15/121,42/121,45/121}",
      cfg.rotation_budget_s, [&](Failures& f) {
        unsigned cases = 0;
        unsigned sets_seen = 0;
        for (unsigned d = 2; d <= cfg.rotation_d_max; ++d) {
          for (unsigned q = 2; q <= cfg.rotation_q_max; ++q) {
            for (unsigned p = 1; p < q; ++p) {
              if (std::gcd(p, q) != 1) continue;
              ++cases;
              const std::string tag = "(d=" + str(d) + ",p=" + str(p) + ",q=" + str(q) + ")";
              const auto sets = enumerate_rotation_sets(d, p, q);
              sets_seen += static_cast<unsigned>(sets.size());
              if (sets.size() != d - 1) f.add(tag + " found " + std::to_string(sets.size()) + " sets");
              std::vector<Angle> all;
              for (const auto& rs : sets) {
                if (auto bad = check_rotation_set(rs)) f.add(tag + " invalid set: " + *bad);
                try {
                  if (!widest_gap(rs).contains_zero()) f.add(tag + " widest gap misses 0");
                } catch (const Error& e) {
                  f.add(tag + " " + e.what());
                }
                all.insert(all.end(), rs.angles.begin(), rs.angles.end());
              }
              std::sort(all.begin(), all.end());
              if (std::adjacent_find(all.begin(), all.end()) != all.end()) f.add(tag + " sets overlap");
            }
          }
        }
        std::vector<Angle> two_fifths;
        for (long k : {5, 14, 15, 42, 45}) two_fifths.emplace_back(k, 121);
        const auto fig_sets = enumerate_rotation_sets(3, 2, 5);
        const bool found = std::any_of(fig_sets.begin(), fig_sets.end(), [&](const RotationSet& rs) { return rs.angles == two_fifths; });
        if (!found) f.add("(3,2,5) lacks {5,14,15,42,45}/121");
        return std::to_string(cases) + " rotation numbers, " + std::to_string(sets_seen) +
               " sets, all counts d-1, gaps contain 0; {5,14,15,42,45}/121 found";
      });
}

CheckRecord check_count_ledger(const VerifyConfig& cfg) {
  return timed(
      "AC4.count_ledger", {{"n_max", str(cfg.ledger_n_max)}, {"d_max", str(cfg.ledger_d_max)}},
      "assembled count = phi(a1)(d-1)^(r-w)d^w for every P with a1>1, and sum + 1 = d^(n-1)",
      cfg.ledger_budget_s, [&](Failures& f) {
        unsigned compositions = 0;
        for (unsigned d = 1; d <= cfg.ledger_d_max; ++d) {
          for (unsigned n = 1; n <= cfg.ledger_n_max; ++n) {
            BigInt total = 1;
            for (const auto& p : enumerate_hcompositions(n)) {
              if (p.first() == 1) continue;
              ++compositions;
              const BigInt assembled = prop32_count(p, d);
              const BigInt formula = term_value(p, d);
              if (assembled != formula) f.add("d=" + str(d) + " P=" + str(p.first()) + "... assembled " + to_string(assembled) + " formula " + to_string(formula));
              total += assembled;
            }
            if (total != ipow(static_cast<long>(d), n - 1)) f.add("d=" + str(d) + " n=" + str(n) + " total " + to_string(total));
          }
        }
        return std::to_string(compositions) + " (P,d) ledgers match; all totals equal d^(n-1)";
      });
}

CheckRecord check_gleason_census(const VerifyConfig& cfg) {
  std::string points;
  for (auto [d, n] : cfg.census_points) points += (points.empty() ? "" : " ") + str(d) + ":" + str(n);
  return timed(
      "AC5.gleason_census", {{"points", points}},
      "d^(n-1) roots, separation > 1e-8, residual < 1e-8, census = Moebius counts, h_{m-1} | h_{n-1}, "
      "roots of h_{m-1} among roots of h_{n-1}",
      cfg.census_budget_s, [&](Failures& f) {
        const auto& pts = cfg.census_points;
        std::vector<std::vector<DCenter>> centers(pts.size());
        std::vector<std::string> errors(pts.size());
        parallel_for(pts.size(), cfg.workers ? cfg.workers : worker_count(), [&](std::size_t i) {
          try {
            centers[i] = find_centers(pts[i].first, pts[i].second, cfg.solver);
          } catch (const std::exception& e) {
            errors[i] = e.what();
          }
        });

        double worst_residual = 0.0;
        double closest = std::numeric_limits<double>::infinity();
        unsigned divisions = 0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
          const auto [d, n] = pts[i];
          const std::string tag = "(d=" + str(d) + ",n=" + str(n) + ")";
          if (!errors[i].empty()) {
            f.add(tag + " " + errors[i]);
            continue;
          }
          const auto& roots = centers[i];
          if (BigInt(static_cast<unsigned long>(roots.size())) != ipow(static_cast<long>(d), n - 1))
            f.add(tag + " found " + std::to_string(roots.size()) + " roots");
          for (std::size_t a = 0; a < roots.size(); ++a) {
            const double res = orbit_return_distance(roots[a].c, d, n);
            worst_residual = std::max(worst_residual, res);
            if (!(res < 1e-8)) f.add(tag + " residual " + std::to_string(res));
            for (std::size_t b = a + 1; b < roots.size(); ++b) {
              const double dist = std::abs(roots[a].c - roots[b].c);
              closest = std::min(closest, dist);
              if (!(dist > 1e-8)) f.add(tag + " roots closer than 1e-8");
            }
          }
          const auto census = exact_period_census(roots, n);
          for (const auto& [m, expected] : moebius_period_counts(d, n)) {
            const auto it = census.find(m);
            const unsigned got = it == census.end() ? 0 : it->second;
            if (BigInt(got) != expected) f.add(tag + " exact period " + str(m) + ": " + str(got) + " vs " + to_string(expected));
          }
          for (unsigned m : divisors(n)) {
            ++divisions;
            if (!divisibility_check(d, m, n, cfg.solver.degree_cap).exact) f.add(tag + " h_" + str(m - 1) + " does not divide");
            if (m == n) continue;
            const auto small = std::find(pts.begin(), pts.end(), std::make_pair(d, m));
            if (small == pts.end()) continue;
            for (const auto& s : centers[static_cast<std::size_t>(small - pts.begin())]) {
              const bool present = std::any_of(roots.begin(), roots.end(), [&](const DCenter& r) { return std::abs(r.c - s.c) <= 1e-8; });
              if (!present) f.add(tag + " misses a root of h_" + str(m - 1));
            }
          }
        }
        std::ostringstream out;
        out << pts.size() << " census points ok; worst residual " << worst_residual << ", closest pair " << closest
            << ", " << divisions << " exact divisions";
        return out.str();
      });
}

CheckRecord check_renormalization(const VerifyConfig& cfg) {
  return timed(
      "AC6.renormalization", {{"n_max", str(cfg.renormalization_n_max)}},
      "w = r(w'+1)/r' - 1 and n' = r'n/r for every renormalizable P; blocks are minimal", 0, [&](Failures& f) {
        unsigned renormalizable = 0;
        for (unsigned n = 1; n <= cfg.renormalization_n_max; ++n) {
          for (const auto& p : enumerate_hcompositions(n)) {
            const auto split = renormalization_split(p);
            if (!split) continue;
            ++renormalizable;
            const unsigned r = p.r();
            const auto& s = *split;
            const bool omega_ok = (r * (s.w_prime + 1)) % s.r_prime == 0 && r * (s.w_prime + 1) / s.r_prime - 1 == p.omega();
            const bool n_ok = (s.r_prime * n) % r == 0 && s.r_prime * n / r == s.n_prime;
            const auto parts = p.parts();
            HComposition block(std::vector<unsigned>(parts.begin(), parts.begin() + s.r_prime));
            if (!omega_ok || !n_ok) f.add("n=" + str(n) + " bookkeeping fails for r'=" + str(s.r_prime));
            if (renormalization_split(block)) f.add("n=" + str(n) + " block not minimal");
          }
        }
        return std::to_string(renormalizable) + " renormalizable compositions satisfy the bookkeeping";
      });
}

CheckRecord check_portraits(const VerifyConfig&) {
  return timed(
      "AC7.portraits", {{"d", "2"}, {"n", "3"}},
      "{1/7,6/7},{2/7,5/7},{3/7,4/7} validates; Theta_0 = {1/7,2/7} rejected for unlinkedness", 0, [&](Failures& f) {
        const auto portrait = build_portrait(Angle(1, 7), Angle(6, 7), 2, 3);
        const std::vector<std::vector<Angle>> expected{
            {Angle(1, 7), Angle(6, 7)}, {Angle(2, 7), Angle(5, 7)}, {Angle(3, 7), Angle(4, 7)}};
        if (portrait.theta_sets != expected) f.add("valid portrait has unexpected sets");
        std::string rejection = "not rejected";
        try {
          build_portrait(Angle(1, 7), Angle(2, 7), 2, 3);
          f.add("{1/7,2/7} accepted");
        } catch (const PortraitError& e) {
          rejection = to_string(e.property());
          if (e.property() != PortraitProperty::Unlinked) f.add(std::string("wrong property: ") + rejection);
        }
        return "valid portrait accepted; sharing portrait rejected (" + rejection + ")";
      });
}

CheckRecord check_render(const VerifyConfig& cfg) {
  return timed(
      "AC8.render", {{"c", "0"}, {"d", "2"}, {"pixels", str(cfg.render_pixels)}},
      "P6 file whose interior mask is the unit disk within 1 pixel; byte-identical across runs", 0, [&](Failures& f) {
        namespace fs = std::filesystem;
        const fs::path dir = cfg.scratch_dir.empty() ? fs::temp_directory_path() : fs::path(cfg.scratch_dir);
        fs::create_directories(dir);
        const std::string stem = "dcenter-ac8-" + std::to_string(::getpid());
        const fs::path first = dir / (stem + "-a.ppm");
        const fs::path second = dir / (stem + "-b.ppm");
        Viewport vp;
        vp.width = vp.height = cfg.render_pixels;
        render_julia({0.0, 0.0}, 2, vp, first.string());
        render_julia({0.0, 0.0}, 2, vp, second.string());
        const auto slurp = [](const fs::path& p) {
          std::ifstream in(p, std::ios::binary);
          return std::string(std::istreambuf_iterator<char>(in), {});
        };
        const std::string a = slurp(first);
        const std::string b = slurp(second);
        fs::remove(first);
        fs::remove(second);
        if (a != b) f.add("runs differ");
        const std::string header = "P6\n" + str(vp.width) + " " + str(vp.height) + "\n255\n";
        if (a.compare(0, header.size(), header) != 0) f.add("bad P6 header");
        if (a.size() != header.size() + 3UL * vp.width * vp.height) {
          f.add("bad pixel payload size");
          return std::string("bad file");
        }
        const double px = vp.pixel_size();
        unsigned mismatches = 0;
        for (unsigned y = 0; y < vp.height; ++y) {
          for (unsigned x = 0; x < vp.width; ++x) {
            const std::size_t at = header.size() + 3 * (std::size_t{y} * vp.width + x);
            const bool interior = a[at] == 0 && a[at + 1] == 0 && a[at + 2] == 0;
            const double radius = std::abs(vp.pixel_point(x, y));
            if ((radius <= 1.0 - px && !interior) || (radius >= 1.0 + px && interior)) ++mismatches;
          }
        }
        if (mismatches) f.add(std::to_string(mismatches) + " pixels disagree with the unit disk");
        return std::to_string(a.size()) + "-byte P6, identical across runs, mask = unit disk within 1 pixel";
      });
}

VerifyReport verify_all(const VerifyConfig& cfg) {
  const std::vector<std::function<CheckRecord(const VerifyConfig&)>> checks{
      check_identity, check_generating_functions, check_rotation_sets, check_count_ledger,
      check_gleason_census, check_renormalization, check_portraits, check_render};
  VerifyReport report;
  report.records.resize(checks.size());
  parallel_for(checks.size(), cfg.workers ? cfg.workers : worker_count(),
               [&](std::size_t i) { report.records[i] = checks[i](cfg); });
  return report;
}

}  // namespace dcenter
