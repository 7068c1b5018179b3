// Command-line front end. Talks to the library only through dcenter.h.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dcenter/dcenter.h"

namespace {

constexpr int kPass = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct CString {
  char* p = nullptr;
  ~CString() { dc_string_free(p); }
  char** out() { return &p; }
  std::string str() const { return p ? p : ""; }
};

template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  ~Handle() { Free(p); }
};

// Failure of a library call: configuration problems are usage errors,
// everything else counts as a failed check.
struct CallFailed {
  int code;
};

void check(dc_status st, const char* what) {
  if (st == DC_OK) return;
  std::cerr << "error: " << what << ": " << dc_status_name(st) << ": " << dc_last_error() << "\n";
  const bool usage = st == DC_ERR_DOMAIN || st == DC_ERR_PRECONDITION || st == DC_ERR_SIZE ||
                     st == DC_ERR_EMPTY_INPUT || st == DC_ERR_INVALID_ARGUMENT || st == DC_ERR_SPECIAL_CASE || st == DC_ERR_IO;
  throw CallFailed{usage ? kUsage : kCheckFailed};
}

// "re,im" or a bare real number.
bool parse_complex(const std::string& text, double& re, double& im) {
  std::istringstream in(text);
  char comma = 0;
  im = 0.0;
  if (!(in >> re)) return false;
  if (in >> comma) {
    if (comma != ',' || !(in >> im)) return false;
  }
  return in.eof() || (in >> std::ws).eof();
}

std::string parts_str(const dc_hcomp_list* list, std::size_t i) {
  std::size_t len = 0;
  check(dc_hcomp_parts(list, i, nullptr, 0, &len), "hcomp parts");
  std::vector<unsigned> parts(len);
  check(dc_hcomp_parts(list, i, parts.data(), len, &len), "hcomp parts");
  std::string s = "[";
  for (std::size_t k = 0; k < len; ++k) s += (k ? "," : "") + std::to_string(parts[k]);
  return s + "]";
}

int cmd_identity(unsigned n_max, unsigned d_max) {
  bool ok = true;
  std::cout << std::setw(4) << "n" << std::setw(4) << "d" << "  lhs = rhs\n";
  for (unsigned n = 1; n <= n_max; ++n) {
    for (unsigned d = 1; d <= d_max; ++d) {
      CString lhs, rhs;
      int equal = 0;
      check(dc_identity_check(n, d, lhs.out(), rhs.out(), &equal), "identity");
      ok = ok && equal;
      std::cout << std::setw(4) << n << std::setw(4) << d << "  " << lhs.str() << (equal ? " = " : " != ")
                << rhs.str() << "\n";
    }
  }
  return ok ? kPass : kCheckFailed;
}

int cmd_series(unsigned d, unsigned order) {
  Handle<dc_series, dc_series_free> g, closed;
  check(dc_series_create(DC_SERIES_G, d, 0, order, &g.p), "g series");
  check(dc_series_create(DC_SERIES_CLOSED_FORM, d, 0, order, &closed.p), "closed form");
  bool ok = true;
  std::cout << std::setw(4) << "k" << "  G(z) (triple sum)  closed form\n";
  for (unsigned k = 0; k <= order; ++k) {
    CString a, b;
    check(dc_series_coeff(g.p, k, a.out()), "coefficient");
    check(dc_series_coeff(closed.p, k, b.out()), "coefficient");
    const bool same = a.str() == b.str();
    ok = ok && same;
    std::cout << std::setw(4) << k << "  " << std::setw(18) << a.str() << "  " << b.str() << (same ? "" : "  MISMATCH")
              << "\n";
  }
  return ok ? kPass : kCheckFailed;
}

int cmd_rotation_sets(unsigned d, unsigned p, unsigned q) {
  Handle<dc_rotation_sets, dc_rotation_sets_free> sets;
  check(dc_rotation_sets_enumerate(d, p, q, &sets.p), "rotation sets");
  const std::size_t count = dc_rotation_sets_size(sets.p);
  bool ok = count + 1 == d;
  for (std::size_t i = 0; i < count; ++i) {
    CString angles, lo, hi;
    int zero = 0;
    check(dc_rotation_sets_angles(sets.p, i, angles.out()), "angles");
    check(dc_rotation_sets_widest_gap(sets.p, i, lo.out(), hi.out(), &zero), "widest gap");
    ok = ok && zero;
    std::cout << "{" << angles.str() << "}  widest gap (" << lo.str() << ", " << hi.str() << ")"
              << (zero ? " contains 0" : " misses 0") << "\n";
  }
  std::cout << count << " rotation set(s), expected " << (d > 0 ? d - 1 : 0) << "\n";
  return ok ? kPass : kCheckFailed;
}

int cmd_counts(unsigned n, unsigned d) {
  Handle<dc_hcomp_list, dc_hcomp_free> list;
  check(dc_hcomp_enumerate(n, &list.p), "enumerate");
  bool ok = true;
  long double total = 1;  // the center c = 0
  std::cout << std::left << std::setw(22) << "P" << std::right << std::setw(6) << "omega" << std::setw(10) << "sets"
            << std::setw(12) << "itins" << std::setw(8) << "pairs" << std::setw(14) << "count" << std::setw(14)
            << "formula" << "\n";
  for (std::size_t i = 0; i < dc_hcomp_size(list.p); ++i) {
    unsigned omega = 0;
    CString formula;
    check(dc_hcomp_omega(list.p, i, &omega), "omega");
    check(dc_hcomp_term_value(list.p, i, d, formula.out()), "term value");
    std::cout << std::left << std::setw(22) << parts_str(list.p, i) << std::right << std::setw(6) << omega;
    CString sets, its, pairs, count;
    const dc_status st = dc_hcomp_prop32(list.p, i, d, sets.out(), its.out(), pairs.out(), count.out());
    if (st == DC_ERR_SPECIAL_CASE) {
      // a_1 = 1: the all-ones composition, accounted for by c = 0
      std::cout << std::setw(10) << "-" << std::setw(12) << "-" << std::setw(8) << "-" << std::setw(14) << "c=0"
                << std::setw(14) << formula.str() << "\n";
      continue;
    }
    check(st, "ledger");
    const bool same = count.str() == formula.str();
    ok = ok && same;
    total += std::stold(count.str());
    std::cout << std::setw(10) << sets.str() << std::setw(12) << its.str() << std::setw(8) << pairs.str()
              << std::setw(14) << count.str() << std::setw(14) << formula.str() << (same ? "" : "  MISMATCH") << "\n";
  }
  const long double expected = std::pow(static_cast<long double>(d), static_cast<long double>(n - 1));
  ok = ok && total == expected;
  std::cout << "sum + 1 = " << std::fixed << std::setprecision(0) << total << ", d^(n-1) = " << expected << "\n";
  return ok ? kPass : kCheckFailed;
}

int cmd_centers(unsigned d, unsigned n, const std::string& dump) {
  Handle<dc_centers, dc_centers_free> centers;
  check(dc_centers_find(d, n, nullptr, &centers.p), "centers");
  const std::size_t count = dc_centers_size(centers.p);
  std::cout << std::setprecision(17);
  for (std::size_t i = 0; i < count; ++i) {
    dc_center c{};
    check(dc_centers_get(centers.p, i, &c), "center");
    std::cout << c.re << (c.im < 0 ? " - " : " + ") << std::fabs(c.im) << "i  period " << c.exact_period
              << "  residual " << std::setprecision(3) << c.residual << std::setprecision(17) << "\n";
  }
  std::cout << count << " center(s)\n";
  if (!dump.empty()) check(dc_centers_write_csv(centers.p, dump.c_str()), "csv dump");
  const double expected = std::pow(static_cast<double>(d), static_cast<double>(n - 1));
  return static_cast<double>(count) == expected ? kPass : kCheckFailed;
}

int cmd_verify_all(const std::string& json_path) {
  Handle<dc_report, dc_report_free> report;
  check(dc_verify_all(nullptr, &report.p), "verify-all");
  CString text;
  check(dc_report_text(report.p, text.out()), "report text");
  std::cout << text.str();
  if (!json_path.empty()) {
    CString json;
    check(dc_report_json(report.p, json.out()), "report json");
    std::ofstream out(json_path);
    out << json.str() << "\n";
    if (!out) {
      std::cerr << "error: cannot write " << json_path << "\n";
      return kUsage;
    }
  }
  return dc_report_passed(report.p) ? kPass : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counting d-centers four ways: partitions, generating functions, circle combinatorics, roots."};
  app.require_subcommand(1);
  app.set_version_flag("--version", dc_version());

  unsigned n_max = 0, d_max = 0;
  auto* identity = app.add_subcommand("identity", "check the partition identity over H(n) for all n, d in range");
  identity->add_option("--n-max", n_max)->required()->check(CLI::PositiveNumber);
  identity->add_option("--d-max", d_max)->required()->check(CLI::PositiveNumber);

  unsigned d = 2, order = 20;
  auto* series = app.add_subcommand("series", "compare the triple-sum G(z) with its closed form");
  series->add_option("--d", d)->required();
  series->add_option("--order", order, "truncation order")->capture_default_str();

  unsigned p = 1, q = 2;
  auto* rotation = app.add_subcommand("rotation-sets", "list the rotation sets of rotation number p/q");
  rotation->add_option("--d", d)->required();
  rotation->add_option("--p", p)->required();
  rotation->add_option("--q", q)->required();

  unsigned n = 1;
  auto* counts = app.add_subcommand("counts", "per-composition ledger of rotation sets, itineraries and angle pairs");
  counts->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  counts->add_option("--d", d)->required();

  std::string dump;
  auto* centers = app.add_subcommand("centers", "roots of the Gleason polynomial with their exact periods");
  centers->add_option("--d", d)->required();
  centers->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  centers->add_option("--dump", dump, "write the roots as CSV to this path");

  std::string c_text, out_path, center_text = "0,0";
  dc_viewport vp = dc_viewport_default();
  unsigned orbit = 0;
  auto* render = app.add_subcommand("render", "escape-time picture of the filled Julia set as binary PPM");
  render->add_option("--c", c_text, "parameter as re,im")->required();
  render->add_option("--d", d)->required();
  render->add_option("--out", out_path)->required();
  render->add_option("--center", center_text, "viewport center as re,im")->capture_default_str();
  render->add_option("--half-width", vp.half_width)->capture_default_str();
  render->add_option("--width", vp.width)->capture_default_str();
  render->add_option("--height", vp.height)->capture_default_str();
  render->add_option("--max-iter", vp.max_iter)->capture_default_str();
  render->add_option("--escape-radius", vp.escape_radius)->capture_default_str();
  render->add_option("--orbit", orbit, "mark the first N points of the critical orbit");

  std::string json_path;
  auto* verify = app.add_subcommand("verify-all", "run the full acceptance suite");
  verify->add_option("--json", json_path, "also write the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    if (!e.get_name().empty()) std::cerr << app.help();
    return kUsage;
  }

  try {
    if (*identity) return cmd_identity(n_max, d_max);
    if (*series) return cmd_series(d, order);
    if (*rotation) return cmd_rotation_sets(d, p, q);
    if (*counts) return cmd_counts(n, d);
    if (*centers) return cmd_centers(d, n, dump);
    if (*render) {
      double re = 0, im = 0;
      if (!parse_complex(c_text, re, im) || !parse_complex(center_text, vp.center_re, vp.center_im)) {
        std::cerr << "error: complex values are written re,im\n" << render->help();
        return kUsage;
      }
      check(dc_render_julia(re, im, d, &vp, orbit, out_path.c_str()), "render");
      std::cout << "wrote " << out_path << " (" << vp.width << "x" << vp.height << ")\n";
      return kPass;
    }
    if (*verify) return cmd_verify_all(json_path);
  } catch (const CallFailed& f) {
    return f.code;
  }
  return kUsage;
}
