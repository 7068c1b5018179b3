#include "dcenter/dcenter.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <string>
#include <vector>

#include "dcenter/circle.hpp"
#include "dcenter/dynamics.hpp"
#include "dcenter/error.hpp"
#include "dcenter/hcomp.hpp"
#include "dcenter/render.hpp"
#include "dcenter/report.hpp"
#include "dcenter/series.hpp"
#include "dcenter/verify.hpp"

struct dc_hcomp_list {
  std::vector<dcenter::HComposition> items;
};
struct dc_series {
  dcenter::FormalPowerSeries series{0};
};
struct dc_rotation_sets {
  std::vector<dcenter::RotationSet> items;
};
struct dc_centers {
  unsigned d = 0;
  unsigned n = 0;
  std::vector<dcenter::DCenter> items;
};
struct dc_report {
  dcenter::VerifyReport report;
};

namespace {

thread_local std::string last_error;

dc_status status_of(dcenter::ErrorKind kind) {
  using dcenter::ErrorKind;
  switch (kind) {
    case ErrorKind::EmptyInput: return DC_ERR_EMPTY_INPUT;
    case ErrorKind::Domain: return DC_ERR_DOMAIN;
    case ErrorKind::Precondition: return DC_ERR_PRECONDITION;
    case ErrorKind::BoundedComputation: return DC_ERR_BOUNDED_COMPUTATION;
    case ErrorKind::Ambiguity: return DC_ERR_AMBIGUITY;
    case ErrorKind::Boundary: return DC_ERR_BOUNDARY;
    case ErrorKind::SpecialCase: return DC_ERR_SPECIAL_CASE;
    case ErrorKind::Size: return DC_ERR_SIZE;
    case ErrorKind::Solver: return DC_ERR_SOLVER;
    case ErrorKind::Census: return DC_ERR_CENSUS;
    case ErrorKind::Classification: return DC_ERR_CLASSIFICATION;
    case ErrorKind::PortraitInvalid: return DC_ERR_PORTRAIT_INVALID;
    case ErrorKind::Io: return DC_ERR_IO;
  }
  return DC_ERR_INTERNAL;
}

dc_status fail(dc_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs body, translating exceptions into status codes.
template <class F>
dc_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return DC_OK;
  } catch (const dcenter::Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(DC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(DC_ERR_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put(char** slot, const std::string& s) {
  if (slot) *slot = dup(s);
}

#define DC_REQUIRE(cond, msg) \
  do {                        \
    if (!(cond)) return fail(DC_ERR_INVALID_ARGUMENT, msg); \
  } while (0)

}  // namespace

extern "C" {

const char* dc_version(void) { return "0.1.0"; }

const char* dc_status_name(dc_status status) {
  switch (status) {
    case DC_OK: return "ok";
    case DC_ERR_EMPTY_INPUT: return "empty input";
    case DC_ERR_DOMAIN: return "domain";
    case DC_ERR_PRECONDITION: return "precondition";
    case DC_ERR_BOUNDED_COMPUTATION: return "bounded computation";
    case DC_ERR_AMBIGUITY: return "ambiguity";
    case DC_ERR_BOUNDARY: return "boundary";
    case DC_ERR_SPECIAL_CASE: return "special case";
    case DC_ERR_SIZE: return "size";
    case DC_ERR_SOLVER: return "solver";
    case DC_ERR_CENSUS: return "census";
    case DC_ERR_CLASSIFICATION: return "classification";
    case DC_ERR_PORTRAIT_INVALID: return "portrait invalid";
    case DC_ERR_IO: return "io";
    case DC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case DC_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* dc_last_error(void) { return last_error.c_str(); }

void dc_string_free(char* s) { std::free(s); }

dc_status dc_identity_check(unsigned n, unsigned d, char** lhs, char** rhs, int* equal) {
  return guarded([&] {
    const auto ic = dcenter::identity_check(n, d);
    put(lhs, ic.lhs.get_str());
    put(rhs, ic.rhs.get_str());
    if (equal) *equal = ic.equal ? 1 : 0;
  });
}

dc_status dc_hcomp_enumerate(unsigned n, dc_hcomp_list** out) {
  DC_REQUIRE(out, "out is NULL");
  *out = nullptr;
  return guarded([&] { *out = new dc_hcomp_list{dcenter::enumerate_hcompositions(n)}; });
}

size_t dc_hcomp_size(const dc_hcomp_list* list) { return list ? list->items.size() : 0; }

dc_status dc_hcomp_parts(const dc_hcomp_list* list, size_t i, unsigned* parts, size_t cap, size_t* len) {
  DC_REQUIRE(list && i < list->items.size(), "index out of range");
  const auto p = list->items[i].parts();
  if (len) *len = p.size();
  if (parts) std::memcpy(parts, p.data(), std::min(cap, p.size()) * sizeof(unsigned));
  return DC_OK;
}

dc_status dc_hcomp_omega(const dc_hcomp_list* list, size_t i, unsigned* omega) {
  DC_REQUIRE(list && i < list->items.size(), "index out of range");
  DC_REQUIRE(omega, "omega is NULL");
  *omega = list->items[i].omega();
  return DC_OK;
}

dc_status dc_hcomp_term_value(const dc_hcomp_list* list, size_t i, unsigned d, char** value) {
  DC_REQUIRE(list && i < list->items.size(), "index out of range");
  return guarded([&] { put(value, dcenter::term_value(list->items[i], d).get_str()); });
}

dc_status dc_hcomp_prop32(const dc_hcomp_list* list, size_t i, unsigned d, char** rotation_sets, char** itineraries,
                          char** angle_pairs, char** total) {
  DC_REQUIRE(list && i < list->items.size(), "index out of range");
  return guarded([&] {
    const auto ledger = dcenter::prop32_ledger(list->items[i], d);
    put(rotation_sets, ledger.rotation_sets.get_str());
    put(itineraries, ledger.itineraries.get_str());
    put(angle_pairs, ledger.angle_pairs.get_str());
    put(total, ledger.total.get_str());
  });
}

void dc_hcomp_free(dc_hcomp_list* list) { delete list; }

dc_status dc_series_create(dc_series_kind kind, unsigned param, unsigned param2, unsigned order, dc_series** out) {
  DC_REQUIRE(out, "out is NULL");
  *out = nullptr;
  return guarded([&] {
    auto* s = new dc_series;
    try {
      switch (kind) {
        case DC_SERIES_G: s->series = dcenter::g_series(param, order); break;
        case DC_SERIES_CLOSED_FORM: s->series = dcenter::closed_form_series(param, order); break;
        case DC_SERIES_LAMBERT: s->series = dcenter::lambert_series(order); break;
        case DC_SERIES_BOUNDED: s->series = dcenter::bounded_composition_gf(param, param2, order); break;
        default: throw dcenter::Error(dcenter::ErrorKind::Domain, "unknown series kind");
      }
    } catch (...) {
      delete s;
      throw;
    }
    *out = s;
  });
}

unsigned dc_series_order(const dc_series* s) { return s ? s->series.order() : 0; }

dc_status dc_series_coeff(const dc_series* s, unsigned k, char** value) {
  DC_REQUIRE(s && k <= s->series.order(), "coefficient index out of range");
  return guarded([&] { put(value, s->series[k].get_str()); });
}

void dc_series_free(dc_series* s) { delete s; }

dc_status dc_rotation_sets_enumerate(unsigned d, unsigned p, unsigned q, dc_rotation_sets** out) {
  DC_REQUIRE(out, "out is NULL");
  *out = nullptr;
  return guarded([&] { *out = new dc_rotation_sets{dcenter::enumerate_rotation_sets(d, p, q)}; });
}

size_t dc_rotation_sets_size(const dc_rotation_sets* sets) { return sets ? sets->items.size() : 0; }

dc_status dc_rotation_sets_angles(const dc_rotation_sets* sets, size_t i, char** angles) {
  DC_REQUIRE(sets && i < sets->items.size(), "index out of range");
  return guarded([&] {
    std::string text;
    for (const auto& a : sets->items[i].angles) text += (text.empty() ? "" : " ") + a.str();
    put(angles, text);
  });
}

dc_status dc_rotation_sets_widest_gap(const dc_rotation_sets* sets, size_t i, char** tau_minus, char** tau_plus,
                                      int* contains_zero) {
  DC_REQUIRE(sets && i < sets->items.size(), "index out of range");
  return guarded([&] {
    const auto gap = dcenter::widest_gap(sets->items[i]);
    put(tau_minus, gap.tau_minus.str());
    put(tau_plus, gap.tau_plus.str());
    if (contains_zero) *contains_zero = gap.contains_zero() ? 1 : 0;
  });
}

void dc_rotation_sets_free(dc_rotation_sets* sets) { delete sets; }

dc_solver_config dc_solver_config_default(void) {
  const dcenter::SolverConfig c;
  return {c.degree_cap, c.residual_tolerance, c.separation, c.period_band,
          c.gap_factor, c.max_iterations,     c.newton_iterations, c.max_restarts};
}

dc_status dc_centers_find(unsigned d, unsigned n, const dc_solver_config* cfg, dc_centers** out) {
  DC_REQUIRE(out, "out is NULL");
  *out = nullptr;
  dcenter::SolverConfig solver;
  if (cfg) {
    solver.degree_cap = cfg->degree_cap;
    solver.residual_tolerance = cfg->residual_tolerance;
    solver.separation = cfg->separation;
    solver.period_band = cfg->period_band;
    solver.gap_factor = cfg->gap_factor;
    solver.max_iterations = cfg->max_iterations;
    solver.newton_iterations = cfg->newton_iterations;
    solver.max_restarts = cfg->max_restarts;
  }
  return guarded([&] { *out = new dc_centers{d, n, dcenter::find_centers(d, n, solver)}; });
}

size_t dc_centers_size(const dc_centers* centers) { return centers ? centers->items.size() : 0; }

dc_status dc_centers_get(const dc_centers* centers, size_t i, dc_center* out) {
  DC_REQUIRE(centers && i < centers->items.size(), "index out of range");
  DC_REQUIRE(out, "out is NULL");
  const auto& c = centers->items[i];
  *out = {c.c.real(), c.c.imag(), c.exact_period, c.residual};
  return DC_OK;
}

dc_status dc_centers_write_csv(const dc_centers* centers, const char* path) {
  DC_REQUIRE(centers && path, "NULL argument");
  return guarded([&] {
    std::ofstream out(path);
    if (!out) throw dcenter::Error(dcenter::ErrorKind::Io, std::string("cannot open ") + path);
    dcenter::write_centers_csv(out, centers->items, centers->d, centers->n);
    if (!out) throw dcenter::Error(dcenter::ErrorKind::Io, std::string("cannot write ") + path);
  });
}

void dc_centers_free(dc_centers* centers) { delete centers; }

dc_viewport dc_viewport_default(void) {
  const dcenter::Viewport v;
  return {v.center.real(), v.center.imag(), v.half_width, v.width, v.height, v.max_iter, v.escape_radius};
}

dc_status dc_render_julia(double c_re, double c_im, unsigned d, const dc_viewport* vp, unsigned overlay_orbit,
                          const char* path) {
  DC_REQUIRE(path, "path is NULL");
  dcenter::Viewport view;
  if (vp) {
    view.center = {vp->center_re, vp->center_im};
    view.half_width = vp->half_width;
    view.width = vp->width;
    view.height = vp->height;
    view.max_iter = vp->max_iter;
    view.escape_radius = vp->escape_radius;
  }
  return guarded([&] { dcenter::render_julia({c_re, c_im}, d, view, path, {overlay_orbit}); });
}

dc_status dc_verify_all(const char* scratch_dir, dc_report** out) {
  DC_REQUIRE(out, "out is NULL");
  *out = nullptr;
  return guarded([&] {
    dcenter::VerifyConfig cfg;
    if (scratch_dir) cfg.scratch_dir = scratch_dir;
    *out = new dc_report{dcenter::verify_all(cfg)};
  });
}

int dc_report_passed(const dc_report* report) { return report && report->report.passed() ? 1 : 0; }

dc_status dc_report_json(const dc_report* report, char** json) {
  DC_REQUIRE(report, "report is NULL");
  return guarded([&] { put(json, dcenter::report_to_json(report->report)); });
}

dc_status dc_report_text(const dc_report* report, char** text) {
  DC_REQUIRE(report, "report is NULL");
  return guarded([&] { put(text, dcenter::report_to_text(report->report)); });
}

void dc_report_free(dc_report* report) { delete report; }

}  // extern "C"
