#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dcenter/dynamics.hpp"
#include "dcenter/report.hpp"

namespace dcenter {

/// (d, n) pairs of the Gleason census: {2}x{1..9}, {3}x{1..6}, {4}x{1..5}.
std::vector<std::pair<unsigned, unsigned>> default_census_points();

/// Sweep bounds and budgets of the acceptance suite. Defaults are the
/// acceptance values.
struct VerifyConfig {
  unsigned identity_n_max = 18;
  unsigned identity_d_max = 6;
  double identity_budget_s = 60;

  unsigned series_d_max = 5;
  unsigned series_order = 30;
  unsigned lambert_order = 200;
  unsigned bounded_bs_max = 8;
  unsigned bounded_order = 40;
  double series_budget_s = 10;

  unsigned rotation_d_max = 5;
  unsigned rotation_q_max = 7;
  double rotation_budget_s = 60;

  unsigned ledger_n_max = 8;
  unsigned ledger_d_max = 4;
  double ledger_budget_s = 30;

  std::vector<std::pair<unsigned, unsigned>> census_points = default_census_points();
  SolverConfig solver;
  double census_budget_s = 180;

  unsigned renormalization_n_max = 12;

  unsigned render_pixels = 256;
  std::string scratch_dir;  ///< where render files go; empty selects the system temp directory

  unsigned workers = 0;  ///< 0 selects worker_count()
};

CheckRecord check_identity(const VerifyConfig& cfg);
CheckRecord check_generating_functions(const VerifyConfig& cfg);
CheckRecord check_rotation_sets(const VerifyConfig& cfg);
CheckRecord check_count_ledger(const VerifyConfig& cfg);
CheckRecord check_gleason_census(const VerifyConfig& cfg);
CheckRecord check_renormalization(const VerifyConfig& cfg);
CheckRecord check_portraits(const VerifyConfig& cfg);
CheckRecord check_render(const VerifyConfig& cfg);

/// Runs the eight acceptance checks concurrently; records come back in
/// criterion order regardless of completion order.
VerifyReport verify_all(const VerifyConfig& cfg = {});

}  // namespace dcenter
