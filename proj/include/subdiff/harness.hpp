// SPDX-License-Identifier: MIT
#pragma once

#include <string>
#include <vector>

#include "subdiff/mittag_leffler.hpp"
#include "subdiff/solver.hpp"

namespace subdiff {

/// Parameters of a convergence study. Defaults reproduce the built-in
/// test problem (kappa = react = 1, u0 = x(1-x), f = 0) on (0,1) with
/// T = 1.
struct StudyConfig {
  double alpha = 0.5;
  std::vector<double> gammas{2.0};
  std::vector<int> n_list{20, 40, 80, 160, 320};  ///< time subintervals
  std::vector<int> m_list{10, 20, 40, 80, 160};   ///< space elements
  int m_fixed = 1200;  ///< spatial resolution during temporal studies
  int n_fixed = 640;   ///< temporal resolution during spatial studies
  double T = 1.0;
  Scheme scheme = Scheme::L1;
  /// Regularity exponent in the predicted temporal rate
  /// min{gamma (sigma + alpha), 2}; negative means the default alpha/4.
  double sigma = -1.0;
  int terms = 60;  ///< series truncation of the reference solution
  double kappa = 1.0;
  double react = 1.0;
  /// U^0 projection. The L2 projection is the default here because the
  /// reference error tables this harness reproduces were generated with
  /// it; the solver library itself defaults to Ritz.
  InitialData init = InitialData::L2;
  std::string output;   ///< CSV destination; empty = stdout only
  bool strict = false;  ///< escalate dominance warnings to failures
};

/// One row of a rate table.
struct RateRow {
  std::string study;  ///< "temporal" | "spatial" | "trace"
  double alpha = 0.0;
  double gamma = 0.0;
  Scheme scheme = Scheme::L1;
  int N = 0;
  int M = 0;
  double t = 0.0;      ///< trace rows only: the time level
  double error = 0.0;
  double rate = 0.0;
  bool has_rate = false;
  bool is_trace = false;
};

struct StudyResult {
  std::vector<RateRow> rows;
  std::vector<std::string> warnings;
  std::string csv;    ///< deterministic, byte-identical across runs
  std::string table;  ///< aligned text mirror with predicted rates
};

/// Largest L2 error along a march, max over n = 0..N of
/// ||U^n - u(t_n)|| against the truncated series reference. The initial
/// level is included: in space-limited regimes the projection error of
/// the initial data is the maximum, and the reference tables count it.
double max_error(const SolutionHistory& history, const SpatialSystem& sys,
                 const SeriesSolution& sol, int refine = 1);

/// min{gamma * (sigma + alpha), 2}
double predicted_rate(double alpha, double gamma, double sigma);

/// Observed convergence rate of the pair (x_prev, e_prev) -> (x_cur, e_cur):
/// log(e_prev / e_cur) / log(x_cur / x_prev). Equals log2(e_prev / e_cur)
/// on doubling sequences.
double observed_rate(double e_prev, double e_cur, double x_prev, double x_cur);

/// Errors and observed temporal rates over cfg.n_list at fixed
/// cfg.m_fixed, one block per gamma. Emits a dominance warning for a
/// gamma whenever halving h at the largest N moves the error by more
/// than 5% (the temporal error was not dominant).
StudyResult temporal_study(const StudyConfig& cfg);

/// Errors and observed spatial rates over cfg.m_list at fixed
/// cfg.n_fixed, with gamma = 2/(sigma+alpha) unless cfg.gammas is
/// nonempty. The error of each run is measured with the quadrature
/// refined to the finest mesh in cfg.m_list. Dominance warning when
/// doubling N at the largest M moves the error by more than 5%.
StudyResult spatial_study(const StudyConfig& cfg);

/// Per-step error series (t_n, ||U^n - u(t_n)||), n = 0..N, for
/// log-scale plotting; the maximum over the trace equals max_error.
StudyResult error_trace(double alpha, double gamma, int N, int M,
                        const StudyConfig& base = StudyConfig{});

/// Serialize rows to the canonical CSV (LF line endings, errors %.6e,
/// rates %.4f, empty rate on first rows; trace rows carry t instead of
/// rate).
std::string to_csv(const std::vector<RateRow>& rows);

/// Aligned text table for terminals.
std::string to_text(const std::vector<RateRow>& rows, double sigma);

}  // namespace subdiff
