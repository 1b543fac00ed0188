// SPDX-License-Identifier: MIT
#include "subdiff/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <stdexcept>
#include <string>
#include <vector>

namespace subdiff {

namespace {

constexpr double kG2x[] = {-0.5773502691896257645091488, 0.5773502691896257645091488};

// L2 distance between a P1 coefficient vector and the truncated series
// reference, with everything t-independent cached up front: quadrature
// points, hat values, and the sine factors of every mode. Evaluating the
// error at one time level then costs n_terms Mittag-Leffler values plus
// one pass over the quadrature points.
class SeriesError {
 public:
  SeriesError(const SpatialSystem& sys, const SeriesSolution& sol, int refine)
      : sys_(&sys), sol_(&sol) {
    if (refine < 1) throw std::invalid_argument("SeriesError: refine >= 1");
    const int q_total = sys.elements * refine * 2;
    xq_.reserve(q_total);
    wq_.reserve(q_total);
    elem_.reserve(q_total);
    hat1_.reserve(q_total);
    const double h = sys.h, hs = h / refine;
    for (int e = 0; e < sys.elements; ++e) {
      const double xl = sys.node(e);
      for (int s = 0; s < refine; ++s)
        for (int q = 0; q < 2; ++q) {
          const double x = xl + s * hs + 0.5 * hs * (1.0 + kG2x[q]);
          xq_.push_back(x);
          wq_.push_back(0.5 * hs);
          elem_.push_back(e);
          hat1_.push_back((x - xl) / h);  // second hat; first is 1 - this
        }
    }
    coef_.resize(sol.n_terms);
    sines_.resize(static_cast<std::size_t>(sol.n_terms) * xq_.size());
    for (int m = 0; m < sol.n_terms; ++m) {
      const double lam = sol.lambda(m);
      coef_[m] = 8.0 / (lam * lam * lam);
      for (std::size_t q = 0; q < xq_.size(); ++q)
        sines_[m * xq_.size() + q] = std::sin(lam * xq_[q]);
    }
  }

  double at(const std::vector<double>& coeffs, double t) const {
    const std::size_t nq = xq_.size();
    std::vector<double> uref(nq, 0.0);
    for (int m = 0; m < sol_->n_terms; ++m) {
      const double c = coef_[m] * sol_->mode_factor(m, t);
      const double* row = &sines_[m * nq];
      for (std::size_t q = 0; q < nq; ++q) uref[q] += c * row[q];
    }
    const int dim = sys_->dim();
    double acc = 0.0;
    for (std::size_t q = 0; q < nq; ++q) {
      const int e = elem_[q];
      const double c0 = (e - 1 >= 0) ? coeffs[e - 1] : 0.0;
      const double c1 = (e < dim) ? coeffs[e] : 0.0;
      const double uh = c0 * (1.0 - hat1_[q]) + c1 * hat1_[q];
      const double d = uh - uref[q];
      acc += wq_[q] * d * d;
    }
    return std::sqrt(acc);
  }

 private:
  const SpatialSystem* sys_;
  const SeriesSolution* sol_;
  std::vector<double> xq_, wq_, hat1_, coef_, sines_;
  std::vector<int> elem_;
};

Problem make_problem(const StudyConfig& cfg) {
  Problem p;
  p.alpha = cfg.alpha;
  p.kappa = [k = cfg.kappa](double) { return k; };
  p.react = [r = cfg.react](double) { return r; };
  // init/init_prime keep the x(1-x) defaults matching SeriesSolution.
  return p;
}

SeriesSolution make_reference(const StudyConfig& cfg) {
  SeriesSolution sol;
  sol.alpha = cfg.alpha;
  sol.n_terms = cfg.terms;
  sol.kappa = cfg.kappa;
  sol.react = cfg.react;
  return sol;
}

// One study cell: march on the (gamma, N) time mesh with M elements and
// measure the reference error with `refine` quadrature sub-intervals.
double run_cell(StudyConfig cfg, double gamma, int N, int M, int refine) {
  const Problem p = make_problem(cfg);
  const GradedMesh mesh = build_graded_mesh(cfg.T, N, gamma);
  const SpatialSystem sys = build_system(0.0, 1.0, M, p);
  const SolutionHistory hist = run(p, mesh, sys, cfg.scheme, cfg.init);
  const SeriesSolution sol = make_reference(cfg);
  return max_error(hist, sys, sol, refine);
}

void validate_common(const StudyConfig& cfg) {
  if (cfg.terms < 1) throw std::invalid_argument("study: terms >= 1");
  if (!(cfg.T > 0.0)) throw std::invalid_argument("study: T > 0");
  if (!(cfg.kappa > 0.0)) throw std::invalid_argument("study: kappa > 0");
}

double effective_sigma(const StudyConfig& cfg) {
  return cfg.sigma < 0.0 ? cfg.alpha / 4.0 : cfg.sigma;
}

void write_output(const StudyResult& result, const std::string& path) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::binary);  // binary: keep LF endings
  if (!out) throw std::runtime_error("study: cannot open output file " + path);
  out << result.csv;
  if (!out) throw std::runtime_error("study: write failed for " + path);
}

std::string format_pct(double rel) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f%%", 100.0 * rel);
  return buf;
}

}  // namespace

double max_error(const SolutionHistory& history, const SpatialSystem& sys,
                 const SeriesSolution& sol, int refine) {
  if (history.coeffs.empty())
    throw std::invalid_argument("max_error: empty history");
  const SeriesError err(sys, sol, refine);
  double worst = 0.0;
  for (std::size_t n = 0; n < history.coeffs.size(); ++n)
    worst = std::max(worst, err.at(history.coeffs[n], history.mesh.nodes[n]));
  return worst;
}

double predicted_rate(double alpha, double gamma, double sigma) {
  if (sigma < 0.0) sigma = alpha / 4.0;
  return std::min(gamma * (sigma + alpha), 2.0);
}

double observed_rate(double e_prev, double e_cur, double x_prev,
                     double x_cur) {
  return std::log(e_prev / e_cur) / std::log(x_cur / x_prev);
}

StudyResult temporal_study(const StudyConfig& cfg) {
  validate_common(cfg);
  if (cfg.gammas.empty())
    throw std::invalid_argument("temporal_study: at least one gamma");
  if (cfg.n_list.empty())
    throw std::invalid_argument("temporal_study: n_list is empty");
  if (!std::is_sorted(cfg.n_list.begin(), cfg.n_list.end()) ||
      cfg.n_list.front() < 1)
    throw std::invalid_argument("temporal_study: n_list must increase");
  if (cfg.m_fixed < 2) throw std::invalid_argument("temporal_study: m_fixed");

  const std::size_t per = cfg.n_list.size();
  std::vector<std::future<double>> cells;
  cells.reserve(cfg.gammas.size() * (per + 1));
  for (double g : cfg.gammas) {
    for (int N : cfg.n_list)
      cells.push_back(std::async(std::launch::async, run_cell, cfg, g, N,
                                 cfg.m_fixed, 1));
    // Dominance probe: same largest-N march with h halved.
    cells.push_back(std::async(std::launch::async, run_cell, cfg, g,
                               cfg.n_list.back(), 2 * cfg.m_fixed, 1));
  }

  StudyResult result;
  std::size_t k = 0;
  for (double g : cfg.gammas) {
    std::vector<double> errs(per);
    for (std::size_t i = 0; i < per; ++i) errs[i] = cells[k++].get();
    const double probe = cells[k++].get();
    for (std::size_t i = 0; i < per; ++i) {
      RateRow row;
      row.study = "temporal";
      row.alpha = cfg.alpha;
      row.gamma = g;
      row.scheme = cfg.scheme;
      row.N = cfg.n_list[i];
      row.M = cfg.m_fixed;
      row.error = errs[i];
      if (i > 0) {
        row.rate = observed_rate(errs[i - 1], errs[i], cfg.n_list[i - 1],
                                 cfg.n_list[i]);
        row.has_rate = true;
      }
      result.rows.push_back(row);
    }
    const double shift = std::fabs(errs.back() - probe) / probe;
    if (shift > 0.05) {
      char buf[160];
      std::snprintf(buf, sizeof buf,
                    "temporal study gamma=%g: halving h at N=%d shifts the "
                    "error by %s; spatial error is not negligible, increase "
                    "m_fixed",
                    g, cfg.n_list.back(), format_pct(shift).c_str());
      result.warnings.emplace_back(buf);
    }
  }
  result.csv = to_csv(result.rows);
  result.table = to_text(result.rows, effective_sigma(cfg));
  write_output(result, cfg.output);
  return result;
}

StudyResult spatial_study(const StudyConfig& cfg) {
  validate_common(cfg);
  if (cfg.m_list.empty())
    throw std::invalid_argument("spatial_study: m_list is empty");
  if (!std::is_sorted(cfg.m_list.begin(), cfg.m_list.end()) ||
      cfg.m_list.front() < 2)
    throw std::invalid_argument("spatial_study: m_list must increase");
  if (cfg.n_fixed < 1) throw std::invalid_argument("spatial_study: n_fixed");

  const double sigma = effective_sigma(cfg);
  const double gamma =
      cfg.gammas.empty() ? 2.0 / (sigma + cfg.alpha) : cfg.gammas.front();
  const int m_finest = cfg.m_list.back();

  std::vector<std::future<double>> cells;
  for (int M : cfg.m_list) {
    const int refine = (m_finest + M - 1) / M;
    cells.push_back(std::async(std::launch::async, run_cell, cfg, gamma,
                               cfg.n_fixed, M, refine));
  }
  // Dominance probe: finest spatial mesh with N doubled.
  cells.push_back(std::async(std::launch::async, run_cell, cfg, gamma,
                             2 * cfg.n_fixed, m_finest, 1));

  StudyResult result;
  std::vector<double> errs(cfg.m_list.size());
  for (std::size_t i = 0; i < cfg.m_list.size(); ++i) errs[i] = cells[i].get();
  const double probe = cells.back().get();
  for (std::size_t i = 0; i < cfg.m_list.size(); ++i) {
    RateRow row;
    row.study = "spatial";
    row.alpha = cfg.alpha;
    row.gamma = gamma;
    row.scheme = cfg.scheme;
    row.N = cfg.n_fixed;
    row.M = cfg.m_list[i];
    row.error = errs[i];
    if (i > 0) {
      row.rate = observed_rate(errs[i - 1], errs[i], cfg.m_list[i - 1],
                               cfg.m_list[i]);
      row.has_rate = true;
    }
    result.rows.push_back(row);
  }
  const double shift = std::fabs(errs.back() - probe) / probe;
  if (shift > 0.05) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "spatial study: doubling N at M=%d shifts the error by %s; "
                  "temporal error is not negligible, increase n_fixed",
                  m_finest, format_pct(shift).c_str());
    result.warnings.emplace_back(buf);
  }
  result.csv = to_csv(result.rows);
  result.table = to_text(result.rows, sigma);
  write_output(result, cfg.output);
  return result;
}

StudyResult error_trace(double alpha, double gamma, int N, int M,
                        const StudyConfig& base) {
  StudyConfig cfg = base;
  cfg.alpha = alpha;
  validate_common(cfg);

  const Problem p = make_problem(cfg);
  const GradedMesh mesh = build_graded_mesh(cfg.T, N, gamma);
  const SpatialSystem sys = build_system(0.0, 1.0, M, p);
  const SolutionHistory hist = run(p, mesh, sys, cfg.scheme, cfg.init);
  const SeriesSolution sol = make_reference(cfg);
  const SeriesError err(sys, sol, 1);

  StudyResult result;
  for (int n = 0; n <= N; ++n) {
    RateRow row;
    row.study = "trace";
    row.alpha = alpha;
    row.gamma = gamma;
    row.scheme = cfg.scheme;
    row.N = N;
    row.M = M;
    row.t = mesh.nodes[n];
    row.error = err.at(hist.coeffs[n], mesh.nodes[n]);
    row.is_trace = true;
    result.rows.push_back(row);
  }
  result.csv = to_csv(result.rows);
  result.table = to_text(result.rows, effective_sigma(cfg));
  write_output(result, cfg.output);
  return result;
}

std::string to_csv(const std::vector<RateRow>& rows) {
  const bool traced =
      std::any_of(rows.begin(), rows.end(),
                  [](const RateRow& r) { return r.is_trace; });
  std::string out = traced ? "study,alpha,gamma,scheme,N,M,t,error,rate\n"
                           : "study,alpha,gamma,scheme,N,M,error,rate\n";
  char buf[256];
  for (const RateRow& r : rows) {
    const char* scheme = r.scheme == Scheme::L1 ? "l1" : "gcn";
    std::snprintf(buf, sizeof buf, "%s,%g,%g,%s,%d,%d,", r.study.c_str(),
                  r.alpha, r.gamma, scheme, r.N, r.M);
    out += buf;
    if (traced) {
      if (r.is_trace) {
        std::snprintf(buf, sizeof buf, "%.9e", r.t);
        out += buf;
      }
      out += ',';
    }
    std::snprintf(buf, sizeof buf, "%.6e", r.error);
    out += buf;
    out += ',';
    if (r.has_rate) {
      std::snprintf(buf, sizeof buf, "%.4f", r.rate);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

std::string to_text(const std::vector<RateRow>& rows, double sigma) {
  std::string out;
  char buf[256];
  const RateRow* prev = nullptr;
  for (const RateRow& r : rows) {
    const bool new_block = !prev || prev->study != r.study ||
                           prev->alpha != r.alpha || prev->gamma != r.gamma ||
                           prev->scheme != r.scheme;
    if (new_block) {
      if (prev) out += '\n';
      const char* scheme = r.scheme == Scheme::L1 ? "l1" : "gcn";
      if (r.is_trace) {
        std::snprintf(buf, sizeof buf,
                      "trace  alpha=%g  gamma=%g  scheme=%s  N=%d  M=%d\n"
                      "  %14s  %14s\n",
                      r.alpha, r.gamma, scheme, r.N, r.M, "t_n", "error");
      } else if (r.study == "temporal") {
        std::snprintf(buf, sizeof buf,
                      "temporal  alpha=%g  gamma=%g  scheme=%s  M=%d  "
                      "predicted rate=%.4f\n  %6s  %14s  %8s\n",
                      r.alpha, r.gamma, scheme, r.M,
                      predicted_rate(r.alpha, r.gamma, sigma), "N", "error",
                      "rate");
      } else {
        std::snprintf(buf, sizeof buf,
                      "spatial  alpha=%g  gamma=%g  scheme=%s  N=%d\n"
                      "  %6s  %14s  %8s\n",
                      r.alpha, r.gamma, scheme, r.N, "M", "error", "rate");
      }
      out += buf;
    }
    if (r.is_trace) {
      std::snprintf(buf, sizeof buf, "  %14.6e  %14.6e\n", r.t, r.error);
    } else {
      const int x = r.study == "temporal" ? r.N : r.M;
      if (r.has_rate)
        std::snprintf(buf, sizeof buf, "  %6d  %14.6e  %8.4f\n", x, r.error,
                      r.rate);
      else
        std::snprintf(buf, sizeof buf, "  %6d  %14.6e  %8s\n", x, r.error,
                      "--");
    }
    out += buf;
    prev = &r;
  }
  return out;
}

}  // namespace subdiff
