// SPDX-License-Identifier: MIT
//
// Command-line driver for the graded-mesh subdiffusion solver: convergence
// studies, error traces, and self-verification of the convolution weights
// and mesh grading.

#include <cmath>
#include <cstdio>
#include <exception>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "subdiff/harness.hpp"

namespace {

using namespace subdiff;

struct CommonOpts {
  double alpha = 0.5;
  std::vector<double> gammas;
  std::vector<int> nt;
  std::vector<int> mx;
  std::string scheme = "l1";
  int terms = 60;
  std::string out;
  bool strict = false;
};

void add_common(CLI::App& cmd, CommonOpts& o) {
  cmd.add_option("--alpha", o.alpha, "Fractional order in (0, 1]");
  cmd.add_option("--gamma", o.gammas, "Mesh grading exponent (repeatable)")
      ->delimiter(',');
  cmd.add_option("--nt", o.nt, "Time subinterval count (repeatable)")
      ->delimiter(',');
  cmd.add_option("--mx", o.mx, "Space element count (repeatable)")
      ->delimiter(',');
  cmd.add_option("--scheme", o.scheme, "Time stepping scheme")
      ->check(CLI::IsMember({"l1", "gcn"}));
  cmd.add_option("--terms", o.terms, "Series truncation of the reference");
  cmd.add_option("--out", o.out, "CSV output path");
  cmd.add_flag("--strict", o.strict,
               "Exit nonzero on any dominance warning");
}

StudyConfig to_config(const CommonOpts& o) {
  StudyConfig cfg;
  cfg.alpha = o.alpha;
  if (!o.gammas.empty()) cfg.gammas = o.gammas;
  if (!o.nt.empty()) cfg.n_list = o.nt;
  if (!o.mx.empty()) cfg.m_list = o.mx;
  cfg.scheme = o.scheme == "gcn" ? Scheme::GCN : Scheme::L1;
  cfg.terms = o.terms;
  cfg.output = o.out;
  cfg.strict = o.strict;
  return cfg;
}

int report(const StudyResult& result, bool strict) {
  std::fputs(result.table.c_str(), stdout);
  for (const std::string& w : result.warnings)
    std::fprintf(stderr, "warning: %s\n", w.c_str());
  return (strict && !result.warnings.empty()) ? 2 : 0;
}

int run_temporal(const CommonOpts& o) {
  StudyConfig cfg = to_config(o);
  if (!o.mx.empty()) cfg.m_fixed = o.mx.back();
  return report(temporal_study(cfg), o.strict);
}

int run_spatial(const CommonOpts& o) {
  StudyConfig cfg = to_config(o);
  if (!o.nt.empty()) cfg.n_fixed = o.nt.front();
  if (o.gammas.empty()) cfg.gammas.clear();  // derive 2/(sigma+alpha)
  return report(spatial_study(cfg), o.strict);
}

int run_trace(const CommonOpts& o) {
  StudyConfig cfg = to_config(o);
  const double gamma = o.gammas.empty() ? 2.0 : o.gammas.front();
  const int N = o.nt.empty() ? 160 : o.nt.front();
  const int M = o.mx.empty() ? 1200 : o.mx.front();
  return report(error_trace(o.alpha, gamma, N, M, cfg), o.strict);
}

// Closed-form weights vs quadrature plus the telescoped row sum, over
// randomized meshes. Mirrors the library's own test oracle so a shipped
// binary can re-verify itself.
int run_verify_weights(int cases) {
  std::mt19937 rng(20240817u);
  std::uniform_real_distribution<double> pick_gamma(1.0, 4.0);
  std::uniform_real_distribution<double> pick_alpha(0.05, 1.0);
  std::uniform_int_distribution<int> pick_n(1, 64);
  double worst_quad = 0.0, worst_tel = 0.0;
  for (int c = 0; c < cases; ++c) {
    const double gamma = pick_gamma(rng);
    const double alpha = pick_alpha(rng);
    const GradedMesh mesh = build_graded_mesh(1.0, pick_n(rng), gamma);
    std::uniform_int_distribution<int> pick_idx(1, mesh.N);
    const int n = pick_idx(rng);
    const int j = std::uniform_int_distribution<int>(1, n)(rng);
    const auto [ow, sw] = weight_oracle(mesh, alpha, n, j);
    worst_quad = std::max(
        worst_quad, std::fabs(ow - primary_weight(mesh, alpha, n, j)));
    worst_quad = std::max(
        worst_quad, std::fabs(sw - secondary_weight(mesh, alpha, n, j)));
    double sum = 0.0;
    for (int k = 1; k <= n; ++k) sum += primary_weight(mesh, alpha, n, k);
    const double exact = primary_row_sum(mesh.nodes[n], alpha);
    worst_tel = std::max(worst_tel, std::fabs(sum - exact) / exact);
  }
  std::printf("quadrature oracle: max |closed form - quadrature| = %.3e "
              "(tolerance 1e-11)\n", worst_quad);
  std::printf("telescoped row sums: max relative defect = %.3e "
              "(tolerance 1e-12)\n", worst_tel);
  const bool ok = worst_quad <= 1e-11 && worst_tel <= 1e-12;
  std::printf("%s\n", ok ? "PASS" : "FAIL");
  return ok ? 0 : 1;
}

int run_verify_mesh(int cases) {
  std::mt19937 rng(20240817u);
  std::uniform_real_distribution<double> pick_gamma(1.0, 5.0);
  std::uniform_int_distribution<int> pick_n(2, 2000);
  int bad = 0;
  for (int c = 0; c < cases; ++c) {
    const GradedMesh mesh =
        build_graded_mesh(1.0, pick_n(rng), pick_gamma(rng));
    const MeshPropertyReport rep = check_mesh_properties(mesh);
    if (!rep.ok()) {
      ++bad;
      std::printf("violation: N=%d gamma=%.6f (%zu growth, %zu step)\n",
                  mesh.N, mesh.gamma, rep.growth_violations.size(),
                  rep.step_violations.size());
    }
  }
  std::printf("%d randomized meshes checked, %d with violations\n%s\n",
              cases, bad, bad == 0 ? "PASS" : "FAIL");
  return bad == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Second-order time stepping for subdiffusion on graded meshes"};
  app.require_subcommand(1);

  CommonOpts temporal_opts, spatial_opts, trace_opts;
  CLI::App* temporal =
      app.add_subcommand("temporal", "Temporal convergence study");
  add_common(*temporal, temporal_opts);
  CLI::App* spatial =
      app.add_subcommand("spatial", "Spatial convergence study");
  add_common(*spatial, spatial_opts);
  CLI::App* trace =
      app.add_subcommand("trace", "Per-step error trace (defaults N=160, "
                         "M=1200)");
  add_common(*trace, trace_opts);

  int weight_cases = 500, mesh_cases = 300;
  CLI::App* vw = app.add_subcommand(
      "verify-weights", "Check convolution weights against quadrature");
  vw->add_option("--cases", weight_cases, "Number of randomized cases");
  CLI::App* vm = app.add_subcommand(
      "verify-mesh", "Check mesh grading inequalities on random meshes");
  vm->add_option("--cases", mesh_cases, "Number of randomized meshes");

  CLI11_PARSE(app, argc, argv);

  try {
    if (temporal->parsed()) return run_temporal(temporal_opts);
    if (spatial->parsed()) return run_spatial(spatial_opts);
    if (trace->parsed()) return run_trace(trace_opts);
    if (vw->parsed()) return run_verify_weights(weight_cases);
    if (vm->parsed()) return run_verify_mesh(mesh_cases);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
