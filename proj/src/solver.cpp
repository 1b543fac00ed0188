// SPDX-License-Identifier: MIT
#include "subdiff/solver.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace subdiff {

namespace {

void check_step_args(const SpatialSystem& sys, const WeightTable& w,
                     const SolutionHistory& history, int n,
                     const std::vector<double>& F_n, const char* who) {
  const std::string name(who);
  if (n < 1 || n > w.mesh().N)
    throw std::invalid_argument(name + ": step index out of range");
  if (static_cast<int>(history.coeffs.size()) != n)
    throw std::invalid_argument(name + ": history must hold steps 0..n-1");
  for (const auto& u : history.coeffs)
    if (static_cast<int>(u.size()) != sys.dim())
      throw std::invalid_argument(name + ": history dimension mismatch");
  if (static_cast<int>(F_n.size()) != sys.dim())
    throw std::invalid_argument(name + ": load dimension mismatch");
}

std::vector<double> finish_step(const SpatialSystem& sys,
                                const SymTridiag& lhs,
                                const std::vector<double>& mass_arg,
                                const std::vector<double>& stiff_arg,
                                const std::vector<double>& F_n,
                                const char* who) {
  std::vector<double> rhs = apply(sys.mass, mass_arg);
  const std::vector<double> gs = apply(sys.stiff, stiff_arg);
  for (int i = 0; i < sys.dim(); ++i) rhs[i] += F_n[i] - gs[i];
  std::vector<double> u = tridiagonal_solve(lhs, std::move(rhs));
  for (double v : u)
    if (!std::isfinite(v))
      throw std::runtime_error(std::string(who) + ": non-finite solution");
  return u;
}

}  // namespace

std::vector<double> step_l1(const SpatialSystem& sys, const WeightTable& w,
                            const SolutionHistory& history, int n,
                            const std::vector<double>& F_n) {
  check_step_args(sys, w, history, n, F_n, "step_l1");
  const double alpha = w.alpha();
  const GradedMesh& mesh = w.mesh();
  const double tau_n = mesh.step(n);
  const double c_n = std::pow(tau_n, alpha) / std::tgamma(alpha + 2.0);

  const WeightRow rn = w.row(n);
  WeightRow rp;  // row n-1; stays empty at n == 1
  if (n >= 2) rp = w.row(n - 1);

  const std::vector<double>& u_prev = history.coeffs[n - 1];
  const int dim = sys.dim();

  // Everything the stiffness matrix acts on is gathered first so G is
  // applied exactly once per step.
  std::vector<double> stiff_arg(dim);
  for (int i = 0; i < dim; ++i) stiff_arg[i] = alpha * c_n * u_prev[i];
  for (int j = 1; j <= n - 1; ++j) {
    const double dw = rn.primary[j - 1] - rp.primary[j - 1];
    const double dv =
        (rn.secondary[j - 1] - rp.secondary[j - 1]) / mesh.step(j);
    const std::vector<double>& uj = history.coeffs[j];
    const std::vector<double>& um = history.coeffs[j - 1];
    for (int i = 0; i < dim; ++i)
      stiff_arg[i] += dw * um[i] + dv * (uj[i] - um[i]);
  }

  const SymTridiag lhs = lincomb(sys.mass, c_n, sys.stiff);
  return finish_step(sys, lhs, u_prev, stiff_arg, F_n, "step_l1");
}

std::vector<double> step_gcn(const SpatialSystem& sys, const WeightTable& w,
                             const SolutionHistory& history, int n,
                             const std::vector<double>& F_n) {
  check_step_args(sys, w, history, n, F_n, "step_gcn");

  const WeightRow rn = w.row(n);
  WeightRow rp;
  if (n >= 2) rp = w.row(n - 1);

  const std::vector<double>& u_prev = history.coeffs[n - 1];
  const int dim = sys.dim();
  const double half_wnn = 0.5 * rn.primary[n - 1];

  std::vector<double> stiff_arg(dim);
  for (int i = 0; i < dim; ++i) stiff_arg[i] = half_wnn * u_prev[i];
  for (int j = 1; j <= n - 1; ++j) {
    const double dw = rn.primary[j - 1] - rp.primary[j - 1];
    const std::vector<double>& uj = history.coeffs[j];
    const std::vector<double>& um = history.coeffs[j - 1];
    for (int i = 0; i < dim; ++i)
      stiff_arg[i] += dw * 0.5 * (uj[i] + um[i]);
  }

  const SymTridiag lhs = lincomb(sys.mass, half_wnn, sys.stiff);
  return finish_step(sys, lhs, u_prev, stiff_arg, F_n, "step_gcn");
}

SolutionHistory run(const Problem& problem, const GradedMesh& mesh,
                    const SpatialSystem& sys, Scheme scheme,
                    InitialData init) {
  if (!problem.init)
    throw std::invalid_argument("run: problem.init must be callable");
  if (init == InitialData::Ritz && !problem.init_prime)
    throw std::invalid_argument(
        "run: Ritz initial data needs problem.init_prime");

  const WeightTable w(mesh, problem.alpha);
  SolutionHistory history;
  history.mesh = mesh;
  history.scheme = scheme;
  history.coeffs.reserve(mesh.N + 1);
  history.coeffs.push_back(
      init == InitialData::Ritz
          ? ritz_project(sys, problem.init, problem.init_prime)
          : l2_project(sys, problem.init));

  for (int n = 1; n <= mesh.N; ++n) {
    const std::vector<double> F =
        load_vector(sys, problem.source, mesh.nodes[n - 1], mesh.nodes[n]);
    history.coeffs.push_back(scheme == Scheme::L1
                                 ? step_l1(sys, w, history, n, F)
                                 : step_gcn(sys, w, history, n, F));
  }
  return history;
}

}  // namespace subdiff
