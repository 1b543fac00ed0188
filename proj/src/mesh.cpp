// SPDX-License-Identifier: MIT
#include "subdiff/mesh.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace subdiff {

GradedMesh build_graded_mesh(double T, int N, double gamma) {
  if (!(T > 0.0)) throw std::invalid_argument("graded mesh: T must be > 0");
  if (N < 1) throw std::invalid_argument("graded mesh: N must be >= 1");
  if (!(gamma >= 1.0))
    throw std::invalid_argument("graded mesh: gamma must be >= 1");

  GradedMesh mesh;
  mesh.T = T;
  mesh.N = N;
  mesh.gamma = gamma;
  mesh.tau = std::pow(T, 1.0 / gamma) / N;
  mesh.nodes.resize(N + 1);
  for (int i = 0; i <= N; ++i)
    mesh.nodes[i] = std::pow(i * mesh.tau, gamma);
  mesh.nodes[0] = 0.0;
  mesh.nodes[N] = T;  // exact endpoint, independent of pow roundoff
  return mesh;
}

MeshPropertyReport check_mesh_properties(const GradedMesh& mesh) {
  MeshPropertyReport report;
  const double g = mesh.gamma;
  const double slack = 32.0 * std::numeric_limits<double>::epsilon();
  const double two_g = std::pow(2.0, g);
  for (int n = 2; n <= mesh.N; ++n) {
    const double tp = mesh.nodes[n - 1];
    const double tn = mesh.nodes[n];
    const double dt = mesh.step(n);
    if (tn > two_g * tp * (1.0 + slack))
      report.growth_violations.push_back(n);
    // tau_n between gamma*tau*t_{n-1}^(1-1/gamma) and gamma*tau*t_n^(1-1/gamma):
    // the mean value theorem applied to t -> t^gamma on [(n-1)tau, n tau],
    // with the derivative written in terms of the node values.
    const double lo = g * mesh.tau * std::pow(tp, 1.0 - 1.0 / g);
    const double hi = g * mesh.tau * std::pow(tn, 1.0 - 1.0 / g);
    if (dt < lo * (1.0 - slack) || dt > hi * (1.0 + slack))
      report.step_violations.push_back(n);
  }
  return report;
}

}  // namespace subdiff
