// SPDX-License-Identifier: MIT
#pragma once

#include <vector>

namespace subdiff {

/// Temporal grid on [0, T] graded toward t = 0:
///
///   t_i = (i * tau)^gamma,   tau = T^(1/gamma) / N,   0 <= i <= N.
///
/// gamma = 1 gives the uniform grid; larger gamma concentrates nodes near
/// the origin, where solutions of the fractional-order problem have weak
/// initial-layer regularity. Every node is computed from the closed
/// formula (never by accumulating steps) and the final node is assigned
/// exactly T.
struct GradedMesh {
  double T = 1.0;
  int N = 1;
  double gamma = 1.0;
  double tau = 1.0;            ///< base step, T^(1/gamma) / N
  std::vector<double> nodes;   ///< t_0 .. t_N

  /// Step length tau_i = t_i - t_{i-1}, valid for 1 <= i <= N.
  double step(int i) const { return nodes[i] - nodes[i - 1]; }
};

/// Build the graded mesh.
/// Throws std::invalid_argument unless T > 0, N >= 1 and gamma >= 1.
GradedMesh build_graded_mesh(double T, int N, double gamma);

/// Outcome of check_mesh_properties. Empty vectors mean every inequality
/// held; otherwise the offending indices n are listed.
struct MeshPropertyReport {
  std::vector<int> growth_violations;  ///< t_n <= 2^gamma * t_{n-1} failed
  std::vector<int> step_violations;    ///< step bounds below failed
  bool ok() const { return growth_violations.empty() && step_violations.empty(); }
};

/// Check, for every n >= 2, the two constant-free grading inequalities
/// (with a few-ulp slack for roundoff):
///
///   t_n <= 2^gamma * t_{n-1}
///   gamma * tau * t_{n-1}^(1 - 1/gamma) <= tau_n <= gamma * tau * t_n^(1 - 1/gamma)
MeshPropertyReport check_mesh_properties(const GradedMesh& mesh);

}  // namespace subdiff
