// SPDX-License-Identifier: MIT
#pragma once

#include <utility>
#include <vector>

#include "subdiff/mesh.hpp"

namespace subdiff {

/// Riemann-Liouville kernel  omega_alpha(t) = t^(alpha-1) / Gamma(alpha).
/// Requires 0 < alpha <= 1 and t > 0 (throws std::domain_error otherwise).
double kernel(double alpha, double t);

/// Primary convolution weight
///
///   omega_{nj} = integral over (t_{j-1}, t_j) of omega_alpha(t_n - s) ds
///              = [ (t_n - t_{j-1})^alpha - (t_n - t_j)^alpha ] / Gamma(alpha+1),
///
/// for 1 <= j <= n. The j = n case uses (t_n - t_n)^alpha = 0. When the two
/// powers nearly cancel (late-history terms, b/a -> 1) the difference is
/// evaluated through expm1 of the log-ratio instead of naively; losing those
/// digits visibly corrupts measured convergence rates.
double primary_weight(const GradedMesh& mesh, double alpha, int n, int j);

/// Secondary (linear-correction) weight
///
///   hw_{nj} = integral over (t_{j-1}, t_j) of (q - t_{j-1}) * omega_alpha(t_n - q) dq
///           = [ (t_n-t_{j-1})^(alpha+1) - (t_n-t_j)^(alpha+1) ] / Gamma(alpha+2)
///             - tau_j * (t_n - t_j)^alpha / Gamma(alpha+1).
///
/// At alpha = 1 both weights collapse exactly (in floating point) to
/// tau_j and tau_j^2 / 2.
double secondary_weight(const GradedMesh& mesh, double alpha, int n, int j);

/// One level of weights: primary[j-1] = omega_{nj}, secondary[j-1] = hw_{nj},
/// j = 1..n.
struct WeightRow {
  std::vector<double> primary;
  std::vector<double> secondary;
};

/// Weight evaluation bound to a mesh. Rows are computed on demand (the
/// stepping scheme only ever needs rows n and n-1); nothing is shared
/// across runs.
class WeightTable {
 public:
  WeightTable(const GradedMesh& mesh, double alpha)
      : mesh_(&mesh), alpha_(alpha) {}

  WeightRow row(int n) const;
  double alpha() const { return alpha_; }
  const GradedMesh& mesh() const { return *mesh_; }

 private:
  const GradedMesh* mesh_;
  double alpha_;
};

/// Exact value of the telescoped row sum:
///   sum_{j=1..n} omega_{nj} = t_n^alpha / Gamma(alpha+1).
double primary_row_sum(double t_n, double alpha);

/// Independent check of the closed forms: both weights recomputed by
/// adaptive Simpson quadrature of their defining integrals, with the
/// endpoint singularity at s = t_n (j = n) removed by the substitution
/// u = (t_n - s)^alpha. Target absolute accuracy ~1e-14; throws
/// std::runtime_error if the recursion cannot converge.
std::pair<double, double> weight_oracle(const GradedMesh& mesh, double alpha,
                                        int n, int j);

}  // namespace subdiff
