// SPDX-License-Identifier: MIT
#pragma once

#include <vector>

#include "subdiff/fem1d.hpp"
#include "subdiff/frackernel.hpp"
#include "subdiff/mesh.hpp"

namespace subdiff {

enum class Scheme { L1, GCN };

/// Projection used to produce U^0 from the initial data.
enum class InitialData { Ritz, L2 };

/// Coefficient vectors U^0 .. U^N of one march, each of dimension
/// sys.dim(). Kept whole: the memory term needs the full history anyway,
/// and error-vs-time output reads it back.
struct SolutionHistory {
  GradedMesh mesh;
  Scheme scheme = Scheme::L1;
  std::vector<std::vector<double>> coeffs;
};

/// One step of the second-order scheme built on the piecewise-linear
/// kernel reconstruction:
///
///   (M + c_n G) U^n = (M - alpha c_n G) U^{n-1}
///       - sum_{j<n} [ (omega_{nj} - omega_{n-1,j}) G U^{j-1}
///                     + (hw_{nj} - hw_{n-1,j}) G dU^j ] + F^n,
///
/// with c_n = tau_n^alpha / Gamma(alpha+2) and dU^j = (U^j - U^{j-1}) / tau_j.
/// The history sum accumulates one vector first and applies G once.
/// history must hold steps 0 .. n-1. Throws std::runtime_error if the
/// result is not finite.
std::vector<double> step_l1(const SpatialSystem& sys, const WeightTable& w,
                            const SolutionHistory& history, int n,
                            const std::vector<double>& F_n);

/// One step of the generalized Crank-Nicolson comparison scheme, which
/// reconstructs the history by interval midpoint values:
///
///   (M + omega_{nn}/2 G) U^n = (M - omega_{nn}/2 G) U^{n-1}
///       - sum_{j<n} (omega_{nj} - omega_{n-1,j}) G (U^j + U^{j-1})/2 + F^n.
///
/// At alpha = 1 both schemes collapse to the classical Crank-Nicolson
/// step: the weight differences vanish identically.
std::vector<double> step_gcn(const SpatialSystem& sys, const WeightTable& w,
                             const SolutionHistory& history, int n,
                             const std::vector<double>& F_n);

/// Full march n = 1..N. U^0 is the chosen projection of problem.init
/// (Ritz by default). O(N^2 * dim) arithmetic from the history sums plus
/// O(N * dim) tridiagonal solves; deterministic: identical inputs give
/// bitwise-identical histories.
SolutionHistory run(const Problem& problem, const GradedMesh& mesh,
                    const SpatialSystem& sys, Scheme scheme,
                    InitialData init = InitialData::Ritz);

}  // namespace subdiff
