// SPDX-License-Identifier: MIT
#pragma once

#include <functional>
#include <vector>

namespace subdiff {

using ScalarField = std::function<double(double)>;
using SpaceTimeField = std::function<double(double, double)>;

/// Symmetric tridiagonal matrix: main diagonal plus one off-diagonal band.
struct SymTridiag {
  std::vector<double> diag;
  std::vector<double> off;  ///< size diag.size() - 1

  int size() const { return static_cast<int>(diag.size()); }
};

/// y = A * x
std::vector<double> apply(const SymTridiag& A, const std::vector<double>& x);

/// A + c * B (same dimensions).
SymTridiag lincomb(const SymTridiag& A, double c, const SymTridiag& B);

/// Thomas elimination for a positive-definite symmetric tridiagonal
/// system. Throws std::runtime_error on a vanishing pivot.
std::vector<double> tridiagonal_solve(const SymTridiag& A,
                                      std::vector<double> rhs);

/// Data of the initial-boundary value problem
///
///   du/dt + d_t^(1-alpha) [ -(kappa(x) u')' + react(x) u ] = source,
///   u = 0 on the boundary,  u(x, 0) = init(x).
///
/// init_prime is the analytic derivative of init, used only by the Ritz
/// projection right-hand side.
struct Problem {
  double alpha = 0.5;
  ScalarField kappa = [](double) { return 1.0; };
  ScalarField react = [](double) { return 1.0; };
  SpaceTimeField source;  ///< empty target = homogeneous (f = 0)
  ScalarField init = [](double x) { return x * (1.0 - x); };
  ScalarField init_prime = [](double x) { return 1.0 - 2.0 * x; };
};

/// Piecewise-linear (P1) Galerkin discretization of (a, b) on a uniform
/// partition with homogeneous Dirichlet conditions: only interior hat
/// functions enter, so both matrices have dimension elements - 1.
///
///   mass_{pq}  = <phi_q, phi_p>
///   stiff_{pq} = <kappa phi_q', phi_p'> + <react phi_q, phi_p>
///
/// Coefficient integrals use 2-point Gauss quadrature per element (exact
/// for the constant-coefficient case).
struct SpatialSystem {
  double a = 0.0, b = 1.0;
  int elements = 2;
  double h = 0.5;
  SymTridiag mass;
  SymTridiag stiff;
  ScalarField kappa;  ///< copied from the Problem at build time
  ScalarField react;

  int dim() const { return elements - 1; }
  double node(int p) const { return a + h * p; }  ///< x_p, 0 <= p <= elements
};

/// Assemble the system. Throws std::invalid_argument for a degenerate
/// interval or elements < 2, and std::runtime_error if kappa is
/// non-positive at any quadrature point.
SpatialSystem build_system(double a, double b, int elements,
                           const Problem& problem);

/// Ritz projection: coefficients c solving  stiff * c = r  with
/// r_p = <kappa w', phi_p'> + <react w, phi_p>, the right-hand side
/// evaluated by 4-point Gauss quadrature per element.
std::vector<double> ritz_project(const SpatialSystem& sys,
                                 const ScalarField& w,
                                 const ScalarField& w_prime);

/// Ritz projection with w' replaced by a fourth-order central difference
/// (step shrunk near the interval ends so w is never sampled outside).
std::vector<double> ritz_project(const SpatialSystem& sys,
                                 const ScalarField& w);

/// L2 projection: mass * c = <w, phi_p>, 4-point Gauss right-hand side.
std::vector<double> l2_project(const SpatialSystem& sys,
                               const ScalarField& w);

/// Time-integrated load vector
///   F_p = integral over (t0, t1) of <f(., t), phi_p> dt,
/// 3-point Gauss in time x 2-point Gauss in space per element.
/// An empty source yields the zero vector.
std::vector<double> load_vector(const SpatialSystem& sys,
                                const SpaceTimeField& f, double t0, double t1);

inline std::vector<double> load_vector(const SpatialSystem& sys,
                                       const Problem& problem, double t0,
                                       double t1) {
  return load_vector(sys, problem.source, t0, t1);
}

/// L2(a, b) distance between the P1 function with the given interior
/// coefficients and an arbitrary function g, by 2-point Gauss quadrature
/// on each of `refine` equal sub-intervals per element. refine > 1
/// sharpens the quadrature when g is far from resolved on the partition.
double l2_error(const SpatialSystem& sys, const std::vector<double>& coeffs,
                const ScalarField& g, int refine = 1);

}  // namespace subdiff
