// SPDX-License-Identifier: MIT
#include "subdiff/fem1d.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace subdiff {

namespace {

// Gauss-Legendre nodes/weights on (-1, 1).
constexpr double kG2x[] = {-0.5773502691896257645091488, 0.5773502691896257645091488};
constexpr double kG2w[] = {1.0, 1.0};

constexpr double kG3x[] = {-0.7745966692414833770358531, 0.0,
                           0.7745966692414833770358531};
constexpr double kG3w[] = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};

constexpr double kG4x[] = {-0.8611363115940525752239465, -0.3399810435848562648026658,
                           0.3399810435848562648026658, 0.8611363115940525752239465};
constexpr double kG4w[] = {0.3478548451374538573730639, 0.6521451548625461426269361,
                           0.6521451548625461426269361, 0.3478548451374538573730639};

void check_dims(const SymTridiag& A) {
  if (A.diag.empty() || A.off.size() + 1 != A.diag.size())
    throw std::invalid_argument("SymTridiag: band sizes are inconsistent");
}

}  // namespace

std::vector<double> apply(const SymTridiag& A, const std::vector<double>& x) {
  check_dims(A);
  if (x.size() != A.diag.size())
    throw std::invalid_argument("apply: dimension mismatch");
  const int n = A.size();
  std::vector<double> y(n);
  for (int i = 0; i < n; ++i) {
    double v = A.diag[i] * x[i];
    if (i > 0) v += A.off[i - 1] * x[i - 1];
    if (i + 1 < n) v += A.off[i] * x[i + 1];
    y[i] = v;
  }
  return y;
}

SymTridiag lincomb(const SymTridiag& A, double c, const SymTridiag& B) {
  check_dims(A);
  check_dims(B);
  if (A.diag.size() != B.diag.size())
    throw std::invalid_argument("lincomb: dimension mismatch");
  SymTridiag R = A;
  const int n = A.size();
  for (int i = 0; i < n; ++i) R.diag[i] += c * B.diag[i];
  for (int i = 0; i + 1 < n; ++i) R.off[i] += c * B.off[i];
  return R;
}

std::vector<double> tridiagonal_solve(const SymTridiag& A,
                                      std::vector<double> rhs) {
  check_dims(A);
  if (rhs.size() != A.diag.size())
    throw std::invalid_argument("tridiagonal_solve: dimension mismatch");
  const int n = A.size();

  // Thomas algorithm. No pivoting: intended for the positive-definite
  // matrices produced by build_system, where it is stable.
  std::vector<double> c(n > 1 ? n - 1 : 0);
  std::vector<double> d(n);
  double pivot = A.diag[0];
  if (pivot == 0.0) throw std::runtime_error("tridiagonal_solve: zero pivot");
  if (n > 1) c[0] = A.off[0] / pivot;
  d[0] = rhs[0] / pivot;
  for (int i = 1; i < n; ++i) {
    pivot = A.diag[i] - A.off[i - 1] * c[i - 1];
    if (pivot == 0.0) throw std::runtime_error("tridiagonal_solve: zero pivot");
    if (i + 1 < n) c[i] = A.off[i] / pivot;
    d[i] = (rhs[i] - A.off[i - 1] * d[i - 1]) / pivot;
  }
  for (int i = n - 2; i >= 0; --i) d[i] -= c[i] * d[i + 1];
  return d;
}

SpatialSystem build_system(double a, double b, int elements,
                           const Problem& problem) {
  if (!(b > a)) throw std::invalid_argument("build_system: need b > a");
  if (elements < 2)
    throw std::invalid_argument("build_system: need at least 2 elements");
  if (!problem.kappa || !problem.react)
    throw std::invalid_argument("build_system: kappa/react must be callable");

  SpatialSystem sys;
  sys.a = a;
  sys.b = b;
  sys.elements = elements;
  sys.h = (b - a) / elements;
  sys.kappa = problem.kappa;
  sys.react = problem.react;

  const int dim = elements - 1;
  sys.mass.diag.assign(dim, 0.0);
  sys.mass.off.assign(dim > 1 ? dim - 1 : 0, 0.0);
  sys.stiff.diag.assign(dim, 0.0);
  sys.stiff.off.assign(dim > 1 ? dim - 1 : 0, 0.0);

  const double h = sys.h;
  // Element contributions. On element e = (x_e, x_{e+1}) the two local
  // hats are L0 = (x_{e+1} - x)/h (global index e - 1) and L1 = (x - x_e)/h
  // (global index e); indices outside [0, dim) belong to boundary nodes
  // and are dropped.
  for (int e = 0; e < elements; ++e) {
    const double xl = sys.node(e);
    double m00 = 0, m01 = 0, m11 = 0;  // <L_q, L_p>
    double s00 = 0, s01 = 0, s11 = 0;  // <kappa L_q', L_p'> + <react L_q, L_p>
    for (int q = 0; q < 2; ++q) {
      const double x = xl + 0.5 * h * (1.0 + kG2x[q]);
      const double w = 0.5 * h * kG2w[q];
      const double k = sys.kappa(x);
      if (!(k > 0.0))
        throw std::runtime_error("build_system: kappa must be positive");
      const double r = sys.react(x);
      const double l0 = (xl + h - x) / h, l1 = (x - xl) / h;
      m00 += w * l0 * l0;
      m01 += w * l0 * l1;
      m11 += w * l1 * l1;
      const double g = 1.0 / (h * h);  // L0' L0' = L1' L1' = -L0' L1'
      s00 += w * (k * g + r * l0 * l0);
      s01 += w * (-k * g + r * l0 * l1);
      s11 += w * (k * g + r * l1 * l1);
    }
    const int p0 = e - 1, p1 = e;
    if (p0 >= 0) {
      sys.mass.diag[p0] += m00;
      sys.stiff.diag[p0] += s00;
    }
    if (p1 < dim) {
      sys.mass.diag[p1] += m11;
      sys.stiff.diag[p1] += s11;
    }
    if (p0 >= 0 && p1 < dim) {
      sys.mass.off[p0] += m01;
      sys.stiff.off[p0] += s01;
    }
  }
  return sys;
}

namespace {

// Accumulate <g0, phi_p> (+ <g1, phi_p'> when g1 set) with 4-point Gauss.
std::vector<double> hat_functional(const SpatialSystem& sys,
                                   const std::function<double(double)>& g0,
                                   const std::function<double(double)>& g1) {
  const int dim = sys.dim();
  std::vector<double> r(dim, 0.0);
  const double h = sys.h;
  for (int e = 0; e < sys.elements; ++e) {
    const double xl = sys.node(e);
    for (int q = 0; q < 4; ++q) {
      const double x = xl + 0.5 * h * (1.0 + kG4x[q]);
      const double w = 0.5 * h * kG4w[q];
      const double l0 = (xl + h - x) / h, l1 = (x - xl) / h;
      const double v0 = g0 ? g0(x) : 0.0;
      const double v1 = g1 ? g1(x) : 0.0;
      if (e - 1 >= 0) r[e - 1] += w * (v0 * l0 + v1 * (-1.0 / h));
      if (e < dim) r[e] += w * (v0 * l1 + v1 * (1.0 / h));
    }
  }
  return r;
}

}  // namespace

std::vector<double> ritz_project(const SpatialSystem& sys, const ScalarField& w,
                                 const ScalarField& w_prime) {
  if (!w || !w_prime)
    throw std::invalid_argument("ritz_project: w and w_prime must be callable");
  // r_p = <kappa w', phi_p'> + <react w, phi_p>
  auto rhs = hat_functional(
      sys, [&](double x) { return sys.react(x) * w(x); },
      [&](double x) { return sys.kappa(x) * w_prime(x); });
  return tridiagonal_solve(sys.stiff, std::move(rhs));
}

std::vector<double> ritz_project(const SpatialSystem& sys,
                                 const ScalarField& w) {
  if (!w) throw std::invalid_argument("ritz_project: w must be callable");
  const double a = sys.a, b = sys.b;
  // Fourth-order central difference, with the step shrunk near the ends
  // so w is only ever sampled inside [a, b]. Quadrature points sit in the
  // open interval, so a positive step always exists.
  auto w_prime = [&, w](double x) {
    const double d = std::min({1e-3 * (1.0 + std::fabs(x)), 0.5 * (x - a),
                               0.5 * (b - x)});
    return (8.0 * (w(x + d) - w(x - d)) - (w(x + 2.0 * d) - w(x - 2.0 * d))) /
           (12.0 * d);
  };
  return ritz_project(sys, w, w_prime);
}

std::vector<double> l2_project(const SpatialSystem& sys, const ScalarField& w) {
  if (!w) throw std::invalid_argument("l2_project: w must be callable");
  auto rhs = hat_functional(sys, w, nullptr);
  return tridiagonal_solve(sys.mass, std::move(rhs));
}

std::vector<double> load_vector(const SpatialSystem& sys,
                                const SpaceTimeField& f, double t0,
                                double t1) {
  if (!(t1 >= t0)) throw std::invalid_argument("load_vector: need t1 >= t0");
  const int dim = sys.dim();
  std::vector<double> r(dim, 0.0);
  if (!f) return r;  // homogeneous source
  const double h = sys.h, dt = t1 - t0;
  for (int qt = 0; qt < 3; ++qt) {
    const double t = t0 + 0.5 * dt * (1.0 + kG3x[qt]);
    const double wt = 0.5 * dt * kG3w[qt];
    for (int e = 0; e < sys.elements; ++e) {
      const double xl = sys.node(e);
      for (int q = 0; q < 2; ++q) {
        const double x = xl + 0.5 * h * (1.0 + kG2x[q]);
        const double w = wt * 0.5 * h * kG2w[q];
        const double v = f(x, t);
        const double l0 = (xl + h - x) / h, l1 = (x - xl) / h;
        if (e - 1 >= 0) r[e - 1] += w * v * l0;
        if (e < dim) r[e] += w * v * l1;
      }
    }
  }
  return r;
}

double l2_error(const SpatialSystem& sys, const std::vector<double>& coeffs,
                const ScalarField& g, int refine) {
  if (static_cast<int>(coeffs.size()) != sys.dim())
    throw std::invalid_argument("l2_error: coefficient size mismatch");
  if (!g) throw std::invalid_argument("l2_error: g must be callable");
  if (refine < 1) throw std::invalid_argument("l2_error: refine >= 1");
  const int dim = sys.dim();
  const double h = sys.h, hs = h / refine;
  auto coeff = [&](int p) {  // boundary nodes carry 0
    return (p >= 0 && p < dim) ? coeffs[p] : 0.0;
  };
  double acc = 0.0;
  for (int e = 0; e < sys.elements; ++e) {
    const double xl = sys.node(e);
    const double c0 = coeff(e - 1), c1 = coeff(e);
    for (int s = 0; s < refine; ++s) {
      const double sl = xl + s * hs;
      for (int q = 0; q < 2; ++q) {
        const double x = sl + 0.5 * hs * (1.0 + kG2x[q]);
        const double w = 0.5 * hs * kG2w[q];
        const double uh = c0 * (xl + h - x) / h + c1 * (x - xl) / h;
        const double d = uh - g(x);
        acc += w * d * d;
      }
    }
  }
  return std::sqrt(acc);
}

}  // namespace subdiff
