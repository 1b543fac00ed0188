// SPDX-License-Identifier: MIT
#include "subdiff/frackernel.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace subdiff {

namespace {

void check_indices(const GradedMesh& mesh, int n, int j) {
  if (n < 1 || n > mesh.N || j < 1 || j > n)
    throw std::out_of_range("weights: need 1 <= j <= n <= N");
}

// a^p - b^p for a >= b >= 0. When b/a -> 1 the naive difference cancels;
// rewrite as -a^p * expm1(p * log(b/a)), which keeps full relative accuracy.
double pow_diff(double a, double b, double p) {
  if (b <= 0.0) return std::pow(a, p);
  const double r = b / a;
  if (r > 0.9) return -std::pow(a, p) * std::expm1(p * std::log(r));
  return std::pow(a, p) - std::pow(b, p);
}

}  // namespace

double kernel(double alpha, double t) {
  if (!(alpha > 0.0) || alpha > 1.0)
    throw std::domain_error("kernel: alpha must be in (0, 1]");
  if (!(t > 0.0)) throw std::domain_error("kernel: t must be > 0");
  return std::pow(t, alpha - 1.0) / std::tgamma(alpha);
}

double primary_weight(const GradedMesh& mesh, double alpha, int n, int j) {
  check_indices(mesh, n, j);
  if (alpha == 1.0) return mesh.step(j);  // kernel == 1
  const double a = mesh.nodes[n] - mesh.nodes[j - 1];
  const double b = mesh.nodes[n] - mesh.nodes[j];
  return pow_diff(a, b, alpha) / std::tgamma(alpha + 1.0);
}

double secondary_weight(const GradedMesh& mesh, double alpha, int n, int j) {
  check_indices(mesh, n, j);
  const double tau = mesh.step(j);
  if (alpha == 1.0) return 0.5 * tau * tau;
  const double a = mesh.nodes[n] - mesh.nodes[j - 1];
  const double b = mesh.nodes[n] - mesh.nodes[j];
  const double first = pow_diff(a, b, alpha + 1.0) / std::tgamma(alpha + 2.0);
  if (b <= 0.0) return first;  // j == n
  return first - tau * std::pow(b, alpha) / std::tgamma(alpha + 1.0);
}

WeightRow WeightTable::row(int n) const {
  WeightRow r;
  r.primary.resize(n);
  r.secondary.resize(n);
  for (int j = 1; j <= n; ++j) {
    r.primary[j - 1] = primary_weight(*mesh_, alpha_, n, j);
    r.secondary[j - 1] = secondary_weight(*mesh_, alpha_, n, j);
  }
  return r;
}

double primary_row_sum(double t_n, double alpha) {
  return std::pow(t_n, alpha) / std::tgamma(alpha + 1.0);
}

namespace {

// Adaptive Simpson with an absolute tolerance. Plain recursion with the
// classical |S2 - S1| / 15 error estimate.
double simpson(double a, double fa, double fm, double b, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a,
                     double fa, double b, double fb, double m, double fm,
                     double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(a, fa, flm, m, fm);
  const double right = simpson(m, fm, frm, b, fb);
  const double err = left + right - whole;
  if (depth <= 0) {
    if (std::fabs(err) > 15.0 * tol)
      throw std::runtime_error("weight_oracle: quadrature did not converge");
    return left + right + err / 15.0;
  }
  if (std::fabs(err) <= 15.0 * tol)
    return left + right + err / 15.0;
  return adaptive_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         adaptive_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
  if (!(b > a)) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a), fb = f(b), fm = f(m);
  return adaptive_step(f, a, fa, b, fb, m, fm, simpson(a, fa, fm, b, fb),
                       tol, 48);
}

}  // namespace

std::pair<double, double> weight_oracle(const GradedMesh& mesh, double alpha,
                                        int n, int j) {
  check_indices(mesh, n, j);
  const double tn = mesh.nodes[n];
  const double tl = mesh.nodes[j - 1];
  const double tr = mesh.nodes[j];
  const double ig = 1.0 / std::tgamma(alpha);
  const double tol = 1e-15;

  if (j == n) {
    // The kernel is singular at s = t_n; substitute u = (t_n - s)^alpha,
    // under which omega becomes the integral of a constant and hw the
    // integral of the smooth profile (tau_n - u^(1/alpha)).
    const double umax = std::pow(tn - tl, alpha);
    const double c = ig / alpha;
    const double primary = integrate([&](double) { return c; }, 0.0, umax, tol);
    const double secondary = integrate(
        [&](double u) { return c * ((tr - tl) - std::pow(u, 1.0 / alpha)); },
        0.0, umax, tol);
    return {primary, secondary};
  }

  const auto k = [&](double s) { return ig * std::pow(tn - s, alpha - 1.0); };
  const double primary = integrate(k, tl, tr, tol);
  const double secondary =
      integrate([&](double s) { return (s - tl) * k(s); }, tl, tr, tol);
  return {primary, secondary};
}

}  // namespace subdiff
