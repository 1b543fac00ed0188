// SPDX-License-Identifier: MIT
#include "subdiff/mittag_leffler.hpp"

#include <quadmath.h>

#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace subdiff {

namespace {

void check_args(double alpha, double x) {
  if (!(alpha > 0.0) || !(alpha <= 1.0) || !std::isfinite(alpha))
    throw std::domain_error("ml_neg: alpha must lie in (0, 1]");
  if (!(x >= 0.0) || !std::isfinite(x))
    throw std::domain_error("ml_neg: x must be finite and nonnegative");
}

// sin(pi w) with exact zeros at integer w. remainder() is exact, so the
// reduction never damages the argument; integers land on 0/+-1 exactly.
double sinpi(double w) {
  double r = std::remainder(w, 2.0);  // r in [-1, 1], sin(pi w) = sin(pi r)
  if (r == 0.0 || r == 1.0 || r == -1.0) return 0.0;
  if (r > 0.5)
    r = 1.0 - r;
  else if (r < -0.5)
    r = -1.0 - r;
  return std::sin(std::numbers::pi * r);
}

// Reciprocal-Gamma table 1/Gamma(alpha p + 1), p = 0, 1, ..., kept in
// quadruple precision. The argument alpha*p + 1 is formed in quad as
// well: rounding it to double first perturbs Gamma by far more than the
// final tolerance once alpha*p is large. One table per thread and alpha;
// the studies sweep one alpha per solve, so this caches perfectly.
struct ReciprocalGammaTable {
  double alpha = -1.0;
  std::vector<__float128> inv;

  const std::vector<__float128>& ensure(double a, std::size_t n) {
    if (a != alpha) {
      alpha = a;
      inv.clear();
    }
    const __float128 aq = a;
    while (inv.size() < n) {
      const __float128 arg = aq * static_cast<__float128>(inv.size()) + 1.0Q;
      inv.push_back(1.0Q / tgammaq(arg));
    }
    return inv;
  }
};

thread_local ReciprocalGammaTable gamma_table;

constexpr int kSeriesCap = 200000;

// Power series in double with Kahan compensation; adequate while the
// largest term stays ~e^4, i.e. x^(1/alpha) <= 4.
double series_double(double alpha, double x) {
  double sum = 1.0, comp = 0.0, xp = 1.0;
  const double z = std::pow(x, 1.0 / alpha);
  for (int p = 1; p < kSeriesCap; ++p) {
    xp *= -x;
    const auto& inv = gamma_table.ensure(alpha, p + 1);
    const double term = xp * static_cast<double>(inv[p]);
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    // Terms grow until alpha p + 1 ~ z; only stop once past that hump.
    if (alpha * p + 1.0 > z && std::fabs(term) < 1e-20) return sum;
  }
  throw std::runtime_error("ml_series: power series did not converge");
}

// Same series in __float128. The alternating terms reach ~e^z before the
// sum collapses to O(1), so the working precision must absorb e^z * eps;
// quad handles z up to the low fifties.
double series_quad(double alpha, double x) {
  __float128 sum = 1.0Q, comp = 0.0Q, xp = 1.0Q;
  const __float128 xq = x;
  const double z = std::pow(x, 1.0 / alpha);
  for (int p = 1; p < kSeriesCap; ++p) {
    xp *= -xq;
    const auto& inv = gamma_table.ensure(alpha, p + 1);
    const __float128 term = xp * inv[p];
    const __float128 y = term - comp;
    const __float128 t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    if (alpha * p + 1.0 > z && fabsq(term) < 1e-36Q)
      return static_cast<double>(sum);
  }
  throw std::runtime_error("ml_series: power series did not converge");
}

}  // namespace

double ml_switch_point(double alpha) { return std::pow(33.0, alpha); }

double ml_series(double alpha, double x) {
  check_args(alpha, x);
  if (x == 0.0) return 1.0;
  const double z = std::pow(x, 1.0 / alpha);
  return z <= 4.0 ? series_double(alpha, x) : series_quad(alpha, x);
}

double ml_asymptotic(double alpha, double x) {
  check_args(alpha, x);
  if (x <= 0.0)
    throw std::domain_error("ml_asymptotic: x must be positive");
  // E_alpha(-x) ~ sum_{k>=1} (-1)^(k+1) x^(-k) / Gamma(1 - alpha k),
  // truncated at its smallest term. Reflection turns the reciprocal of
  // Gamma at (near-)poles into well-behaved arithmetic:
  //   1/Gamma(1 - w) = Gamma(w) sin(pi w) / pi,
  // and an exact pole (alpha k integer) contributes an exact zero.
  //
  // Truncation must watch the sin-free envelope x^(-k) Gamma(alpha k)/pi,
  // not |term|: the sine factor makes term magnitudes oscillate wildly
  // when alpha k drifts past integers, which fools a naive
  // stop-on-first-growth rule long before the true divergent tail. The
  // envelope's logarithm is convex in k (lgamma is convex), so it has a
  // single minimum ~ e^(-z)/sqrt(2 pi z) at alpha k ~ z := x^(1/alpha);
  // stopping there bounds every omitted term.
  double sum = 0.0, comp = 0.0;
  double xk = 1.0;
  double env_prev = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= kSeriesCap; ++k) {
    xk /= x;
    const double w = alpha * k;
    if (w > 170.0) break;  // Gamma(w) would overflow; tail already tiny
    const double env = xk * std::tgamma(w) / std::numbers::pi;
    if (env >= env_prev) break;  // past the envelope minimum
    env_prev = env;
    const double s = sinpi(w);
    if (s != 0.0) {
      const double term = (k % 2 ? env : -env) * s;
      const double y = term - comp;
      const double t = sum + y;
      comp = (t - sum) - y;
      sum = t;
    }
    if (env < 1e-17) break;  // already far below the accuracy target
  }
  return sum;
}

double ml_neg(double alpha, double x) {
  check_args(alpha, x);
  if (alpha == 1.0) return std::exp(-x);  // E_1(-x) = exp(-x)
  if (x == 0.0) return 1.0;
  return x <= ml_switch_point(alpha) ? ml_series(alpha, x)
                                     : ml_asymptotic(alpha, x);
}

double ml_overlap_discrepancy(double alpha, int samples) {
  if (samples < 2)
    throw std::invalid_argument("ml_overlap_discrepancy: samples >= 2");
  // Both branches are trustworthy for x^(1/alpha) in [26, 52]: the series
  // loses ~e^z * quad-eps there (< 1e-10 up to z ~ 54) and the asymptotic
  // tail bottoms out below 1e-10 from z ~ 23 on.
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double z = 26.0 + (52.0 - 26.0) * i / (samples - 1);
    const double x = std::pow(z, alpha);
    worst = std::max(worst,
                     std::fabs(ml_series(alpha, x) - ml_asymptotic(alpha, x)));
  }
  return worst;
}

double SeriesSolution::lambda(int m) const {
  return (2 * m + 1) * std::numbers::pi;
}

double SeriesSolution::mode_factor(int m, double t) const {
  const double lam = lambda(m);
  return ml_neg(alpha, (kappa * lam * lam + react) * std::pow(t, alpha));
}

double SeriesSolution::operator()(double x, double t) const {
  double sum = 0.0;
  for (int m = 0; m < n_terms; ++m) {
    const double lam = lambda(m);
    sum += std::sin(lam * x) / (lam * lam * lam) * mode_factor(m, t);
  }
  return 8.0 * sum;
}

double exact_solution(const SeriesSolution& sol, double x, double t) {
  if (!(x >= 0.0) || !(x <= 1.0))
    throw std::domain_error("exact_solution: x must lie in [0, 1]");
  if (!(t >= 0.0) || !std::isfinite(t))
    throw std::domain_error("exact_solution: t must be finite and >= 0");
  return sol(x, t);
}

}  // namespace subdiff
