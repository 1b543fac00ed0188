// SPDX-License-Identifier: MIT
#pragma once

namespace subdiff {

/// E_alpha(-x) on the nonpositive real axis, for 0 < alpha <= 1 and
/// x >= 0, to at least 1e-12 absolute accuracy.
///
/// Two regimes, split at x = ml_switch_point(alpha):
///  * below: the defining power series sum_p (-x)^p / Gamma(alpha p + 1)
///    with compensated summation (extended precision once the terms grow
///    large enough that double cancellation would dominate);
///  * above: the asymptotic expansion
///      E_alpha(-x) ~ sum_{k>=1} (-1)^(k+1) x^(-k) / Gamma(1 - alpha k)
///    truncated at its smallest term, with 1/Gamma evaluated through the
///    reflection formula so that poles contribute exact zeros.
///
/// Throws std::domain_error outside the stated parameter range.
double ml_neg(double alpha, double x);

/// Branch split point: the series handles x^(1/alpha) <= 33, i.e.
/// x <= 33^alpha. Chosen per alpha so the two branches overlap with
/// discrepancy far below 1e-10 (see ml_overlap_discrepancy).
double ml_switch_point(double alpha);

/// The two branches individually, exposed for overlap validation.
double ml_series(double alpha, double x);
double ml_asymptotic(double alpha, double x);

/// Max |series - asymptotic| sampled across the band where both branches
/// are trustworthy: x^(1/alpha) in [26, 52], i.e. x in [26^alpha, 52^alpha],
/// which brackets the switch point. Used as a startup self-check.
double ml_overlap_discrepancy(double alpha, int samples = 64);

/// Truncated separable series solution of the built-in test problem
///
///   du/dt + d_t^(1-alpha) [ -kappa u_xx + react u ] = 0  on (0, 1),
///   u(0,t) = u(1,t) = 0,   u(x,0) = x(1 - x),
///
/// whose sine expansion has only odd modes:
///
///   u(x,t) = 8 sum_{m=0..n_terms-1} lambda_m^(-3) sin(lambda_m x)
///                * E_alpha(-(kappa lambda_m^2 + react) t^alpha),
///   lambda_m = (2m + 1) pi.
///
/// The modal factor at t = 0 is 1, reproducing the Fourier expansion of
/// x(1 - x); truncation leaves a residue below 8 / lambda_{n_terms}^3.
struct SeriesSolution {
  double alpha = 0.5;
  int n_terms = 60;
  double kappa = 1.0;
  double react = 1.0;

  double lambda(int m) const;
  /// E_alpha(-(kappa lambda_m^2 + react) t^alpha)
  double mode_factor(int m, double t) const;
  double operator()(double x, double t) const;
};

/// Partial series sum at (x, t); x in [0, 1], t >= 0.
double exact_solution(const SeriesSolution& sol, double x, double t);

}  // namespace subdiff
