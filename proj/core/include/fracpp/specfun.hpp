#pragma once

#include <functional>

#include "fracpp/series.hpp"

namespace fracpp {

/// Tuning knobs for the Mittag-Leffler series evaluator.
///
/// For strongly negative arguments the Taylor series cancels
/// catastrophically; the evaluator then re-sums in extended precision with
/// just enough bits to absorb the cancellation. max_prec_bits bounds that
/// escalation and max_cancel_ratio (max |term| / |sum|) can be tightened to
/// fail fast instead; both trip an accuracy_error carrying the best value.
struct MlOptions {
  int max_terms = 4000;
  long max_prec_bits = 16384;
  double max_cancel_ratio = 1e290;
};

/// One-parameter Mittag-Leffler function: sum_k z^k / Gamma(1 + beta k),
/// beta in (0,1]. For z <= 0 the value lies in (0, 1].
SeriesResult mittag_leffler(double beta, double z, const MlOptions& opts = {});

/// Two-parameter variant: sum_k z^k / Gamma(beta k + gamma), gamma > 0.
/// Reduces to the one-parameter function at gamma = 1.
SeriesResult mittag_leffler_two_param(double beta, double gamma, double z,
                                      const MlOptions& opts = {});

/// Reciprocal gamma 1/Gamma(x); entire, exactly 0 at nonpositive integers.
double recip_gamma(double x);

/// Non-regularized incomplete beta integral int_0^x t^(a-1)(1-t)^(b-1) dt,
/// a,b > 0, x in [0,1], by adaptive Gauss-Kronrod quadrature with a
/// substitution that removes the t=0 endpoint singularity when a < 1.
double incomplete_beta(double a, double b, double x);

/// Complete beta function B(a,b) evaluated through the same quadrature.
double complete_beta(double a, double b);

/// Caputo derivative of t^p for order beta in (0,1]:
/// Gamma(p+1)/Gamma(p-beta+1) * t^(p-beta); requires p > 0.
double caputo_power(double p, double beta, double t);

/// Caputo derivative of a sampled function by the L1 product-trapezoid
/// rule on a uniform n_grid-point mesh: f is linearly interpolated per cell
/// and the kernel (t-s)^(-beta) is integrated exactly on each cell.
/// beta = 1 falls back to a one-sided second-order difference at t.
double caputo_numeric(const std::function<double(double)>& f, double beta,
                      double t, int n_grid);

namespace detail {
/// sin(pi x) with exact zeros at integer x.
double sinpi(double x);
/// Thread-safe log-gamma for positive arguments.
double lgamma_pos(double x);
}  // namespace detail

}  // namespace fracpp
