#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "cubeta/params.hpp"

namespace cubeta {

struct RootSolveConfig {
  double tolerance = 1e-12;  // absolute residual bound
  int max_iterations = 100;
  double clamp_lo = 0.0;
  double clamp_hi = 1.0;
};

/// Result of inverting the monotone transform at a point.
struct QuadInversion {
  double p = 0.0;         // root in [0,1]
  double jacobian = 0.0;  // dx/dp at the root
  // The auxiliary Delta(x) = sqrt(gamma^2 + (1-2 gamma) x) when the
  // quadratic closed form was used; empty on the cubic (Newton) path.
  std::optional<double> delta;
};

struct NonConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ToleranceNotMet : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Solve f(x) = target for monotone nondecreasing f on
/// [cfg.clamp_lo, cfg.clamp_hi]. f returns {value, derivative}. Every
/// iterate stays inside the clamp interval: a Newton step that would
/// leave the current bracket is replaced by bisection, so f is never
/// evaluated outside the interval and convergence is unconditional.
template <class F>
double clamped_newton(F&& f, double target, double x0,
                      const RootSolveConfig& cfg = {}) {
  double lo = cfg.clamp_lo;
  double hi = cfg.clamp_hi;
  double x = std::min(std::max(x0, lo), hi);
  for (int it = 0; it < cfg.max_iterations; ++it) {
    const auto [v, dv] = f(x);
    const double resid = v - target;
    if (std::abs(resid) <= cfg.tolerance) return x;
    if (resid > 0.0) {
      hi = x;
    } else {
      lo = x;
    }
    double next = x - resid / dv;
    if (!std::isfinite(next) || next <= lo || next >= hi || next == x) {
      next = 0.5 * (lo + hi);
    }
    if (next == x) return x;  // bracket exhausted at machine precision
    x = next;
  }
  throw NonConvergence("clamped_newton: no convergence after " +
                       std::to_string(cfg.max_iterations) + " iterations");
}

/// Invert x = a p + b p^2 + c p^3 for p in [0,1]. Quadratic and linear
/// cases use closed forms; the cubic uses Newton from p = x.
QuadInversion solve_monotone_poly(const CubicCoeffs& coeffs, double x,
                                  const RootSolveConfig& cfg = {});

/// log B(alpha, beta)
double log_beta(double alpha, double beta);

/// Regularized incomplete beta function I(alpha, beta; x), the Beta(alpha,
/// beta) distribution function. Continued fraction (modified Lentz) with
/// the symmetry switch at x = (alpha+1)/(alpha+beta+2).
double reg_inc_beta(double alpha, double beta, double x);

/// Step the first shape parameter up by one using
///   I(alpha+1, beta; x) = I(alpha, beta; x) - x^alpha (1-x)^beta /
///                         (alpha B(alpha, beta)),
/// given i_val = I(alpha, beta; x).
double inc_beta_step_down(double alpha, double beta, double x, double i_val);

/// Upper tail of the chi-squared distribution with df degrees of freedom.
double chi_squared_sf(double x, int df);

/// Adaptive Gauss-Kronrod 7-15 integration of f over [a, b] (defaults to
/// [0,1]), refining the worst panel until the accumulated error estimate
/// drops below abs_tol. Panel nodes are strictly interior, so integrable
/// endpoint singularities are never evaluated at the endpoint itself.
/// Throws ToleranceNotMet when the panel budget is exhausted.
double quadrature(const std::function<double(double)>& f, double abs_tol,
                  double a = 0.0, double b = 1.0);

}  // namespace cubeta
