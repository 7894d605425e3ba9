#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cubeta/dist.hpp"
#include "cubeta/params.hpp"

namespace cubeta {

/// Bad observations: values outside the stated interval, or boundary
/// values when nudging is disabled.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Optimizer failure surfaced where a result cannot be returned.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Observations rescaled from [lo, hi] to the open unit interval.
/// Boundary values are rejected unless nudge_boundaries is set, in which
/// case they are moved inward by 1/(2n) and counted.
class Dataset {
 public:
  Dataset(std::vector<double> raw, double lo, double hi, std::string name,
          bool nudge_boundaries = false);

  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double lo() const { return lo_; }
  double hi() const { return hi_; }
  const std::string& name() const { return name_; }
  int nudged() const { return nudged_; }
  /// Additive constant n log(hi - lo) relating unit-interval and raw-scale
  /// log-likelihoods.
  double log_jacobian() const;

 private:
  std::vector<double> values_;
  double lo_;
  double hi_;
  std::string name_;
  int nudged_ = 0;
};

enum class Family { beta, qbeta, sqbeta, cbeta, scbeta };

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);
/// Number of free parameters: 2 for beta, 3 for the quadratic families,
/// 4 for the cubic ones.
int family_param_count(Family f);

struct FitConfig {
  double f_tol = 1e-9;   // spread of -loglik over the simplex
  double x_tol = 1e-7;   // spread of parameters over the simplex
  int max_iterations = 4000;  // per simplex run
};

struct FitResult {
  Family family = Family::beta;
  BetaCore core;
  ShapeParams shape;  // gamma meaningful for q/sq, gamma+delta for c/sc
  double neg_loglik = 0.0;
  bool converged = false;
  int iterations = 0;
  std::vector<std::pair<std::string, double>> stage_trace;
};

/// -sum_i log f(x_i) through the log-density path; +infinity when any
/// observation has zero density. Terms are accumulated with compensated
/// summation so the value is reproducible and insensitive to ordering noise.
double neg_loglik(Family family, const BetaCore& core,
                  const ShapeParams& shape, const Dataset& data);

/// Staged maximum likelihood: beta first, then the quadratic family from
/// (alpha-hat, beta-hat, gamma = 1/2), then the cubic family from the
/// quadratic optimum with delta = 1/3. Each stage is a Nelder-Mead search
/// in (log alpha, log beta, logit gamma, logit delta) restricted to the
/// stage's free parameters, restarted once from the perturbed optimum.
/// Non-convergence triggers a coordinate-wise fallback (float gamma, then
/// delta, then everything) before giving up; the best point found is
/// returned with converged = false if all of that fails.
FitResult fit_mle(Family family, const Dataset& data,
                  const FitConfig& config = {});

/// Solve the nested mean identity
///   (alpha/eta) { a + ((alpha+1)/(eta+1)) [ b + ((alpha+2)/(eta+2)) c ] }
///     = mu
/// for alpha in (0, eta); Newton from alpha = eta/2 after a bracket check.
/// Throws std::domain_error when mu is not attainable.
double alpha_from_mean(double mu, double eta, const CubicCoeffs& coeffs);

/// Invert the mode for the cubic families. For scbeta this is
/// alpha = 1 + p_m (eta - 2); for cbeta the stationary equation is linear
/// in alpha once beta = eta - alpha is substituted. family must be cbeta
/// or scbeta.
double alpha_from_mode(Family family, double x_m, double eta,
                       const CubicCoeffs& coeffs);

/// Mean-regression parameterization (mu, eta, gamma, delta).
struct MeanRegressionParams {
  double mu;
  double eta;
  double gamma;
  double delta;
};

/// Modal-regression parameterization (x_m, eta, gamma, delta).
struct ModalRegressionParams {
  double x_m;
  double eta;
  double gamma;
  double delta;
};

BetaCore resolve_core(const MeanRegressionParams& rp);
BetaCore resolve_core(Family family, const ModalRegressionParams& rp);

struct LrResult {
  double statistic;
  int df;
  double p_value;
};

/// Likelihood-ratio test of a nested fit against its parent:
/// statistic 2(l_parent - l_nested), upper chi-squared tail with df
/// degrees of freedom. A statistic below -1e-6 signals optimizer failure
/// and throws ConvergenceError.
LrResult lr_test(const FitResult& nested, const FitResult& parent, int df);

}  // namespace cubeta
