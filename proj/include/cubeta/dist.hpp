#pragma once

#include <optional>

#include "cubeta/numerics.hpp"
#include "cubeta/params.hpp"

namespace cubeta {

enum class ModeKind { mode, antimode, boundary };

/// Location of the density's stationary point, when one exists in (0,1).
/// kind == boundary means the density has no interior stationary point
/// (monotone, flat, or endpoint spikes only); x and p are then empty.
struct ModeResult {
  std::optional<double> x;
  std::optional<double> p;
  ModeKind kind = ModeKind::boundary;
};

/// Beta(alpha, beta) on [0,1]. The identity member of every family below.
class BetaDist {
 public:
  BetaDist(double alpha, double beta);

  const BetaCore& core() const { return core_; }
  double alpha() const { return core_.alpha; }
  double beta() const { return core_.beta; }

  double log_pdf(double x) const;
  double pdf(double x) const;
  double cdf(double x) const;
  double quantile(double q) const;
  double raw_moment(int n) const;
  double mean() const;
  double variance() const;
  ModeResult mode() const;

 private:
  BetaCore core_;
  double log_beta_;
};

/// Quadratic transform of a beta variate:
/// X = 2 gamma P + (1 - 2 gamma) P^2, P ~ Beta(alpha, beta).
/// Equals the cubic family with delta = 1/3; gamma = 1/2 recovers the
/// beta distribution.
class QBetaDist {
 public:
  QBetaDist(double alpha, double beta, double gamma);

  const BetaCore& core() const { return core_; }
  double gamma() const { return gamma_; }
  const CubicCoeffs& coeffs() const { return coeffs_; }

  double log_pdf(double x) const;
  double pdf(double x) const;
  double cdf(double x) const;
  double quantile(double q) const;
  double raw_moment(int n) const;
  double mean() const;
  double variance() const;
  ModeResult mode() const;

 private:
  BetaCore core_;
  double gamma_;
  CubicCoeffs coeffs_;
  double log_beta_;
};

/// Cubic transform of a beta variate: X = a P + b P^2 + c P^3 with
/// coefficients derived from (gamma, delta). Density
///   f(x) = p^(alpha-1) (1-p)^(beta-1) / (B(alpha,beta) J(p)),  p = p(x).
/// Shapes on the boundary of the unit square are admitted; they give
/// isolated points where J vanishes and the density diverges.
class CBetaDist {
 public:
  CBetaDist(double alpha, double beta, const ShapeParams& shape);

  const BetaCore& core() const { return core_; }
  const ShapeParams& shape() const { return shape_; }
  const CubicCoeffs& coeffs() const { return coeffs_; }

  double log_pdf(double x) const;
  double pdf(double x) const;
  double cdf(double x) const;
  double quantile(double q) const;
  double raw_moment(int n) const;
  double mean() const;
  double variance() const;
  ModeResult mode() const;

 private:
  BetaCore core_;
  ShapeParams shape_;
  CubicCoeffs coeffs_;
  double log_beta_;
};

/// Jacobian-less quadratic family: density proportional to the beta
/// density evaluated at p(x). Same modal structure as the parent beta.
class SQBetaDist {
 public:
  SQBetaDist(double alpha, double beta, double gamma);

  const BetaCore& core() const { return core_; }
  double gamma() const { return gamma_; }
  const CubicCoeffs& coeffs() const { return coeffs_; }
  /// Normalization constant C with pdf = C f_p(p(x)).
  double norm_constant() const { return norm_c_; }

  double log_pdf(double x) const;
  double pdf(double x) const;
  double cdf(double x) const;
  double cdf_three_term(double x) const;
  double quantile(double q) const;
  double raw_moment(int n) const;
  double mean() const;
  double variance() const;
  ModeResult mode() const;

 private:
  BetaCore core_;
  double gamma_;
  CubicCoeffs coeffs_;
  double norm_c_;
  double log_beta_;
};

/// Jacobian-less cubic family:
///   g(x) = C p^(alpha-1) (1-p)^(beta-1) / B(alpha,beta),  p = p(x),
///   1/C  = a + 2b alpha/eta + 3c alpha(alpha+1)/(eta(eta+1)).
class SCBetaDist {
 public:
  SCBetaDist(double alpha, double beta, const ShapeParams& shape);

  const BetaCore& core() const { return core_; }
  const ShapeParams& shape() const { return shape_; }
  const CubicCoeffs& coeffs() const { return coeffs_; }
  double norm_constant() const { return norm_c_; }

  double log_pdf(double x) const;
  double pdf(double x) const;
  /// Distribution function in the form needing a single incomplete beta
  /// evaluation.
  double cdf(double x) const;
  /// Same value from three incomplete beta evaluations; kept as a
  /// cross-check oracle.
  double cdf_three_term(double x) const;
  double quantile(double q) const;
  double raw_moment(int n) const;
  double mean() const;
  double variance() const;
  ModeResult mode() const;

 private:
  BetaCore core_;
  ShapeParams shape_;
  CubicCoeffs coeffs_;
  double norm_c_;
  double log_beta_;
};

/// Two-parameter special case alpha = beta = 1: pdf 1/J(p(x)),
/// distribution function simply p(x).
class CBeta11Dist {
 public:
  explicit CBeta11Dist(const ShapeParams& shape);

  const ShapeParams& shape() const { return shape_; }
  const CubicCoeffs& coeffs() const { return coeffs_; }

  double log_pdf(double x) const;
  double pdf(double x) const;
  double cdf(double x) const;
  double quantile(double q) const;
  double raw_moment(int n) const;
  double mean() const;
  double variance() const;
  /// Stationary point -b/3c; a mode when c > 0, an antimode when c < 0.
  ModeResult mode() const;

 private:
  ShapeParams shape_;
  CubicCoeffs coeffs_;
};

/// General quadratic distribution with pdf f(p) = a + 2bp + 3cp^2 and
/// distribution function F(p) = ap + bp^2 + cp^3. Generalizes the
/// uniform and U-quadratic distributions.
class GenQuadDist {
 public:
  explicit GenQuadDist(const CubicCoeffs& coeffs);
  explicit GenQuadDist(const ShapeParams& shape);

  const CubicCoeffs& coeffs() const { return coeffs_; }

  double log_pdf(double x) const;
  double pdf(double x) const;
  double cdf(double x) const;
  double quantile(double q) const;
  double raw_moment(int n) const;
  double mean() const;
  double variance() const;
  ModeResult mode() const;
  /// Moment generating function E[exp(tP)]. The closed form cancels
  /// catastrophically near t = 0, so |t| < 1e-3 is evaluated by Taylor
  /// series through t^4.
  double mgf(double t) const;

 private:
  CubicCoeffs coeffs_;
};

}  // namespace cubeta
