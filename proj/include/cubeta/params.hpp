#pragma once

namespace cubeta {

/// Label-symmetric shape parameters of the cubic transform, each in [0,1].
/// delta = 1/3 selects the quadratic subfamily (c = 0); gamma = 1/2 together
/// with delta = 1/3 is the identity transform. Under the label flip
/// x -> 1-x, delta is invariant and gamma -> 1-gamma.
struct ShapeParams {
  double gamma = 0.5;
  double delta = 1.0 / 3.0;
};

/// Coefficients of the transform x(p) = a p + b p^2 + c p^3 on [0,1].
/// Valid sets satisfy a + b + c = 1 (so x(1) = 1) and have positive
/// derivative J(p) = a + 2 b p + 3 c p^2 on [0,1].
struct CubicCoeffs {
  double a = 1.0;
  double b = 0.0;
  double c = 0.0;

  double eval(double p) const { return ((c * p + b) * p + a) * p; }
  double deriv(double p) const { return (3.0 * c * p + 2.0 * b) * p + a; }
  /// Derivative of J itself, 2b + 6cp.
  double deriv2(double p) const { return 6.0 * c * p + 2.0 * b; }
};

/// Parameters of the parent beta distribution, alpha, beta > 0.
struct BetaCore {
  double alpha = 1.0;
  double beta = 1.0;
  double eta() const { return alpha + beta; }
};

/// Map (gamma, delta) to transform coefficients:
/// c = 6 delta - 2; a = (c+2) gamma below delta = 1/2, otherwise
/// a = (gamma - 1/2) sqrt(3c(4-c)) + 1 + c/2; b = 1 - a - c.
/// The two branches agree at delta = 1/2 (c = 1).
CubicCoeffs coeffs_from_shape(const ShapeParams& s);

/// Exact inverse of coeffs_from_shape. gamma is unidentifiable at the
/// collapsed corners (c = 4 forces a = 3, c = -2 forces a = 0); 1/2 is
/// returned there.
ShapeParams shape_from_coeffs(const CubicCoeffs& k);

/// The label transform x -> 1-x at the shape level: (gamma, delta) ->
/// (1-gamma, delta). At the coefficient level a' = 2 + c - a, c' = c.
ShapeParams flip(const ShapeParams& s);

/// True iff J(p) > 0 strictly on all of [0,1]. Region test:
///   -2 <= c <= 4; for c <= 1, a in (0, c+2);
///   for c >= 1, |a - (1 + c/2)| < sqrt(3c(4-c))/2.
bool validate_monotone(const CubicCoeffs& k);

/// Weak form of the region test: J >= 0 with zeros only at isolated
/// points (shape-square boundary, e.g. delta = 1 or gamma in {0,1}).
/// Density evaluation admits these degenerate sets; fitting does not.
bool admissible(const CubicCoeffs& k);

void require_valid(const ShapeParams& s);       // throws std::domain_error
void require_admissible(const CubicCoeffs& k);  // throws std::invalid_argument
void require_positive(const BetaCore& core);    // throws std::domain_error

}  // namespace cubeta
