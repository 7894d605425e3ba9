#include "cubeta/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cubeta {

namespace {

// Width of the admissible a-interval for c >= 1 is branch_width(c);
// the interval is centred on 1 + c/2.
double branch_width(double c) { return std::sqrt(3.0 * c * (4.0 - c)); }

constexpr double kAffineTol = 1e-12;

}  // namespace

CubicCoeffs coeffs_from_shape(const ShapeParams& s) {
  require_valid(s);
  double c = 6.0 * s.delta - 2.0;
  // 6 * (1/3) - 2 leaves one ulp of dust; pin the quadratic subfamily to
  // an exact zero so it takes the closed-form inversion path.
  if (std::abs(c) < 1e-15) c = 0.0;
  double a;
  if (s.delta < 0.5) {
    a = (c + 2.0) * s.gamma;
  } else {
    a = (s.gamma - 0.5) * branch_width(c) + 1.0 + 0.5 * c;
  }
  return {a, 1.0 - a - c, c};
}

ShapeParams shape_from_coeffs(const CubicCoeffs& k) {
  require_admissible(k);
  const double delta = (k.c + 2.0) / 6.0;
  double gamma;
  if (k.c < 1.0) {
    const double span = k.c + 2.0;
    gamma = span > 0.0 ? k.a / span : 0.5;
  } else {
    const double span = branch_width(k.c);
    gamma = span > 0.0 ? (k.a - (1.0 + 0.5 * k.c)) / span + 0.5 : 0.5;
  }
  return {gamma, delta};
}

ShapeParams flip(const ShapeParams& s) { return {1.0 - s.gamma, s.delta}; }

bool validate_monotone(const CubicCoeffs& k) {
  if (std::abs(k.a + k.b + k.c - 1.0) > kAffineTol) return false;
  if (k.c <= 1.0) {
    return k.c >= -2.0 && k.a > 0.0 && k.a < k.c + 2.0;
  }
  if (k.c >= 4.0) return false;
  return std::abs(k.a - (1.0 + 0.5 * k.c)) < 0.5 * branch_width(k.c);
}

bool admissible(const CubicCoeffs& k) {
  if (std::abs(k.a + k.b + k.c - 1.0) > kAffineTol) return false;
  // Small slack so that shapes on the closed unit square map to
  // admissible coefficients despite rounding in coeffs_from_shape.
  const double eps = 1e-12;
  if (k.c < -2.0 - eps || k.c > 4.0 + eps) return false;
  if (k.c <= 1.0) {
    return k.a >= -eps && k.a <= k.c + 2.0 + eps;
  }
  return std::abs(k.a - (1.0 + 0.5 * k.c)) <= 0.5 * branch_width(k.c) + eps;
}

void require_valid(const ShapeParams& s) {
  if (!(s.gamma >= 0.0 && s.gamma <= 1.0 && s.delta >= 0.0 && s.delta <= 1.0)) {
    throw std::domain_error("shape parameters must lie in [0,1]^2: gamma=" +
                            std::to_string(s.gamma) +
                            " delta=" + std::to_string(s.delta));
  }
}

void require_admissible(const CubicCoeffs& k) {
  if (!admissible(k)) {
    throw std::invalid_argument(
        "coefficients do not define a monotone map on [0,1]: a=" +
        std::to_string(k.a) + " b=" + std::to_string(k.b) +
        " c=" + std::to_string(k.c));
  }
}

void require_positive(const BetaCore& core) {
  if (!(core.alpha > 0.0) || !(core.beta > 0.0)) {
    throw std::domain_error("beta shape parameters must be positive");
  }
}

}  // namespace cubeta
