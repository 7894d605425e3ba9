#include "cubeta/numerics.hpp"

#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace cubeta {

QuadInversion solve_monotone_poly(const CubicCoeffs& coeffs, double x,
                                  const RootSolveConfig& cfg) {
  require_admissible(coeffs);
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error("solve_monotone_poly: x outside [0,1]");
  }
  if (coeffs.c == 0.0) {
    if (coeffs.b == 0.0) {
      // linear: p = x / a
      const double p = coeffs.a > 0.0 ? std::min(x / coeffs.a, 1.0) : 0.0;
      return {p, coeffs.a, std::nullopt};
    }
    // quadratic: with gamma = a/2, p = x / (gamma + Delta(x)) and
    // J = 2 Delta(x), Delta(x) = sqrt(gamma^2 + b x).
    const double gamma = 0.5 * coeffs.a;
    const double delta =
        std::sqrt(std::max(gamma * gamma + coeffs.b * x, 0.0));
    const double denom = gamma + delta;
    const double p =
        denom > 0.0 ? std::min(std::max(x / denom, 0.0), 1.0) : 0.0;
    return {p, 2.0 * delta, delta};
  }
  double p = clamped_newton(
      [&coeffs](double q) {
        return std::pair<double, double>{coeffs.eval(q), coeffs.deriv(q)};
      },
      x, x, cfg);
  // A couple of full-precision polish steps: the residual contract alone
  // leaves p-accuracy proportional to 1/J, which matters when J is small.
  double resid = coeffs.eval(p) - x;
  for (int i = 0; i < 3 && resid != 0.0; ++i) {
    const double j = coeffs.deriv(p);
    if (!(j > 0.0)) break;
    const double next = std::min(std::max(p - resid / j, 0.0), 1.0);
    const double next_resid = coeffs.eval(next) - x;
    if (std::abs(next_resid) >= std::abs(resid)) break;
    p = next;
    resid = next_resid;
  }
  return {p, coeffs.deriv(p), std::nullopt};
}

double log_beta(double alpha, double beta) {
  return std::lgamma(alpha) + std::lgamma(beta) - std::lgamma(alpha + beta);
}

namespace {

// Continued fraction for the incomplete beta function, evaluated with the
// modified Lentz algorithm. Converges well for x < (alpha+1)/(alpha+beta+2).
double inc_beta_cf(double alpha, double beta, double x) {
  constexpr double tiny = 1e-300;
  constexpr double stop = 1e-16;
  double c = 1.0;
  double d = 1.0 - (alpha + beta) * x / (alpha + 1.0);
  if (std::abs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 400; ++m) {
    const double m2 = 2.0 * m;
    double num = m * (beta - m) * x / ((alpha + m2 - 1.0) * (alpha + m2));
    d = 1.0 + num * d;
    if (std::abs(d) < tiny) d = tiny;
    c = 1.0 + num / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;
    num = -(alpha + m) * (alpha + beta + m) * x /
          ((alpha + m2) * (alpha + m2 + 1.0));
    d = 1.0 + num * d;
    if (std::abs(d) < tiny) d = tiny;
    c = 1.0 + num / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < stop) return h;
  }
  throw NonConvergence("reg_inc_beta: continued fraction did not converge");
}

}  // namespace

double reg_inc_beta(double alpha, double beta, double x) {
  if (!(alpha > 0.0) || !(beta > 0.0)) {
    throw std::domain_error("reg_inc_beta: shape parameters must be positive");
  }
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error("reg_inc_beta: x outside [0,1]");
  }
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double front = std::exp(alpha * std::log(x) + beta * std::log1p(-x) -
                                log_beta(alpha, beta));
  if (x < (alpha + 1.0) / (alpha + beta + 2.0)) {
    return front * inc_beta_cf(alpha, beta, x) / alpha;
  }
  return 1.0 - front * inc_beta_cf(beta, alpha, 1.0 - x) / beta;
}

double inc_beta_step_down(double alpha, double beta, double x, double i_val) {
  if (!(alpha > 0.0) || !(beta > 0.0)) {
    throw std::domain_error(
        "inc_beta_step_down: shape parameters must be positive");
  }
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error("inc_beta_step_down: x outside [0,1]");
  }
  if (x == 0.0 || x == 1.0) return i_val;
  const double term = std::exp(alpha * std::log(x) + beta * std::log1p(-x) -
                               log_beta(alpha, beta)) /
                      alpha;
  return i_val - term;
}

namespace {

// Regularized upper incomplete gamma Q(s, x): series for x < s+1,
// continued fraction otherwise.
double reg_gamma_q(double s, double x) {
  if (x < 0.0 || s <= 0.0) {
    throw std::domain_error("reg_gamma_q: invalid arguments");
  }
  if (x == 0.0) return 1.0;
  const double lgs = std::lgamma(s);
  if (x < s + 1.0) {
    double ap = s;
    double sum = 1.0 / s;
    double del = sum;
    for (int n = 1; n <= 500; ++n) {
      ap += 1.0;
      del *= x / ap;
      sum += del;
      if (std::abs(del) < std::abs(sum) * 1e-16) {
        return 1.0 - sum * std::exp(-x + s * std::log(x) - lgs);
      }
    }
    throw NonConvergence("reg_gamma_q: series did not converge");
  }
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - s;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    const double an = -i * (i - s);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  return std::exp(-x + s * std::log(x) - lgs) * h;
}

}  // namespace

double chi_squared_sf(double x, int df) {
  if (df < 1) throw std::domain_error("chi_squared_sf: df must be >= 1");
  if (x <= 0.0) return 1.0;
  return reg_gamma_q(0.5 * df, 0.5 * x);
}

namespace {

// Gauss-Kronrod 7-15 nodes and weights on [-1,1] (symmetric half).
constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
constexpr double kWgk[8] = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278};
constexpr double kWg[4] = {0.1294849661688697, 0.2797053914892767,
                           0.3818300505051189, 0.4179591836734694};

struct Panel {
  double a, b, integral, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double h = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  // Nodes are mathematically interior, but a tiny panel against a
  // singular endpoint can round a node onto the endpoint itself; keep
  // evaluations at least one ulp inside.
  const double lo = std::nextafter(a, b);
  const double hi = std::nextafter(b, a);
  const auto node = [&](double x) { return std::min(std::max(x, lo), hi); };
  double resk = 0.0;
  double resg = 0.0;
  for (int j = 0; j < 8; ++j) {
    if (j == 7) {
      const double fc = f(mid);
      resk += kWgk[j] * fc;
      resg += kWg[3] * fc;
    } else {
      const double dx = h * kXgk[j];
      const double fv = f(node(mid - dx)) + f(node(mid + dx));
      resk += kWgk[j] * fv;
      if (j % 2 == 1) resg += kWg[j / 2] * fv;
    }
  }
  const double integral = resk * h;
  // Floor the estimate at the roundoff level so a collapsed panel (all
  // clamped nodes equal) cannot report zero error and fake convergence
  // below machine accuracy.
  const double error =
      std::max(std::abs((resk - resg) * h),
               50.0 * std::numeric_limits<double>::epsilon() *
                   std::abs(integral));
  return {a, b, integral, error};
}

}  // namespace

double quadrature(const std::function<double(double)>& f, double abs_tol,
                  double a, double b) {
  if (!(abs_tol > 0.0)) {
    throw std::domain_error("quadrature: tolerance must be positive");
  }
  if (a == b) return 0.0;
  constexpr int max_panels = 100000;
  std::priority_queue<Panel> queue;
  Panel first = gk15(f, a, b);
  double total = first.integral;
  double err = first.error;
  queue.push(first);
  int panels = 1;
  while (err > abs_tol) {
    if (panels >= max_panels || queue.empty()) {
      throw ToleranceNotMet("quadrature: refinement budget exhausted, error " +
                            std::to_string(err));
    }
    const Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // interval at machine resolution; accept its estimate as-is
      continue;
    }
    const Panel left = gk15(f, worst.a, mid);
    const Panel right = gk15(f, mid, worst.b);
    total += left.integral + right.integral - worst.integral;
    err += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++panels;
    if (!std::isfinite(total)) {
      throw ToleranceNotMet("quadrature: integrand produced non-finite values");
    }
  }
  return total;
}

}  // namespace cubeta
