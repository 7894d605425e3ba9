#include "cubeta/dist.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace cubeta {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_unit(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error(std::string(what) + ": argument outside [0,1]");
  }
}

// (alpha-1) log p + (beta-1) log(1-p) - log B(alpha, beta). The guards keep
// 0 * log(0) out of the sum when a shape parameter equals one.
double beta_log_kernel(const BetaCore& core, double lbeta, double p) {
  double lp = -lbeta;
  if (core.alpha != 1.0) lp += (core.alpha - 1.0) * std::log(p);
  if (core.beta != 1.0) lp += (core.beta - 1.0) * std::log1p(-p);
  return lp;
}

// Resolves the log-density limit at p in {0,1} when both the beta kernel
// and the Jacobian term diverge (J vanishing at an endpoint). The density
// behaves like p^(alpha-1-m) near 0 (or (1-p)^(beta-1-m) near 1), where m
// is the order of the Jacobian zero.
double endpoint_log_pdf(const BetaCore& core, const CubicCoeffs& k,
                        double lbeta, double p) {
  int order;
  double lead;
  double expo;
  if (p == 0.0) {
    if (k.a > 0.0) {
      order = 0;
      lead = k.a;
    } else if (k.b != 0.0) {
      order = 1;
      lead = 2.0 * k.b;
    } else {
      order = 2;
      lead = 3.0 * k.c;
    }
    expo = (core.alpha - 1.0) - order;
  } else {
    const double j1 = k.deriv(1.0);
    const double dj1 = k.deriv2(1.0);
    if (j1 > 0.0) {
      order = 0;
      lead = j1;
    } else if (dj1 != 0.0) {
      order = 1;
      lead = -dj1;
    } else {
      order = 2;
      lead = 3.0 * k.c;
    }
    expo = (core.beta - 1.0) - order;
  }
  if (expo > 0.0) return -kInf;
  if (expo < 0.0) return kInf;
  return -lbeta - std::log(lead);
}

double transform_log_pdf(const BetaCore& core, const CubicCoeffs& k,
                         double lbeta, double x) {
  check_unit(x, "pdf");
  const QuadInversion inv = solve_monotone_poly(k, x);
  double lp = beta_log_kernel(core, lbeta, inv.p);
  lp -= std::log(inv.jacobian);
  if (std::isnan(lp)) return endpoint_log_pdf(core, k, lbeta, inv.p);
  return lp;
}

double transform_cdf(const BetaCore& core, const CubicCoeffs& k, double x) {
  check_unit(x, "cdf");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  return reg_inc_beta(core.alpha, core.beta, solve_monotone_poly(k, x).p);
}

double shifted_log_pdf(const BetaCore& core, const CubicCoeffs& k,
                       double norm_c, double lbeta, double x) {
  check_unit(x, "pdf");
  const double p = solve_monotone_poly(k, x).p;
  return std::log(norm_c) + beta_log_kernel(core, lbeta, p);
}

// Distribution function of the Jacobian-less families using a single
// incomplete beta evaluation:
//   G(x) = I(alpha,beta;p) - C p^alpha (1-p)^beta / B(alpha,beta)
//          * { 2b/eta + 3c ((alpha+1)/(eta(eta+1)) + p/(eta+1)) }.
double shifted_cdf(const BetaCore& core, const CubicCoeffs& k, double norm_c,
                   double lbeta, double x) {
  check_unit(x, "cdf");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double p = solve_monotone_poly(k, x).p;
  if (p <= 0.0) return 0.0;
  if (p >= 1.0) return 1.0;
  const double alpha = core.alpha;
  const double eta = core.eta();
  const double i_ab = reg_inc_beta(alpha, core.beta, p);
  const double kernel =
      std::exp(alpha * std::log(p) + core.beta * std::log1p(-p) - lbeta);
  const double corr =
      2.0 * k.b / eta +
      3.0 * k.c * ((alpha + 1.0) / (eta * (eta + 1.0)) + p / (eta + 1.0));
  const double g = i_ab - norm_c * kernel * corr;
  return std::min(std::max(g, 0.0), 1.0);
}

double shifted_cdf_three_term(const BetaCore& core, const CubicCoeffs& k,
                              double norm_c, double x) {
  check_unit(x, "cdf");
  const double p = solve_monotone_poly(k, x).p;
  const double alpha = core.alpha;
  const double beta = core.beta;
  const double eta = core.eta();
  return norm_c *
         (k.a * reg_inc_beta(alpha, beta, p) +
          2.0 * k.b * (alpha / eta) * reg_inc_beta(alpha + 1.0, beta, p) +
          3.0 * k.c * (alpha * (alpha + 1.0) / (eta * (eta + 1.0))) *
              reg_inc_beta(alpha + 2.0, beta, p));
}

template <class CdfPdf>
double generic_quantile(CdfPdf&& f, double q) {
  if (!(q >= 0.0 && q <= 1.0)) {
    throw std::domain_error("quantile: level outside [0,1]");
  }
  if (q == 0.0) return 0.0;
  if (q == 1.0) return 1.0;
  RootSolveConfig cfg;
  cfg.tolerance = 1e-11;
  cfg.max_iterations = 200;
  return clamped_newton(f, q, q, cfg);
}

// ---- moments -------------------------------------------------------------

std::vector<double> poly_mul(const std::vector<double>& u,
                             const std::vector<double>& v) {
  std::vector<double> w(u.size() + v.size() - 1, 0.0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) w[i + j] += u[i] * v[j];
  }
  return w;
}

std::vector<double> poly_pow(const std::vector<double>& u, int n) {
  std::vector<double> w{1.0};
  for (int i = 0; i < n; ++i) w = poly_mul(w, u);
  return w;
}

// E[P^m] = (alpha)_m / (eta)_m for P ~ Beta(alpha, beta).
double pochhammer_ratio(const BetaCore& core, int m) {
  double r = 1.0;
  for (int i = 0; i < m; ++i) r *= (core.alpha + i) / (core.eta() + i);
  return r;
}

double expect_polynomial(const BetaCore& core,
                         const std::vector<double>& weights) {
  double sum = 0.0;
  for (std::size_t m = 0; m < weights.size(); ++m) {
    if (weights[m] != 0.0) {
      sum += weights[m] * pochhammer_ratio(core, static_cast<int>(m));
    }
  }
  return sum;
}

void check_moment_order(int n) {
  if (n < 1) throw std::invalid_argument("raw_moment: order must be >= 1");
}

// E[(aP + bP^2 + cP^3)^n], optionally with the extra factor a + 2bP + 3cP^2
// of the Jacobian-less families.
double transform_raw_moment(const BetaCore& core, const CubicCoeffs& k, int n,
                            bool with_jacobian_factor) {
  check_moment_order(n);
  std::vector<double> w = poly_pow({0.0, k.a, k.b, k.c}, n);
  if (with_jacobian_factor) {
    w = poly_mul(w, {k.a, 2.0 * k.b, 3.0 * k.c});
  }
  return expect_polynomial(core, w);
}

// ---- modes ---------------------------------------------------------------

// Coefficients (constant first) of the cleared-denominator stationary
// equation of the transformed density,
//   (alpha-1)(1-p)J(p) - (beta-1) p J(p) - J'(p) p (1-p) = 0,
// a cubic whose sign on (0,1) matches the sign of d log f / dp.
std::vector<double> stationary_poly(const BetaCore& core,
                                    const CubicCoeffs& k) {
  const double am1 = core.alpha - 1.0;
  const double bm1 = core.beta - 1.0;
  return {
      am1 * k.a,
      am1 * (2.0 * k.b - k.a) - bm1 * k.a - 2.0 * k.b,
      am1 * (3.0 * k.c - 2.0 * k.b) - 2.0 * bm1 * k.b - 6.0 * k.c + 2.0 * k.b,
      -3.0 * k.c * (core.eta() - 4.0),
  };
}

double eval_poly(const std::vector<double>& c, double p) {
  double v = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
  return v;
}

struct Crossing {
  double p;
  bool descending;  // sign goes + -> - : a local maximum of the density
};

// Sign-changing roots of a polynomial (degree <= 3) in the open interval
// (0,1), found by splitting at the derivative's critical points and
// bisecting each monotone piece. Tangential (even-multiplicity) roots are
// not crossings and are ignored.
std::vector<Crossing> crossings_in_unit(const std::vector<double>& poly) {
  double scale = 0.0;
  for (double c : poly) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) return {};

  std::vector<double> breaks{0.0, 1.0};
  // critical points of the cubic: roots of 3 k3 p^2 + 2 k2 p + k1
  const double qa = 3.0 * poly[3];
  const double qb = 2.0 * poly[2];
  const double qc = poly[1];
  if (std::abs(qa) > 1e-14 * scale) {
    const double disc = qb * qb - 4.0 * qa * qc;
    if (disc >= 0.0) {
      const double s = std::sqrt(disc);
      // stable quadratic roots
      const double q = -0.5 * (qb + (qb >= 0.0 ? s : -s));
      for (double r : {q / qa, qc != 0.0 ? qc / q : 0.0}) {
        if (r > 0.0 && r < 1.0) breaks.push_back(r);
      }
    }
  } else if (std::abs(qb) > 1e-14 * scale) {
    const double r = -qc / qb;
    if (r > 0.0 && r < 1.0) breaks.push_back(r);
  }
  std::sort(breaks.begin(), breaks.end());

  std::vector<Crossing> out;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    double lo = breaks[i];
    double hi = breaks[i + 1];
    double flo = eval_poly(poly, lo);
    double fhi = eval_poly(poly, hi);
    if (flo == 0.0 || fhi == 0.0) {
      // nudge off an exact zero at a breakpoint so the piece has a sign
      const double h = 1e-13 * (hi - lo);
      if (flo == 0.0) {
        lo += h;
        flo = eval_poly(poly, lo);
      }
      if (fhi == 0.0) {
        hi -= h;
        fhi = eval_poly(poly, hi);
      }
    }
    if (!(flo * fhi < 0.0)) continue;
    for (int it = 0; it < 100 && hi - lo > 1e-15; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double fm = eval_poly(poly, mid);
      if (fm == 0.0) {
        lo = hi = mid;
      } else if ((fm > 0.0) == (flo > 0.0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
        fhi = fm;
      }
    }
    const double root = 0.5 * (lo + hi);
    if (root > 0.0 && root < 1.0) out.push_back({root, flo > 0.0});
  }
  return out;
}

ModeResult transform_mode(const BetaCore& core, const CubicCoeffs& k,
                          double lbeta) {
  const std::vector<Crossing> roots =
      crossings_in_unit(stationary_poly(core, k));
  ModeResult best;
  double best_lp = -kInf;
  for (const Crossing& r : roots) {
    if (!r.descending) continue;
    const double lp =
        beta_log_kernel(core, lbeta, r.p) - std::log(k.deriv(r.p));
    if (lp > best_lp) {
      best_lp = lp;
      best = {k.eval(r.p), r.p, ModeKind::mode};
    }
  }
  return best;
}

ModeResult shifted_mode(const BetaCore& core, const CubicCoeffs& k) {
  if (core.alpha > 1.0 && core.beta > 1.0) {
    const double p = (core.alpha - 1.0) / (core.eta() - 2.0);
    return {k.eval(p), p, ModeKind::mode};
  }
  return {};
}

ModeResult jacobian_stationary_mode(const CubicCoeffs& k,
                                    bool positive_c_is_mode) {
  // stationary point of J(p) itself at -b/3c
  if (k.c != 0.0) {
    const double p = -k.b / (3.0 * k.c);
    if (p > 0.0 && p < 1.0) {
      const bool is_mode = (k.c > 0.0) == positive_c_is_mode;
      return {k.eval(p), p, is_mode ? ModeKind::mode : ModeKind::antimode};
    }
  }
  return {};
}



}  // namespace

// ---- BetaDist --------------------------------------------------------------

BetaDist::BetaDist(double alpha, double beta) : core_{alpha, beta} {
  require_positive(core_);
  log_beta_ = log_beta(alpha, beta);
}

double BetaDist::log_pdf(double x) const {
  check_unit(x, "pdf");
  return beta_log_kernel(core_, log_beta_, x);
}

double BetaDist::pdf(double x) const { return std::exp(log_pdf(x)); }

double BetaDist::cdf(double x) const {
  check_unit(x, "cdf");
  return reg_inc_beta(core_.alpha, core_.beta, x);
}

double BetaDist::quantile(double q) const {
  return generic_quantile(
      [this](double x) {
        return std::pair<double, double>{cdf(x), pdf(x)};
      },
      q);
}

double BetaDist::raw_moment(int n) const {
  check_moment_order(n);
  return pochhammer_ratio(core_, n);
}

double BetaDist::mean() const { return core_.alpha / core_.eta(); }

double BetaDist::variance() const {
  const double eta = core_.eta();
  return core_.alpha * core_.beta / (eta * eta * (eta + 1.0));
}

ModeResult BetaDist::mode() const {
  if (core_.alpha > 1.0 && core_.beta > 1.0) {
    const double p = (core_.alpha - 1.0) / (core_.eta() - 2.0);
    return {p, p, ModeKind::mode};
  }
  return {};
}

// ---- QBetaDist -------------------------------------------------------------

QBetaDist::QBetaDist(double alpha, double beta, double gamma)
    : core_{alpha, beta}, gamma_(gamma) {
  require_positive(core_);
  coeffs_ = coeffs_from_shape({gamma, 1.0 / 3.0});
  log_beta_ = log_beta(alpha, beta);
}

double QBetaDist::log_pdf(double x) const {
  return transform_log_pdf(core_, coeffs_, log_beta_, x);
}

double QBetaDist::pdf(double x) const { return std::exp(log_pdf(x)); }

double QBetaDist::cdf(double x) const {
  return transform_cdf(core_, coeffs_, x);
}

double QBetaDist::quantile(double q) const {
  return generic_quantile(
      [this](double x) {
        return std::pair<double, double>{cdf(x), pdf(x)};
      },
      q);
}

double QBetaDist::raw_moment(int n) const {
  return transform_raw_moment(core_, coeffs_, n, false);
}

double QBetaDist::mean() const {
  const double eta = core_.eta();
  return core_.alpha * (2.0 * gamma_ * core_.beta + core_.alpha + 1.0) /
         (eta * (eta + 1.0));
}

double QBetaDist::variance() const {
  const double g2 = 2.0 * gamma_;
  const double h = 1.0 - g2;
  const double m = mean();
  const double v = g2 * g2 * pochhammer_ratio(core_, 2) +
                   2.0 * g2 * h * pochhammer_ratio(core_, 3) +
                   h * h * pochhammer_ratio(core_, 4) - m * m;
  return std::max(v, 0.0);
}

ModeResult QBetaDist::mode() const {
  return transform_mode(core_, coeffs_, log_beta_);
}

// ---- CBetaDist -------------------------------------------------------------

CBetaDist::CBetaDist(double alpha, double beta, const ShapeParams& shape)
    : core_{alpha, beta}, shape_(shape) {
  require_positive(core_);
  coeffs_ = coeffs_from_shape(shape);
  log_beta_ = log_beta(alpha, beta);
}

double CBetaDist::log_pdf(double x) const {
  return transform_log_pdf(core_, coeffs_, log_beta_, x);
}

double CBetaDist::pdf(double x) const { return std::exp(log_pdf(x)); }

double CBetaDist::cdf(double x) const {
  return transform_cdf(core_, coeffs_, x);
}

double CBetaDist::quantile(double q) const {
  return generic_quantile(
      [this](double x) {
        return std::pair<double, double>{cdf(x), pdf(x)};
      },
      q);
}

double CBetaDist::raw_moment(int n) const {
  return transform_raw_moment(core_, coeffs_, n, false);
}

double CBetaDist::mean() const {
  const double alpha = core_.alpha;
  const double eta = core_.eta();
  return alpha / eta *
         (coeffs_.a + (alpha + 1.0) / (eta + 1.0) *
                          (coeffs_.b + (alpha + 2.0) / (eta + 2.0) * coeffs_.c));
}

double CBetaDist::variance() const {
  const double m = mean();
  return std::max(transform_raw_moment(core_, coeffs_, 2, false) - m * m, 0.0);
}

ModeResult CBetaDist::mode() const {
  return transform_mode(core_, coeffs_, log_beta_);
}

// ---- SQBetaDist ------------------------------------------------------------

namespace {

double shifted_norm_constant(const BetaCore& core, const CubicCoeffs& k) {
  const double eta = core.eta();
  const double inv = k.a + 2.0 * k.b * core.alpha / eta +
                     3.0 * k.c * core.alpha * (core.alpha + 1.0) /
                         (eta * (eta + 1.0));
  if (!(inv > 0.0)) {
    throw std::invalid_argument(
        "normalization constant must be positive; degenerate parameters");
  }
  return 1.0 / inv;
}

// Nested form of the mean of the Jacobian-less families.
double shifted_mean(const BetaCore& core, const CubicCoeffs& k,
                    double norm_c) {
  const double alpha = core.alpha;
  const double eta = core.eta();
  const double a = k.a;
  const double b = k.b;
  const double c = k.c;
  return norm_c * alpha / eta *
         (a * a +
          (alpha + 1.0) / (eta + 1.0) *
              (3.0 * a * b +
               (alpha + 2.0) / (eta + 2.0) *
                   (4.0 * a * c + 2.0 * b * b +
                    (alpha + 3.0) / (eta + 3.0) *
                        (5.0 * b * c +
                         (alpha + 4.0) / (eta + 4.0) * (3.0 * c * c)))));
}

}  // namespace

SQBetaDist::SQBetaDist(double alpha, double beta, double gamma)
    : core_{alpha, beta}, gamma_(gamma) {
  require_positive(core_);
  coeffs_ = coeffs_from_shape({gamma, 1.0 / 3.0});
  norm_c_ = shifted_norm_constant(core_, coeffs_);
  log_beta_ = log_beta(alpha, beta);
}

double SQBetaDist::log_pdf(double x) const {
  return shifted_log_pdf(core_, coeffs_, norm_c_, log_beta_, x);
}

double SQBetaDist::pdf(double x) const { return std::exp(log_pdf(x)); }

double SQBetaDist::cdf(double x) const {
  return shifted_cdf(core_, coeffs_, norm_c_, log_beta_, x);
}

double SQBetaDist::cdf_three_term(double x) const {
  return shifted_cdf_three_term(core_, coeffs_, norm_c_, x);
}

double SQBetaDist::quantile(double q) const {
  return generic_quantile(
      [this](double x) {
        return std::pair<double, double>{cdf(x), pdf(x)};
      },
      q);
}

double SQBetaDist::raw_moment(int n) const {
  return norm_c_ * transform_raw_moment(core_, coeffs_, n, true);
}

double SQBetaDist::mean() const {
  return shifted_mean(core_, coeffs_, norm_c_);
}

double SQBetaDist::variance() const {
  const double m = mean();
  return std::max(raw_moment(2) - m * m, 0.0);
}

ModeResult SQBetaDist::mode() const { return shifted_mode(core_, coeffs_); }

// ---- SCBetaDist ------------------------------------------------------------

SCBetaDist::SCBetaDist(double alpha, double beta, const ShapeParams& shape)
    : core_{alpha, beta}, shape_(shape) {
  require_positive(core_);
  coeffs_ = coeffs_from_shape(shape);
  norm_c_ = shifted_norm_constant(core_, coeffs_);
  log_beta_ = log_beta(alpha, beta);
}

double SCBetaDist::log_pdf(double x) const {
  return shifted_log_pdf(core_, coeffs_, norm_c_, log_beta_, x);
}

double SCBetaDist::pdf(double x) const { return std::exp(log_pdf(x)); }

double SCBetaDist::cdf(double x) const {
  return shifted_cdf(core_, coeffs_, norm_c_, log_beta_, x);
}

double SCBetaDist::cdf_three_term(double x) const {
  return shifted_cdf_three_term(core_, coeffs_, norm_c_, x);
}

double SCBetaDist::quantile(double q) const {
  return generic_quantile(
      [this](double x) {
        return std::pair<double, double>{cdf(x), pdf(x)};
      },
      q);
}

double SCBetaDist::raw_moment(int n) const {
  return norm_c_ * transform_raw_moment(core_, coeffs_, n, true);
}

double SCBetaDist::mean() const {
  return shifted_mean(core_, coeffs_, norm_c_);
}

double SCBetaDist::variance() const {
  const double m = mean();
  return std::max(raw_moment(2) - m * m, 0.0);
}

ModeResult SCBetaDist::mode() const { return shifted_mode(core_, coeffs_); }

// ---- CBeta11Dist -----------------------------------------------------------

CBeta11Dist::CBeta11Dist(const ShapeParams& shape) : shape_(shape) {
  coeffs_ = coeffs_from_shape(shape);
}

double CBeta11Dist::log_pdf(double x) const {
  check_unit(x, "pdf");
  return -std::log(solve_monotone_poly(coeffs_, x).jacobian);
}

double CBeta11Dist::pdf(double x) const { return std::exp(log_pdf(x)); }

double CBeta11Dist::cdf(double x) const {
  check_unit(x, "cdf");
  return solve_monotone_poly(coeffs_, x).p;
}

double CBeta11Dist::quantile(double q) const {
  if (!(q >= 0.0 && q <= 1.0)) {
    throw std::domain_error("quantile: level outside [0,1]");
  }
  // F(x) = p(x), so the quantile is the forward transform
  return coeffs_.eval(q);
}

double CBeta11Dist::raw_moment(int n) const {
  return transform_raw_moment({1.0, 1.0}, coeffs_, n, false);
}

double CBeta11Dist::mean() const {
  return coeffs_.a / 2.0 + coeffs_.b / 3.0 + coeffs_.c / 4.0;
}

double CBeta11Dist::variance() const {
  const double a = coeffs_.a;
  const double b = coeffs_.b;
  const double c = coeffs_.c;
  return a * a / 12.0 + 4.0 * b * b / 45.0 + 9.0 * c * c / 112.0 +
         a * b / 6.0 + b * c / 6.0 + 3.0 * a * c / 20.0;
}

ModeResult CBeta11Dist::mode() const {
  // curvature at the stationary point is -6c/J^4: c > 0 gives a mode
  return jacobian_stationary_mode(coeffs_, true);
}

// ---- GenQuadDist -----------------------------------------------------------

GenQuadDist::GenQuadDist(const CubicCoeffs& coeffs) : coeffs_(coeffs) {
  require_admissible(coeffs_);
}

GenQuadDist::GenQuadDist(const ShapeParams& shape)
    : GenQuadDist(coeffs_from_shape(shape)) {}

double GenQuadDist::log_pdf(double x) const {
  check_unit(x, "pdf");
  return std::log(coeffs_.deriv(x));
}

double GenQuadDist::pdf(double x) const {
  check_unit(x, "pdf");
  return coeffs_.deriv(x);
}

double GenQuadDist::cdf(double x) const {
  check_unit(x, "cdf");
  return coeffs_.eval(x);
}

double GenQuadDist::quantile(double q) const {
  if (!(q >= 0.0 && q <= 1.0)) {
    throw std::domain_error("quantile: level outside [0,1]");
  }
  return solve_monotone_poly(coeffs_, q).p;
}

double GenQuadDist::raw_moment(int n) const {
  check_moment_order(n);
  return coeffs_.a / (n + 1.0) + 2.0 * coeffs_.b / (n + 2.0) +
         3.0 * coeffs_.c / (n + 3.0);
}

double GenQuadDist::mean() const {
  return coeffs_.a / 2.0 + 2.0 * coeffs_.b / 3.0 + 3.0 * coeffs_.c / 4.0;
}

double GenQuadDist::variance() const {
  const double m = mean();
  const double ex2 =
      coeffs_.a / 3.0 + coeffs_.b / 2.0 + 3.0 * coeffs_.c / 5.0;
  return std::max(ex2 - m * m, 0.0);
}

ModeResult GenQuadDist::mode() const {
  // the pdf is J itself: c < 0 makes the stationary point a maximum
  ModeResult r = jacobian_stationary_mode(coeffs_, false);
  if (r.p) r.x = r.p;  // no transform: the support variable is p
  return r;
}

double GenQuadDist::mgf(double t) const {
  const double a = coeffs_.a;
  const double b = coeffs_.b;
  const double c = coeffs_.c;
  if (std::abs(t) < 1e-3) {
    // Taylor series through t^4; E[P^k] = a/(k+1) + 2b/(k+2) + 3c/(k+3)
    double sum = 1.0;
    double tk = 1.0;
    double fact = 1.0;
    for (int kk = 1; kk <= 4; ++kk) {
      tk *= t;
      fact *= kk;
      const double mk = a / (kk + 1.0) + 2.0 * b / (kk + 2.0) +
                        3.0 * c / (kk + 3.0);
      sum += tk * mk / fact;
    }
    return sum;
  }
  const double et = std::exp(t);
  const double em1 = std::expm1(t);
  return a * em1 / t + 2.0 * b * (et / t - em1 / (t * t)) +
         3.0 * c * (et / t - 2.0 * et / (t * t) + 2.0 * em1 / (t * t * t));
}

}  // namespace cubeta
