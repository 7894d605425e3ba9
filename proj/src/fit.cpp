#include "cubeta/fit.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "cubeta/numerics.hpp"

namespace cubeta {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

// ---- Dataset ---------------------------------------------------------------

Dataset::Dataset(std::vector<double> raw, double lo, double hi,
                 std::string name, bool nudge_boundaries)
    : lo_(lo), hi_(hi), name_(std::move(name)) {
  if (!(lo < hi)) {
    throw std::invalid_argument("dataset interval: need lo < hi");
  }
  if (raw.empty()) throw DataError("dataset '" + name_ + "' is empty");
  const double eps = 1.0 / (2.0 * static_cast<double>(raw.size()));
  std::string boundary_rows;
  values_.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const double v = raw[i];
    if (!(v >= lo && v <= hi)) {
      throw DataError("row " + std::to_string(i) + ": value " +
                      std::to_string(v) + " outside interval [" +
                      std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    double s = (v - lo) / (hi - lo);
    if (s <= 0.0 || s >= 1.0) {
      if (nudge_boundaries) {
        s = s <= 0.0 ? eps : 1.0 - eps;
        ++nudged_;
      } else {
        if (!boundary_rows.empty()) boundary_rows += ", ";
        boundary_rows += std::to_string(i);
      }
    }
    values_.push_back(s);
  }
  if (!boundary_rows.empty()) {
    throw DataError(
        "boundary values (0 or 1 after rescaling) at rows " + boundary_rows +
        "; the log-likelihood is undefined there. Rerun with boundary "
        "nudging enabled to move them inward by 1/(2n).");
  }
}

double Dataset::log_jacobian() const {
  return static_cast<double>(size()) * std::log(hi_ - lo_);
}

// ---- family tags -----------------------------------------------------------

std::string family_name(Family f) {
  switch (f) {
    case Family::beta: return "beta";
    case Family::qbeta: return "qbeta";
    case Family::sqbeta: return "sqbeta";
    case Family::cbeta: return "cbeta";
    case Family::scbeta: return "scbeta";
  }
  return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
  if (name == "beta") return Family::beta;
  if (name == "qbeta") return Family::qbeta;
  if (name == "sqbeta") return Family::sqbeta;
  if (name == "cbeta") return Family::cbeta;
  if (name == "scbeta") return Family::scbeta;
  return std::nullopt;
}

int family_param_count(Family f) {
  switch (f) {
    case Family::beta: return 2;
    case Family::qbeta:
    case Family::sqbeta: return 3;
    case Family::cbeta:
    case Family::scbeta: return 4;
  }
  return 0;
}

// ---- negative log-likelihood -----------------------------------------------

namespace {

template <class Dist>
double accumulate_nll(const Dist& d, const Dataset& data) {
  // Neumaier compensated summation
  double sum = 0.0;
  double comp = 0.0;
  for (double x : data.values()) {
    const double term = -d.log_pdf(x);
    if (term == kInf) return kInf;
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
      comp += (sum - t) + term;
    } else {
      comp += (term - t) + sum;
    }
    sum = t;
  }
  return sum + comp;
}

}  // namespace

double neg_loglik(Family family, const BetaCore& core,
                  const ShapeParams& shape, const Dataset& data) {
  switch (family) {
    case Family::beta:
      return accumulate_nll(BetaDist(core.alpha, core.beta), data);
    case Family::qbeta:
      return accumulate_nll(QBetaDist(core.alpha, core.beta, shape.gamma),
                            data);
    case Family::sqbeta:
      return accumulate_nll(SQBetaDist(core.alpha, core.beta, shape.gamma),
                            data);
    case Family::cbeta:
      return accumulate_nll(CBetaDist(core.alpha, core.beta, shape), data);
    case Family::scbeta:
      return accumulate_nll(SCBetaDist(core.alpha, core.beta, shape), data);
  }
  throw std::invalid_argument("neg_loglik: unknown family");
}

// ---- Nelder-Mead -----------------------------------------------------------

namespace {

struct SimplexOutcome {
  std::vector<double> x;
  double f = kInf;
  int iterations = 0;
  bool converged = false;
};

SimplexOutcome nelder_mead(
    const std::function<double(const std::vector<double>&)>& fn,
    const std::vector<double>& x0, double step, double f_tol, double x_tol,
    int max_iter) {
  const std::size_t n = x0.size();
  std::vector<std::vector<double>> pts(n + 1, x0);
  for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += step;
  std::vector<double> fv(n + 1);
  for (std::size_t i = 0; i <= n; ++i) fv[i] = fn(pts[i]);

  SimplexOutcome out;
  std::vector<std::size_t> idx(n + 1);
  for (int iter = 0; iter < max_iter; ++iter) {
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(),
              [&fv](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    const std::size_t best = idx[0];
    const std::size_t worst = idx[n];
    const std::size_t second_worst = idx[n - 1];

    double spread_x = 0.0;
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        spread_x = std::max(spread_x, std::abs(pts[i][j] - pts[best][j]));
      }
    }
    if (fv[worst] - fv[best] < f_tol && spread_x < x_tol) {
      out.converged = true;
      out.iterations = iter;
      break;
    }
    out.iterations = iter + 1;

    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (std::size_t j = 0; j < n; ++j) centroid[j] += pts[i][j];
    }
    for (double& cj : centroid) cj /= static_cast<double>(n);

    auto blend = [&](double w) {
      std::vector<double> p(n);
      for (std::size_t j = 0; j < n; ++j) {
        p[j] = centroid[j] + w * (centroid[j] - pts[worst][j]);
      }
      return p;
    };

    const std::vector<double> xr = blend(1.0);
    const double fr = fn(xr);
    if (fr < fv[best]) {
      const std::vector<double> xe = blend(2.0);
      const double fe = fn(xe);
      if (fe < fr) {
        pts[worst] = xe;
        fv[worst] = fe;
      } else {
        pts[worst] = xr;
        fv[worst] = fr;
      }
    } else if (fr < fv[second_worst]) {
      pts[worst] = xr;
      fv[worst] = fr;
    } else {
      const bool outside = fr < fv[worst];
      const std::vector<double> xc = blend(outside ? 0.5 : -0.5);
      const double fc = fn(xc);
      if (fc < (outside ? fr : fv[worst])) {
        pts[worst] = xc;
        fv[worst] = fc;
      } else {
        // shrink toward the best vertex
        for (std::size_t i = 0; i <= n; ++i) {
          if (i == best) continue;
          for (std::size_t j = 0; j < n; ++j) {
            pts[i][j] = pts[best][j] + 0.5 * (pts[i][j] - pts[best][j]);
          }
          fv[i] = fn(pts[i]);
        }
      }
    }
  }

  const std::size_t best =
      std::min_element(fv.begin(), fv.end()) - fv.begin();
  out.x = pts[best];
  out.f = fv[best];
  return out;
}

// One search plus one restart from the perturbed optimum.
SimplexOutcome minimize(
    const std::function<double(const std::vector<double>&)>& fn,
    const std::vector<double>& x0, const FitConfig& cfg, double step = 0.25) {
  SimplexOutcome first =
      nelder_mead(fn, x0, step, cfg.f_tol, cfg.x_tol, cfg.max_iterations);
  SimplexOutcome second = nelder_mead(fn, first.x, 0.1 * step, cfg.f_tol,
                                      cfg.x_tol, cfg.max_iterations);
  second.iterations += first.iterations;
  if (first.f < second.f) {
    second.x = first.x;
    second.f = first.f;
  }
  return second;
}

// ---- parameter transforms ---------------------------------------------

// gamma and delta move on (margin, 1 - margin) through a scaled logistic,
// keeping the optimizer away from the degenerate shape-square boundary.
constexpr double kShapeMargin = 1e-6;

double unit_from_t(double t) {
  return kShapeMargin + (1.0 - 2.0 * kShapeMargin) / (1.0 + std::exp(-t));
}

double t_from_unit(double u) {
  const double span = 1.0 - 2.0 * kShapeMargin;
  double s = (u - kShapeMargin) / span;
  s = std::min(std::max(s, 1e-12), 1.0 - 1e-12);
  return std::log(s / (1.0 - s));
}

double pos_from_t(double t) {
  return std::exp(std::min(std::max(t, -30.0), 30.0));
}

struct Decoded {
  BetaCore core;
  ShapeParams shape;
};

// Layout of the transform-space vector: [log alpha, log beta, logit gamma,
// logit delta], truncated to the family's free parameters; fixed holds the
// pinned values for the rest.
Decoded decode(const std::vector<double>& t, const Decoded& fixed) {
  Decoded d = fixed;
  d.core.alpha = pos_from_t(t[0]);
  d.core.beta = pos_from_t(t[1]);
  if (t.size() > 2) d.shape.gamma = unit_from_t(t[2]);
  if (t.size() > 3) d.shape.delta = unit_from_t(t[3]);
  return d;
}

double objective(Family family, const std::vector<double>& t,
                 const Decoded& fixed, const Dataset& data) {
  const Decoded d = decode(t, fixed);
  double nll;
  try {
    nll = neg_loglik(family, d.core, d.shape, data);
  } catch (const std::exception&) {
    return kInf;
  }
  return std::isnan(nll) ? kInf : nll;
}

// Moment-matching start for the beta stage.
std::pair<double, double> beta_moment_init(const Dataset& data) {
  const auto& v = data.values();
  const double n = static_cast<double>(v.size());
  const double m = std::accumulate(v.begin(), v.end(), 0.0) / n;
  double ss = 0.0;
  for (double x : v) ss += (x - m) * (x - m);
  const double var = ss / std::max(n - 1.0, 1.0);
  double common = var > 0.0 ? m * (1.0 - m) / var - 1.0 : 1.0;
  if (!(common > 0.0)) common = 1.0;
  const double a = std::max(m * common, 1e-3);
  const double b = std::max((1.0 - m) * common, 1e-3);
  return {a, b};
}

}  // namespace

FitResult fit_mle(Family family, const Dataset& data, const FitConfig& cfg) {
  FitResult result;
  result.family = family;
  int iterations = 0;

  // stage 1: plain beta
  const auto [a0, b0] = beta_moment_init(data);
  Decoded cur;
  cur.shape = {0.5, 1.0 / 3.0};
  auto beta_obj = [&](const std::vector<double>& t) {
    return objective(Family::beta, t, cur, data);
  };
  SimplexOutcome s = minimize(beta_obj, {std::log(a0), std::log(b0)}, cfg);
  iterations += s.iterations;
  cur.core = {pos_from_t(s.x[0]), pos_from_t(s.x[1])};
  result.stage_trace.emplace_back("beta", s.f);

  if (family != Family::beta) {
    // stage 2: quadratic family from the beta optimum, gamma = 1/2
    const Family qfam =
        (family == Family::qbeta || family == Family::cbeta) ? Family::qbeta
                                                             : Family::sqbeta;
    auto q_obj = [&](const std::vector<double>& t) {
      return objective(qfam, t, cur, data);
    };
    s = minimize(q_obj, {s.x[0], s.x[1], t_from_unit(0.5)}, cfg);
    iterations += s.iterations;
    cur.core = {pos_from_t(s.x[0]), pos_from_t(s.x[1])};
    cur.shape.gamma = unit_from_t(s.x[2]);
    result.stage_trace.emplace_back(family_name(qfam), s.f);

    if (family == Family::cbeta || family == Family::scbeta) {
      // stage 3: cubic family from the quadratic optimum, delta = 1/3
      auto c_obj = [&](const std::vector<double>& t) {
        return objective(family, t, cur, data);
      };
      std::vector<double> start = {s.x[0], s.x[1], s.x[2],
                                   t_from_unit(1.0 / 3.0)};
      s = minimize(c_obj, start, cfg);
      iterations += s.iterations;
      result.stage_trace.emplace_back(family_name(family), s.f);

      if (!s.converged) {
        // fallback: float gamma with delta pinned, then delta alone,
        // then everything
        Decoded pin = cur;
        pin.shape.delta = unit_from_t(s.x[3]);
        auto g_obj = [&](const std::vector<double>& t) {
          return objective(family, t, pin, data);
        };
        SimplexOutcome sg = minimize(g_obj, {s.x[0], s.x[1], s.x[2]}, cfg);
        iterations += sg.iterations;
        result.stage_trace.emplace_back(family_name(family) + ":gamma", sg.f);

        Decoded pin2 = pin;
        pin2.core = {pos_from_t(sg.x[0]), pos_from_t(sg.x[1])};
        pin2.shape.gamma = unit_from_t(sg.x[2]);
        auto d_obj = [&](const std::vector<double>& t) {
          Decoded d = pin2;
          d.shape.delta = unit_from_t(t[0]);
          try {
            const double nll = neg_loglik(family, d.core, d.shape, data);
            return std::isnan(nll) ? kInf : nll;
          } catch (const std::exception&) {
            return kInf;
          }
        };
        SimplexOutcome sd =
            minimize(d_obj, {t_from_unit(pin.shape.delta)}, cfg);
        iterations += sd.iterations;
        result.stage_trace.emplace_back(family_name(family) + ":delta", sd.f);

        std::vector<double> restart = {sg.x[0], sg.x[1], sg.x[2], sd.x[0]};
        SimplexOutcome sj = minimize(c_obj, restart, cfg, 0.05);
        iterations += sj.iterations;
        result.stage_trace.emplace_back(family_name(family) + ":joint", sj.f);
        if (sj.f <= s.f) s = sj;
      }
      cur.shape.delta = unit_from_t(s.x[3]);
    }
    cur.core = {pos_from_t(s.x[0]), pos_from_t(s.x[1])};
    cur.shape.gamma = unit_from_t(s.x[2]);
  }

  result.core = cur.core;
  result.shape = cur.shape;
  result.neg_loglik = s.f;
  result.converged = s.converged;
  result.iterations = iterations;
  return result;
}

// ---- regression reparameterizations ----------------------------------------

namespace {

double nested_mean(double alpha, double eta, const CubicCoeffs& k) {
  return alpha / eta *
         (k.a + (alpha + 1.0) / (eta + 1.0) *
                    (k.b + (alpha + 2.0) / (eta + 2.0) * k.c));
}

double nested_mean_deriv(double alpha, double eta, const CubicCoeffs& k) {
  return k.a / eta + k.b * (2.0 * alpha + 1.0) / (eta * (eta + 1.0)) +
         k.c * (3.0 * alpha * alpha + 6.0 * alpha + 2.0) /
             (eta * (eta + 1.0) * (eta + 2.0));
}

}  // namespace

double alpha_from_mean(double mu, double eta, const CubicCoeffs& coeffs) {
  require_admissible(coeffs);
  if (!(eta > 0.0)) throw std::domain_error("alpha_from_mean: eta must be positive");
  const double lo = eta * 1e-12;
  const double hi = eta * (1.0 - 1e-12);
  // The mean is strictly increasing in alpha (stochastic ordering of the
  // parent carried through the monotone transform), so attainability is a
  // bracket check at the ends.
  if (!(mu > nested_mean(lo, eta, coeffs) &&
        mu < nested_mean(hi, eta, coeffs))) {
    throw std::domain_error("alpha_from_mean: mean not attainable for this eta");
  }
  RootSolveConfig cfg;
  cfg.tolerance = 1e-14;
  cfg.max_iterations = 200;
  cfg.clamp_lo = lo;
  cfg.clamp_hi = hi;
  return clamped_newton(
      [&](double alpha) {
        return std::pair<double, double>{nested_mean(alpha, eta, coeffs),
                                         nested_mean_deriv(alpha, eta, coeffs)};
      },
      mu, 0.5 * eta, cfg);
}

double alpha_from_mode(Family family, double x_m, double eta,
                       const CubicCoeffs& coeffs) {
  if (family != Family::cbeta && family != Family::scbeta) {
    throw std::invalid_argument("alpha_from_mode: family must be cbeta or scbeta");
  }
  if (!(x_m > 0.0 && x_m < 1.0)) {
    throw std::domain_error("alpha_from_mode: mode must be interior");
  }
  const double p_m = solve_monotone_poly(coeffs, x_m).p;
  if (family == Family::scbeta) {
    if (!(eta > 2.0)) {
      throw std::domain_error("alpha_from_mode: scbeta needs eta > 2");
    }
    return 1.0 + p_m * (eta - 2.0);
  }
  // cbeta: (alpha-1)/p - (beta-1)/(1-p) = J'(p)/J(p) at the mode is linear
  // in alpha once beta = eta - alpha:
  //   alpha = 1 + (eta-2) p + p (1-p) J'(p)/J(p)
  const double ratio = coeffs.deriv2(p_m) / coeffs.deriv(p_m);
  const double alpha = 1.0 + (eta - 2.0) * p_m + ratio * p_m * (1.0 - p_m);
  if (!(alpha > 0.0 && alpha < eta)) {
    throw std::domain_error("alpha_from_mode: no alpha in (0, eta)");
  }
  return alpha;
}

BetaCore resolve_core(const MeanRegressionParams& rp) {
  const CubicCoeffs k = coeffs_from_shape({rp.gamma, rp.delta});
  const double alpha = alpha_from_mean(rp.mu, rp.eta, k);
  return {alpha, rp.eta - alpha};
}

BetaCore resolve_core(Family family, const ModalRegressionParams& rp) {
  const CubicCoeffs k = coeffs_from_shape({rp.gamma, rp.delta});
  const double alpha = alpha_from_mode(family, rp.x_m, rp.eta, k);
  return {alpha, rp.eta - alpha};
}

LrResult lr_test(const FitResult& nested, const FitResult& parent, int df) {
  if (df < 1) throw std::invalid_argument("lr_test: df must be >= 1");
  double stat = 2.0 * (nested.neg_loglik - parent.neg_loglik);
  if (stat < -1e-6) {
    throw ConvergenceError(
        "lr_test: parent fit is worse than the nested fit beyond optimizer "
        "slack; refit before testing");
  }
  stat = std::max(stat, 0.0);
  return {stat, df, chi_squared_sf(stat, df)};
}

}  // namespace cubeta
