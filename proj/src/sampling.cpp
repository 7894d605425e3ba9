#include "cubeta/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace cubeta {

double sample_beta(const BetaCore& core, RandomSource& rng) {
  require_positive(core);
  std::gamma_distribution<double> ga(core.alpha, 1.0);
  std::gamma_distribution<double> gb(core.beta, 1.0);
  for (;;) {
    const double x = ga(rng.engine());
    const double y = gb(rng.engine());
    const double s = x + y;
    if (s > 0.0) return x / s;
    // both gammas underflowed to zero; retry
  }
}

double sample(const BetaDist& d, RandomSource& rng) {
  return sample_beta(d.core(), rng);
}

namespace {

double transform_draw(const BetaCore& core, const CubicCoeffs& k,
                      RandomSource& rng) {
  return k.eval(sample_beta(core, rng));
}

double rejection_draw(const BetaCore& core, const CubicCoeffs& k,
                      RandomSource& rng, RejectionStats* stats) {
  const double m_max = rejection_bound(k);
  for (;;) {
    const double p = sample_beta(core, rng);
    const double m = k.deriv(p);
    if (m > m_max * (1.0 + 1e-12)) {
      throw std::logic_error("rejection sampler: proposal weight above bound");
    }
    if (stats) ++stats->proposed;
    if (rng.uniform() * m_max <= m) {
      if (stats) ++stats->accepted;
      return k.eval(p);
    }
  }
}

}  // namespace

double sample(const QBetaDist& d, RandomSource& rng) {
  return transform_draw(d.core(), d.coeffs(), rng);
}

double sample(const CBetaDist& d, RandomSource& rng) {
  return transform_draw(d.core(), d.coeffs(), rng);
}

double sample(const CBeta11Dist& d, RandomSource& rng) {
  return d.coeffs().eval(rng.uniform());
}

double sample(const SQBetaDist& d, RandomSource& rng, RejectionStats* stats) {
  return rejection_draw(d.core(), d.coeffs(), rng, stats);
}

double sample(const SCBetaDist& d, RandomSource& rng, RejectionStats* stats) {
  return rejection_draw(d.core(), d.coeffs(), rng, stats);
}

double sample(const GenQuadDist& d, RandomSource& rng, GenQuadMethod method) {
  if (method == GenQuadMethod::inversion) {
    return solve_monotone_poly(d.coeffs(), rng.uniform()).p;
  }
  const double f_max = rejection_bound(d.coeffs());
  for (;;) {
    const double u = rng.uniform();
    if (rng.uniform() * f_max <= d.coeffs().deriv(u)) return u;
  }
}

double rejection_bound(const CubicCoeffs& coeffs) {
  double m = std::max(coeffs.deriv(0.0), coeffs.deriv(1.0));
  if (coeffs.c != 0.0) {
    const double p = -coeffs.b / (3.0 * coeffs.c);
    if (p > 0.0 && p < 1.0) m = std::max(m, coeffs.deriv(p));
  }
  return m;
}

double rejection_efficiency(const SQBetaDist& d) {
  return 1.0 / (d.norm_constant() * rejection_bound(d.coeffs()));
}

double rejection_efficiency(const SCBetaDist& d) {
  return 1.0 / (d.norm_constant() * rejection_bound(d.coeffs()));
}

}  // namespace cubeta
