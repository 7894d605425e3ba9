#pragma once

#include <cstdint>
#include <random>

#include "cubeta/dist.hpp"
#include "cubeta/params.hpp"

namespace cubeta {

/// Seedable stream of uniform variates. Identical seeds replay identical
/// streams. Hold one per thread; streams are not shareable.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed = 0) : engine_(seed) {}

  /// Uniform on [0,1).
  double uniform() {
    return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Counters of a rejection sampler. expected efficiency is
/// C^{-1} / M_max; see rejection_efficiency below.
struct RejectionStats {
  std::uint64_t proposed = 0;
  std::uint64_t accepted = 0;
  double efficiency() const {
    return proposed > 0 ? static_cast<double>(accepted) / proposed : 0.0;
  }
};

/// Beta(alpha, beta) variate via the gamma ratio.
double sample_beta(const BetaCore& core, RandomSource& rng);

double sample(const BetaDist& d, RandomSource& rng);

/// Transform method: X = a P + b P^2 + c P^3 with P drawn from the parent.
double sample(const QBetaDist& d, RandomSource& rng);
double sample(const CBetaDist& d, RandomSource& rng);
double sample(const CBeta11Dist& d, RandomSource& rng);

/// Rejection method for the Jacobian-less families: propose P ~ Beta(alpha,
/// beta), accept with probability (a + 2bP + 3cP^2) / M_max, then transform.
/// Counters accumulate into *stats when given.
double sample(const SQBetaDist& d, RandomSource& rng,
              RejectionStats* stats = nullptr);
double sample(const SCBetaDist& d, RandomSource& rng,
              RejectionStats* stats = nullptr);

enum class GenQuadMethod { inversion, rejection };

/// Inversion solves a P + b P^2 + c P^3 = U; rejection thins uniforms by
/// f(U)/f_max. Both draw from the same distribution.
double sample(const GenQuadDist& d, RandomSource& rng,
              GenQuadMethod method = GenQuadMethod::inversion);

/// Maximum of a + 2bp + 3cp^2 over [0,1]: largest of the endpoint values
/// and the interior stationary value at -b/3c when that lies inside.
double rejection_bound(const CubicCoeffs& coeffs);

/// Expected acceptance rate C^{-1} / M_max of the rejection sampler.
double rejection_efficiency(const SQBetaDist& d);
double rejection_efficiency(const SCBetaDist& d);

}  // namespace cubeta
