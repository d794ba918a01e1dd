#pragma once

#include "rng.hpp"

namespace irsfso::numerics {

// Normal variate via the inverse-CDF method: exactly one uniform per draw,
// which keeps positions within a stream independent of call history.
double sample_normal(double mu, double var, RngStream& rng);

// Rayleigh variate with per-axis standard deviation sigma_u (> 0).
double sample_rayleigh(double sigma_u, RngStream& rng);

// Gamma variate, shape k > 0, scale theta > 0 (Marsaglia-Tsang).
double sample_gamma(double shape, double scale, RngStream& rng);

}  // namespace irsfso::numerics
