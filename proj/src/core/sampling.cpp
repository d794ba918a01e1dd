#include "sampling.hpp"

#include <cmath>

#include "errors.hpp"
#include "special.hpp"

namespace irsfso::numerics {

double sample_normal(double mu, double var, RngStream& rng) {
  if (var < 0.0) throw Error(errc::domain_error, "sample_normal requires var >= 0");
  if (var == 0.0) return mu;
  return mu + std::sqrt(var) * norm_quantile(rng.next_open());
}

double sample_rayleigh(double sigma_u, RngStream& rng) {
  if (!(sigma_u > 0.0)) throw Error(errc::domain_error, "sample_rayleigh requires sigma_u > 0");
  return sigma_u * std::sqrt(-2.0 * std::log(rng.next_open()));
}

double sample_gamma(double shape, double scale, RngStream& rng) {
  if (!(shape > 0.0)) throw Error(errc::domain_error, "sample_gamma requires shape > 0");
  if (!(scale > 0.0)) throw Error(errc::domain_error, "sample_gamma requires scale > 0");

  if (shape < 1.0) {
    // boost: Gamma(k) = Gamma(k+1) * U^(1/k)
    const double g = sample_gamma(shape + 1.0, 1.0, rng);
    return scale * g * std::pow(rng.next_open(), 1.0 / shape);
  }

  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / (3.0 * std::sqrt(d));
  for (;;) {
    const double x = norm_quantile(rng.next_open());
    const double t = 1.0 + c * x;
    if (t <= 0.0) continue;
    const double v = t * t * t;
    const double u = rng.next_open();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return scale * d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return scale * d * v;
  }
}

}  // namespace irsfso::numerics
