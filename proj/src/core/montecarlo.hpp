#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "channel.hpp"
#include "pointing.hpp"
#include "rng.hpp"

namespace irsfso::montecarlo {

struct McConfig {
  std::uint64_t n_trials = 1'000'000;
  std::uint64_t seed = 1;
  int workers = 1;
  std::optional<pointing::Model> pointing_override;

  void validate() const;
};

struct McEstimate {
  double p_out = 0.0;
  double std_error = 0.0;
  std::uint64_t n_trials = 0;
};

// One fading variate: lognormal exp(N(0, 4 sigma^2)) or the product of two
// independent unit-mean Gamma factors with the model's shapes.
double sample_ha(const channel::TurbulenceModel& turbulence, numerics::RngStream& rng);

// Trial i draws from stream (seed, i), so the estimate is bit-exact for any
// worker count. The exact pointing model goes through the dense-grid cache
// for large trial counts.
McEstimate simulate_outage(const channel::LinkBudget& budget,
                           const channel::TurbulenceModel& turbulence,
                           const pointing::PointingScenario& scenario, const McConfig& cfg);

// Right-continuous empirical CDF with a Kolmogorov-Smirnov helper.
class EmpiricalCdf {
public:
  explicit EmpiricalCdf(std::vector<double> samples);

  double operator()(double x) const;
  const std::vector<double>& sorted_samples() const { return sorted_; }

private:
  std::vector<double> sorted_;
};

double ks_distance(const EmpiricalCdf& empirical, const std::function<double(double)>& cdf);

}  // namespace irsfso::montecarlo
