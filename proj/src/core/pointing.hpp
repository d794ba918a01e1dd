#pragma once

#include <utility>
#include <vector>

namespace irsfso::pointing {

enum class Model { exact, erf_approx, indicator, gaussian_wide, autosel };

// Beam-vs-aperture configuration at the receiver. The displacement u is the
// radial offset of the beam center from the aperture center; sigma_u is the
// per-axis jitter standard deviation, which makes u Rayleigh distributed.
struct PointingScenario {
  double w_l;      // beam width at the receiver lens [m]
  double a_l;      // aperture radius [m]
  double sigma_u;  // displacement std per axis [m]
  Model model = Model::autosel;

  // autosel thresholds on w_l/a_l
  double indicator_threshold = 0.2;
  double erf_threshold = 1.2;

  void validate() const;
  Model effective_model() const;
};

// Collected-power fraction for a beam displaced by u: full disk integral.
double hp_exact(double u, const PointingScenario& s);

// Equal-area error-function approximation, intended for w_l similar to a_l.
double hp_erf(double u, const PointingScenario& s);

// All-or-nothing aperture crossing, intended for w_l much below a_l.
double hp_indicator(double u, const PointingScenario& s);

// Conventional wide-beam Gaussian form A0*exp(-2u^2/w_eq^2); reference
// implementation for comparison curves only.
double hp_gaussian_wide(double u, const PointingScenario& s);

// Dispatch on the scenario's effective model.
double hp(double u, const PointingScenario& s);

// Collected fraction at zero displacement for the erf model: E(E+1)/2.
double fraction_at_center(const PointingScenario& s);

// Rayleigh CDF of the displacement magnitude.
double displacement_cdf(double a, double sigma_u);

// Distribution of the pointing loss h_p = hp(u) with u ~ Rayleigh(sigma_u):
// a continuous density on (0, support_max) plus point masses. The erf model
// yields a pure density (change of variables through the monotone loss
// curve); the indicator model yields the two-point mass distribution; the
// wide-beam model yields the standard power-law density.
class HpDistribution {
public:
  HpDistribution(const PointingScenario& s);

  double pdf(double h_p) const;
  const std::vector<std::pair<double, double>>& point_masses() const { return masses_; }
  double support_max() const { return support_max_; }
  // h such that P(h_p <= h) = q, for panel placement in integrals
  double quantile(double q) const;
  Model model() const { return model_; }

private:
  Model model_;
  double w_l_, a_l_, sigma_u_;
  double e_, support_max_;
  double xi2_ = 0.0;  // (w_eq/(2 sigma_u))^2 for the wide-beam model
  std::vector<std::pair<double, double>> masses_;
};

HpDistribution pdf_hp(const PointingScenario& s);

// The alternate closed form of the erf-model density as published elsewhere;
// kept for diagnostics. It is not normalized (differs from the
// transformation-derived pdf by a 1/sigma_u^2-type factor) and must not be
// used in outage integrals.
double hp_pdf_published_form(double h_p, const PointingScenario& s);

// Dense-grid cache for the exact disk integral, used by Monte Carlo runs;
// linear interpolation error is verified to stay below 1e-5 at build time.
class HpExactCache {
public:
  explicit HpExactCache(const PointingScenario& s, std::size_t points = 4096);
  double operator()(double u) const;
  double max_build_error() const { return max_build_error_; }

private:
  double u_cap_;
  double du_;
  std::vector<double> values_;
  double max_build_error_;
};

}  // namespace irsfso::pointing
