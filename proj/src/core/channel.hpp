#pragma once

#include <utility>

#include "pointing.hpp"

namespace irsfso::channel {

// Turbulence-induced fading of the composite gain h = h_l * h_a * h_p.
struct TurbulenceModel {
  enum class Kind { lognormal, gamma_gamma };

  Kind kind = Kind::lognormal;
  double sigma_r2 = 0.0;  // Rytov variance
  double alpha = 0.0;     // gamma_gamma shape (large-scale)
  double beta = 0.0;      // gamma_gamma shape (small-scale)

  static TurbulenceModel lognormal(double sigma_r2);
  static TurbulenceModel gamma_gamma(double sigma_r2);
  static TurbulenceModel gamma_gamma_shapes(double alpha, double beta, double sigma_r2 = 0.0);

  // log-amplitude variance of the lognormal model
  double sigma2() const { return 0.25 * sigma_r2; }

  double cdf(double h_a) const;
};

struct LinkBudget {
  double h_l;        // deterministic path loss in (0, 1]
  double p_t;        // average transmitted optical power [W]
  double r0;         // rate requirement [bits per channel use]
  double n0;         // noise variance
  double eta = 1.0;  // photo-electric conversion ratio

  void validate() const;
  static LinkBudget with_attenuation(double sigma_att, double distance, double p_t, double r0,
                                     double n0, double eta = 1.0);
};

// sigma_R^2 = 1.23 Cn^2 k^(7/6) d^(11/6)
double rytov_variance(double cn2, double wavenumber, double d_e2e);

// CDF of zero-median lognormal fading: log h_a ~ N(0, 4 sigma2).
double lognormal_cdf(double h_a, double sigma2);

// Shape parameters from the Rytov variance.
std::pair<double, double> gg_alpha_beta(double sigma_r2);

// Gamma-Gamma fading CDF. Evaluated through the hypergeometric series pair;
// when the two terms cancel beyond recovery (large alpha*beta*h_a) the value
// is recomputed by conditioning on the large-scale factor. Near-integer
// alpha-beta is handled by a small automatic perturbation of beta.
double gg_cdf(double h_a, double alpha, double beta);

struct GgCdfDiag {
  double value;
  bool used_series;     // hypergeometric route (false: conditioned quadrature)
  double beta_used;     // after any perturbation
  double cancellation;  // max term magnitude / |difference|
};
GgCdfDiag gg_cdf_diag(double h_a, double alpha, double beta);

// Outage threshold on the composite gain for rate r0.
double outage_threshold(const LinkBudget& budget);

// P(h < h0) with the pointing-loss distribution integrated against the
// fading CDF: point masses sift, the continuous part is a single finite
// quadrature over quantile-guided panels.
double outage_from_distribution(const pointing::HpDistribution& dist,
                                const TurbulenceModel& turbulence, double h0, double h_l);

// Closed form for the indicator model: F_u(a_l) (F_ha(h0/h_l) - 1) + 1.
double outage_closed_form_indicator(const LinkBudget& budget, const TurbulenceModel& turbulence,
                                    const pointing::PointingScenario& scenario);

// Analytic outage for the scenario's pointing model (erf_approx, indicator,
// or the wide-beam reference). The exact model has no analytic density.
double outage_analytic(const LinkBudget& budget, const TurbulenceModel& turbulence,
                       const pointing::PointingScenario& scenario);

// High-power limit for the indicator model: 1 - F_u(a_l).
double outage_lower_bound(const pointing::PointingScenario& scenario);

}  // namespace irsfso::channel
