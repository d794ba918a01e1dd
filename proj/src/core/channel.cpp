#include "channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "errors.hpp"
#include "quadrature.hpp"
#include "special.hpp"

namespace irsfso::channel {

namespace {
constexpr double kPi = std::numbers::pi;
}

TurbulenceModel TurbulenceModel::lognormal(double sigma_r2) {
  if (!(sigma_r2 > 0.0)) throw Error(errc::domain_error, "sigma_r2 must be > 0");
  TurbulenceModel m;
  m.kind = Kind::lognormal;
  m.sigma_r2 = sigma_r2;
  return m;
}

TurbulenceModel TurbulenceModel::gamma_gamma(double sigma_r2) {
  const auto [alpha, beta] = gg_alpha_beta(sigma_r2);
  return gamma_gamma_shapes(alpha, beta, sigma_r2);
}

TurbulenceModel TurbulenceModel::gamma_gamma_shapes(double alpha, double beta, double sigma_r2) {
  if (!(alpha > 0.0) || !(beta > 0.0))
    throw Error(errc::domain_error, "gamma_gamma shapes must be > 0");
  if (alpha < beta) throw Error(errc::domain_error, "gamma_gamma requires alpha >= beta");
  TurbulenceModel m;
  m.kind = Kind::gamma_gamma;
  m.sigma_r2 = sigma_r2;
  m.alpha = alpha;
  m.beta = beta;
  return m;
}

double TurbulenceModel::cdf(double h_a) const {
  return kind == Kind::lognormal ? lognormal_cdf(h_a, sigma2()) : gg_cdf(h_a, alpha, beta);
}

void LinkBudget::validate() const {
  if (!(h_l > 0.0 && h_l <= 1.0)) throw Error(errc::domain_error, "budget.h_l must be in (0, 1]");
  if (!(p_t > 0.0)) throw Error(errc::domain_error, "budget.p_t must be > 0");
  if (!(r0 > 0.0)) throw Error(errc::domain_error, "budget.r0 must be > 0");
  if (!(n0 > 0.0)) throw Error(errc::domain_error, "budget.n0 must be > 0");
  if (!(eta > 0.0)) throw Error(errc::domain_error, "budget.eta must be > 0");
}

LinkBudget LinkBudget::with_attenuation(double sigma_att, double distance, double p_t, double r0,
                                        double n0, double eta) {
  if (sigma_att < 0.0) throw Error(errc::domain_error, "attenuation coefficient must be >= 0");
  if (!(distance > 0.0)) throw Error(errc::domain_error, "distance must be > 0");
  LinkBudget b{std::exp(-sigma_att * distance), p_t, r0, n0, eta};
  b.validate();
  return b;
}

double rytov_variance(double cn2, double wavenumber, double d_e2e) {
  if (!(cn2 > 0.0) || !(wavenumber > 0.0) || !(d_e2e > 0.0))
    throw Error(errc::domain_error, "rytov_variance requires positive arguments");
  return 1.23 * cn2 * std::pow(wavenumber, 7.0 / 6.0) * std::pow(d_e2e, 11.0 / 6.0);
}

double lognormal_cdf(double h_a, double sigma2) {
  if (!(sigma2 > 0.0)) throw Error(errc::domain_error, "sigma2 must be > 0");
  if (!(h_a > 0.0)) throw Error(errc::domain_error, "lognormal_cdf requires h_a > 0");
  if (std::isinf(h_a)) return 1.0;
  return 0.5 + 0.5 * numerics::erf(std::log(h_a) / std::sqrt(8.0 * sigma2));
}

std::pair<double, double> gg_alpha_beta(double sigma_r2) {
  if (!(sigma_r2 > 0.0)) throw Error(errc::domain_error, "sigma_r2 must be > 0");
  const double s125 = std::pow(sigma_r2, 6.0 / 5.0);  // sigma_R^(12/5)
  const double alpha =
      1.0 / std::expm1(0.49 * sigma_r2 / std::pow(1.0 + 1.11 * s125, 7.0 / 6.0));
  const double beta =
      1.0 / std::expm1(0.51 * sigma_r2 / std::pow(1.0 + 0.69 * s125, 5.0 / 6.0));
  return {alpha, beta};
}

namespace {

// CDF by conditioning on the large-scale factor: X~Gamma(alpha,1/alpha),
// Y~Gamma(beta,1/beta), P(XY <= h) = E_X[P(Y <= h/X)]. Free of the series
// cancellation; used when the hypergeometric pair loses its digits.
double gg_cdf_conditioned(double h, double alpha, double beta) {
  const double lga = numerics::ln_gamma(alpha);
  const auto integrand = [&](double x) {
    if (x <= 0.0) return 0.0;
    const double logd = alpha * std::log(alpha) + (alpha - 1.0) * std::log(x) - alpha * x - lga;
    return std::exp(logd) * numerics::gamma_p(beta, beta * h / x);
  };
  const double hi = 1.0 + 20.0 / std::sqrt(alpha) + 5.0;
  numerics::QuadratureSpec spec;
  spec.abs_tol = 1e-11;
  spec.rel_tol = 1e-10;
  spec.max_subdivisions = 4000;
  return std::clamp(numerics::integrate_checked(integrand, 0.0, hi, spec), 0.0, 1.0);
}

}  // namespace

GgCdfDiag gg_cdf_diag(double h_a, double alpha, double beta) {
  if (!(alpha > 0.0) || !(beta > 0.0))
    throw Error(errc::domain_error, "gg_cdf requires positive shapes");
  if (!(h_a > 0.0)) throw Error(errc::domain_error, "gg_cdf requires h_a > 0");

  GgCdfDiag diag{0.0, true, beta, 0.0};
  if (std::isinf(h_a)) {
    diag.value = 1.0;
    return diag;
  }

  // the expression is singular at integer alpha - beta; nudge beta off it
  double gamma = alpha - beta;
  if (std::fabs(gamma - std::round(gamma)) < 1e-6) {
    diag.beta_used = beta - 1e-6 * (1.0 + std::fabs(beta));
    gamma = alpha - diag.beta_used;
  }
  const double b = diag.beta_used;
  const double x = alpha * b * h_a;

  // series route: log-space prefactors, the two 1F2 terms subtracted at the end
  bool series_ok = x < 20000.0;
  double value = 0.0;
  if (series_ok) {
    try {
      const double f1 = numerics::hyp1f2(b, 1.0 - gamma, 1.0 + b, x);
      const double f2 = numerics::hyp1f2(alpha, 1.0 + gamma, 1.0 + alpha, x);
      const auto g1mg = numerics::ln_gamma_signed(1.0 - gamma);
      const double log_pref1 = b * std::log(x) - numerics::ln_gamma(alpha) - g1mg.log_abs -
                               numerics::ln_gamma(b + 1.0);
      const double log_pref2 = alpha * std::log(x) - numerics::ln_gamma(b) -
                               numerics::ln_gamma(1.0 + gamma) - numerics::ln_gamma(alpha + 1.0);
      const double t1 = g1mg.sign * std::copysign(std::exp(log_pref1 + std::log(std::fabs(f1))),
                                                  f1);
      const double t2 = std::copysign(std::exp(log_pref2 + std::log(std::fabs(f2))), f2);
      const double diff = t1 - t2;
      const double scale = std::max(std::fabs(t1), std::fabs(t2));
      diag.cancellation = diff != 0.0 ? scale / std::fabs(diff) : 1e300;
      value = kPi / std::sin(kPi * gamma) * diff;
      if (!std::isfinite(value) || diag.cancellation > 1e11) series_ok = false;
    } catch (const Error&) {
      series_ok = false;
    }
  }

  if (!series_ok) {
    diag.used_series = false;
    diag.value = gg_cdf_conditioned(h_a, alpha, b);
    return diag;
  }
  diag.value = std::clamp(value, 0.0, 1.0);
  return diag;
}

double gg_cdf(double h_a, double alpha, double beta) {
  return gg_cdf_diag(h_a, alpha, beta).value;
}

double outage_threshold(const LinkBudget& budget) {
  budget.validate();
  const double s = std::numbers::sqrt2 * budget.eta * budget.p_t * budget.r0;
  return std::sqrt((std::exp2(budget.r0) - 1.0) * budget.n0 / (s * s));
}

double outage_from_distribution(const pointing::HpDistribution& dist,
                                const TurbulenceModel& turbulence, double h0, double h_l) {
  if (!(h0 > 0.0)) throw Error(errc::domain_error, "h0 must be > 0");
  if (!(h_l > 0.0 && h_l <= 1.0)) throw Error(errc::domain_error, "h_l must be in (0, 1]");

  double total = 0.0;
  double mass_sum = 0.0;
  for (const auto& [location, mass] : dist.point_masses()) {
    mass_sum += mass;
    // h_p = 0 means the composite gain is below any positive threshold
    total += location > 0.0 ? mass * turbulence.cdf(h0 / (location * h_l)) : mass;
  }
  if (mass_sum >= 1.0 - 1e-12) return std::clamp(total, 0.0, 1.0);

  const auto integrand = [&](double t) {
    const double f = dist.pdf(t);
    if (f <= 0.0) return 0.0;
    return f * turbulence.cdf(h0 / (t * h_l));
  };

  // quantile-guided panels so narrow concentrations of h_p are not missed
  constexpr int kPanels = 64;
  numerics::QuadratureSpec spec;
  spec.abs_tol = 1e-10;
  spec.rel_tol = 1e-8;
  spec.max_subdivisions = 400;
  double continuous = 0.0;
  double prev = 0.0;
  for (int i = 1; i <= kPanels; ++i) {
    const double q = static_cast<double>(i) / kPanels;
    double edge = dist.quantile(q);
    edge = std::clamp(edge, prev, dist.support_max());
    if (edge > prev) continuous += numerics::integrate_checked(integrand, prev, edge, spec);
    prev = edge;
  }
  return std::clamp(total + continuous, 0.0, 1.0);
}

double outage_closed_form_indicator(const LinkBudget& budget, const TurbulenceModel& turbulence,
                                    const pointing::PointingScenario& scenario) {
  budget.validate();
  scenario.validate();
  if (!(scenario.sigma_u > 0.0))
    throw Error(errc::degenerate_distribution, "sigma_u must be > 0 for the analytic outage");
  const double fu = pointing::displacement_cdf(scenario.a_l, scenario.sigma_u);
  const double h0 = outage_threshold(budget);
  return std::clamp(fu * (turbulence.cdf(h0 / budget.h_l) - 1.0) + 1.0, 0.0, 1.0);
}

double outage_analytic(const LinkBudget& budget, const TurbulenceModel& turbulence,
                       const pointing::PointingScenario& scenario) {
  budget.validate();
  scenario.validate();
  const auto model = scenario.effective_model();
  if (model == pointing::Model::exact)
    throw Error(errc::model_mismatch,
                "the exact pointing model has no analytic outage; use Monte Carlo");
  if (model == pointing::Model::indicator)
    return outage_closed_form_indicator(budget, turbulence, scenario);
  const auto dist = pointing::pdf_hp(scenario);
  return outage_from_distribution(dist, turbulence, outage_threshold(budget), budget.h_l);
}

double outage_lower_bound(const pointing::PointingScenario& scenario) {
  scenario.validate();
  if (scenario.sigma_u == 0.0) return 0.0;
  return 1.0 - pointing::displacement_cdf(scenario.a_l, scenario.sigma_u);
}

}  // namespace irsfso::channel
