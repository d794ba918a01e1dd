#include "pointing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "errors.hpp"
#include "quadrature.hpp"
#include "special.hpp"

namespace irsfso::pointing {

namespace {
constexpr double kPi = std::numbers::pi;
const double kSqrtPi = std::sqrt(kPi);
constexpr double kSqrt2 = std::numbers::sqrt2;
}  // namespace

void PointingScenario::validate() const {
  if (!(w_l > 0.0)) throw Error(errc::domain_error, "pointing.w_l must be > 0");
  if (!(a_l > 0.0)) throw Error(errc::domain_error, "pointing.a_l must be > 0");
  if (sigma_u < 0.0) throw Error(errc::domain_error, "pointing.sigma_u must be >= 0");
  if (!(indicator_threshold > 0.0) || !(erf_threshold > indicator_threshold))
    throw Error(errc::domain_error, "pointing model thresholds must satisfy 0 < t1 < t2");
}

Model PointingScenario::effective_model() const {
  if (model != Model::autosel) return model;
  const double ratio = w_l / a_l;
  if (ratio <= indicator_threshold) return Model::indicator;
  if (ratio <= erf_threshold) return Model::erf_approx;
  return Model::exact;
}

double hp_exact(double u, const PointingScenario& s) {
  s.validate();
  u = std::fabs(u);
  // The transverse integral of the displaced beam over the disk chord is an
  // erf, which leaves a single adaptive quadrature in the displacement axis.
  const double w = s.w_l, a = s.a_l;
  const auto integrand = [&](double x) {
    const double span = std::sqrt(std::max(a * a - x * x, 0.0));
    const double dx = x - u;
    return std::exp(-2.0 * dx * dx / (w * w)) * numerics::erf(kSqrt2 * span / w);
  };
  numerics::QuadratureSpec spec;
  spec.abs_tol = 1e-10;
  spec.rel_tol = 1e-10;
  spec.max_subdivisions = 4000;
  const double v =
      std::sqrt(2.0 / kPi) / w * numerics::integrate_checked(integrand, -a, a, spec);
  return std::clamp(v, 0.0, 1.0);
}

double hp_erf(double u, const PointingScenario& s) {
  s.validate();
  const double e = numerics::erf(kSqrtPi * s.a_l / (kSqrt2 * s.w_l));
  return 0.5 * e *
         (numerics::erf(kSqrt2 / s.w_l * (0.5 * kSqrtPi * s.a_l - std::fabs(u))) + 1.0);
}

double hp_indicator(double u, const PointingScenario& s) {
  s.validate();
  return std::fabs(u) <= s.a_l ? 1.0 : 0.0;
}

double hp_gaussian_wide(double u, const PointingScenario& s) {
  s.validate();
  const double v = kSqrtPi * s.a_l / (kSqrt2 * s.w_l);
  const double ev = numerics::erf(v);
  const double a0 = ev * ev;
  const double w_eq2 = s.w_l * s.w_l * kSqrtPi * ev / (2.0 * v * std::exp(-v * v));
  return a0 * std::exp(-2.0 * u * u / w_eq2);
}

double hp(double u, const PointingScenario& s) {
  switch (s.effective_model()) {
    case Model::exact: return hp_exact(u, s);
    case Model::erf_approx: return hp_erf(u, s);
    case Model::indicator: return hp_indicator(u, s);
    case Model::gaussian_wide: return hp_gaussian_wide(u, s);
    case Model::autosel: break;
  }
  throw Error(errc::model_mismatch, "unresolved pointing model");
}

double fraction_at_center(const PointingScenario& s) {
  s.validate();
  const double e = numerics::erf(kSqrtPi * s.a_l / (kSqrt2 * s.w_l));
  return 0.5 * e * (e + 1.0);
}

double displacement_cdf(double a, double sigma_u) {
  if (a < 0.0) throw Error(errc::domain_error, "displacement_cdf requires a >= 0");
  if (!(sigma_u > 0.0)) throw Error(errc::domain_error, "displacement_cdf requires sigma_u > 0");
  return -std::expm1(-a * a / (2.0 * sigma_u * sigma_u));
}

HpDistribution::HpDistribution(const PointingScenario& s)
    : model_(s.effective_model()), w_l_(s.w_l), a_l_(s.a_l), sigma_u_(s.sigma_u) {
  s.validate();
  if (!(sigma_u_ > 0.0))
    throw Error(errc::degenerate_distribution,
                "sigma_u = 0 collapses the pointing loss to a point mass");
  e_ = numerics::erf(kSqrtPi * a_l_ / (kSqrt2 * w_l_));

  switch (model_) {
    case Model::erf_approx:
      support_max_ = 0.5 * e_ * (e_ + 1.0);
      break;
    case Model::indicator: {
      support_max_ = 1.0;
      const double f = displacement_cdf(a_l_, sigma_u_);
      masses_ = {{1.0, f}, {0.0, 1.0 - f}};
      break;
    }
    case Model::gaussian_wide: {
      support_max_ = e_ * e_;
      const double v = kSqrtPi * a_l_ / (kSqrt2 * w_l_);
      const double w_eq2 = w_l_ * w_l_ * kSqrtPi * e_ / (2.0 * v * std::exp(-v * v));
      xi2_ = w_eq2 / (4.0 * sigma_u_ * sigma_u_);
      break;
    }
    case Model::exact:
      throw Error(errc::model_mismatch,
                  "the exact pointing model has no closed-form loss distribution; "
                  "use Monte Carlo");
    case Model::autosel:
      throw Error(errc::model_mismatch, "unresolved pointing model");
  }
}

double HpDistribution::pdf(double h_p) const {
  if (!(h_p > 0.0) || h_p >= support_max_) return 0.0;
  switch (model_) {
    case Model::erf_approx: {
      // change of variables through u(h) = sqrt(pi)/2*a - w/sqrt(2)*erfinv(2h/E-1)
      const double v = numerics::erfinv(2.0 * h_p / e_ - 1.0);
      const double u = 0.5 * kSqrtPi * a_l_ - w_l_ / kSqrt2 * v;
      if (u <= 0.0) return 0.0;
      // f_u(u)/|dh/du| computed in log space; dh/du = -E*sqrt(2)/(w*sqrt(pi))*exp(-v^2)
      const double log_f = std::log(u) - 2.0 * std::log(sigma_u_) -
                           u * u / (2.0 * sigma_u_ * sigma_u_) + v * v +
                           std::log(w_l_ * kSqrtPi / (e_ * kSqrt2));
      return std::exp(log_f);
    }
    case Model::indicator: return 0.0;
    case Model::gaussian_wide:
      return xi2_ / std::pow(support_max_, xi2_) * std::pow(h_p, xi2_ - 1.0);
    default: return 0.0;
  }
}

double HpDistribution::quantile(double q) const {
  q = std::clamp(q, 0.0, 1.0);
  switch (model_) {
    case Model::erf_approx: {
      if (q <= 0.0) return 0.0;
      if (q >= 1.0) return support_max_;
      // P(h_p <= t) = P(u >= u(t)) = exp(-u(t)^2/(2 sigma^2))
      const double u = sigma_u_ * std::sqrt(-2.0 * std::log(q));
      return 0.5 * e_ *
             (numerics::erf(kSqrt2 / w_l_ * (0.5 * kSqrtPi * a_l_ - u)) + 1.0);
    }
    case Model::gaussian_wide:
      return support_max_ * std::pow(q, 1.0 / xi2_);
    default: return q * support_max_;
  }
}

HpDistribution pdf_hp(const PointingScenario& s) { return HpDistribution(s); }

double hp_pdf_published_form(double h_p, const PointingScenario& s) {
  s.validate();
  const double e = numerics::erf(kSqrtPi * s.a_l / (kSqrt2 * s.w_l));
  const double a0 = 0.5 * e * (e + 1.0);
  if (!(h_p > 0.0) || h_p >= a0) return 0.0;
  const double v = numerics::erfinv(2.0 * h_p / e - 1.0);
  const double lam = 0.5 * kPi * s.a_l - s.w_l / kSqrt2 * v;
  return std::sqrt(kPi / 2.0) * s.w_l * lam *
         std::exp(v * v - lam * lam / (2.0 * s.sigma_u * s.sigma_u));
}

HpExactCache::HpExactCache(const PointingScenario& s, std::size_t points) {
  s.validate();
  if (points < 16) throw Error(errc::domain_error, "cache needs at least 16 points");
  u_cap_ = s.a_l + 4.0 * s.w_l;
  du_ = u_cap_ / static_cast<double>(points - 1);
  values_.resize(points);
  for (std::size_t i = 0; i < points; ++i)
    values_[i] = hp_exact(static_cast<double>(i) * du_, s);

  max_build_error_ = 0.0;
  for (std::size_t i = 0; i + 1 < points; i += 8) {
    const double um = (static_cast<double>(i) + 0.5) * du_;
    const double direct = hp_exact(um, s);
    const double interpolated = (*this)(um);
    max_build_error_ = std::max(max_build_error_, std::fabs(direct - interpolated));
  }
  if (max_build_error_ >= 1e-5)
    throw Error(errc::numeric_error, "pointing cache interpolation error above 1e-5");
}

double HpExactCache::operator()(double u) const {
  u = std::fabs(u);
  if (u >= u_cap_) return 0.0;
  const double t = u / du_;
  const std::size_t i = std::min(static_cast<std::size_t>(t), values_.size() - 2);
  const double frac = t - static_cast<double>(i);
  return (1.0 - frac) * values_[i] + frac * values_[i + 1];
}

}  // namespace irsfso::pointing
