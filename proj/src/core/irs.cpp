#include "irs.hpp"

#include <cmath>
#include <numbers>

#include "errors.hpp"

namespace irsfso::irs {

using beam::BeamParams;

namespace {
constexpr double kPi = std::numbers::pi;
}

EquivalentWidths equivalent_widths(const IrsGeometry& geometry, const BeamParams& beam_params) {
  geometry.validate();
  const double w_irs = beam::beam_width(geometry.d_t2r, beam_params) / std::cos(geometry.theta_i);
  return {w_irs, w_irs * std::cos(geometry.theta_r)};
}

double virtual_waist_exact(const IrsGeometry& geometry, const BeamParams& beam_params) {
  const auto widths = equivalent_widths(geometry, beam_params);
  const double w_eq = widths.w_eq_theta_r;
  const double lambda = beam_params.wavelength;
  const double d = geometry.d_r2l;

  // w(d, x)^2 = x^2 + (d*lambda/(pi*x))^2 = w_eq^2 has real roots iff
  // pi^2 w_eq^4 >= 4 d^2 lambda^2; q is the normalized discriminant distance.
  const double q = 4.0 * d * d * lambda * lambda / (kPi * kPi * w_eq * w_eq * w_eq * w_eq);
  if (q > 1.0)
    throw Error(errc::infeasible_focus,
                "focus distance exceeds the diffraction-limited reach of the reflector spot");
  // smaller root, written to avoid cancellation for small q
  const double w2 = 0.5 * w_eq * w_eq * q / (1.0 + std::sqrt(1.0 - q));
  return std::sqrt(w2);
}

VirtualBeam virtual_waist_for_target_width(const IrsGeometry& geometry,
                                           const BeamParams& beam_params, double w_l) {
  const auto widths = equivalent_widths(geometry, beam_params);
  const double w_eq = widths.w_eq_theta_r;
  const double lambda = beam_params.wavelength;

  if (!(w_l > 0.0)) throw Error(errc::domain_error, "target width must be > 0");
  if (w_l >= w_eq)
    throw Error(errc::out_of_regime,
                "target width must be smaller than the reflector spot (no convergence demanded)");
  double w_floor = 0.0;
  try {
    w_floor = virtual_waist_exact(geometry, beam_params);
  } catch (const Error&) {
    // full focus infeasible; the minimum reachable width at the receiver
    w_floor = std::sqrt(2.0 * geometry.d_r2l * lambda / kPi);
  }
  if (w_l < w_floor)
    throw Error(errc::out_of_regime, "target width below the focusing limit at the receiver");

  const double w_tilde0 = lambda * geometry.d_r2l / (kPi * (w_eq - w_l));
  const BeamParams virt(w_tilde0, lambda);
  const double z_r = virt.rayleigh_range();

  // w(d_f, w_tilde0) = w_l by bisection; the width is monotone for d_f >= 0.
  double lo = 0.0, hi = 10.0 * geometry.d_r2l;
  if (beam::beam_width(hi, virt) < w_l)
    throw Error(errc::out_of_regime, "target width unreachable within the search interval");
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (beam::beam_width(mid, virt) < w_l)
      lo = mid;
    else
      hi = mid;
  }
  const double d_f = 0.5 * (lo + hi);

  return {w_tilde0, d_f, geometry.d_r2l < 10.0 * z_r};
}

PhaseProfile::PhaseProfile(Leg incident, Leg outgoing, double wavelength, double valid_halfwidth)
    : incident_(incident),
      outgoing_(outgoing),
      in_beam_(incident.waist, wavelength),
      out_beam_(outgoing.waist, wavelength),
      valid_halfwidth_(valid_halfwidth) {}

double PhaseProfile::operator()(double y) const {
  const double ci = std::cos(incident_.theta), si = std::sin(incident_.theta);
  const double co = std::cos(outgoing_.theta), so = std::sin(outgoing_.theta);
  const double psi_in = beam::propagation_phase(y * ci, incident_.dist + y * si, in_beam_);
  const double psi_out = beam::propagation_phase(y * co, -(outgoing_.dist - y * so), out_beam_);
  return kPi + psi_in - psi_out;
}

PhaseProfile phase_shift_profile(const IrsGeometry& geometry, const BeamParams& beam_params,
                                 double w_tilde0) {
  geometry.validate();
  if (!(w_tilde0 > 0.0)) throw Error(errc::domain_error, "w_tilde0 must be > 0");
  PhaseProfile::Leg incident{geometry.theta_i, geometry.d_t2r, beam_params.w0};
  PhaseProfile::Leg outgoing{geometry.theta_r, geometry.d_r2l + geometry.d_f, w_tilde0};
  const double halfwidth = std::isfinite(geometry.a_r)
                               ? geometry.a_r
                               : 10.0 * beam::beam_width(geometry.d_t2r, beam_params) /
                                     std::cos(geometry.theta_i);
  return PhaseProfile(incident, outgoing, beam_params.wavelength, halfwidth);
}

}  // namespace irsfso::irs
