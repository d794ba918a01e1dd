#include "beam.hpp"

#include <cmath>
#include <numbers>

#include "errors.hpp"

namespace irsfso::beam {

namespace {
constexpr double kPi = std::numbers::pi;
const double kSqrtPi = std::sqrt(kPi);
}  // namespace

BeamParams::BeamParams(double w0_, double wavelength_, double e0_)
    : w0(w0_), wavelength(wavelength_), e0(e0_) {
  if (!(w0 > 0.0)) throw Error(errc::domain_error, "beam.w0 must be > 0");
  if (!(wavelength > 0.0)) throw Error(errc::domain_error, "beam.wavelength must be > 0");
  if (e0 <= 0.0) e0 = std::sqrt(std::numbers::sqrt2 / (kSqrtPi * w0));
  if (!std::isfinite(e0)) throw Error(errc::domain_error, "beam.e0 must be finite");
}

double BeamParams::wavenumber() const { return 2.0 * kPi / wavelength; }

double BeamParams::rayleigh_range() const { return kPi * w0 * w0 / wavelength; }

double FieldSample::wrapped_phase() const {
  double p = std::remainder(phase, 2.0 * kPi);
  if (p <= -kPi) p += 2.0 * kPi;
  return p;
}

std::complex<double> FieldSample::value() const {
  return std::polar(amplitude, -wrapped_phase());
}

double beam_width(double z, const BeamParams& beam) {
  const double z0 = beam.rayleigh_range();
  const double r = z / z0;
  return beam.w0 * std::sqrt(1.0 + r * r);
}

double inverse_curvature(double z, const BeamParams& beam) {
  const double z0 = beam.rayleigh_range();
  return z / (z * z + z0 * z0);
}

double gouy_phase(double z, const BeamParams& beam) {
  return std::atan(z / beam.rayleigh_range());
}

double propagation_phase(double y, double z, const BeamParams& beam) {
  const double k = beam.wavenumber();
  return -k * z - 0.5 * k * y * y * inverse_curvature(z, beam) + gouy_phase(z, beam);
}

FieldSample field(double y, double z, const BeamParams& beam) {
  const double w = beam_width(z, beam);
  const double amp = beam.e0 * std::sqrt(beam.w0 / w) * std::exp(-(y * y) / (w * w));
  return {amp, propagation_phase(y, z, beam)};
}

double power_density(double y, double z, const BeamParams& beam) {
  const double w = beam_width(z, beam);
  return std::numbers::sqrt2 / (kSqrtPi * w) * std::exp(-2.0 * y * y / (w * w));
}

double irs_power_density(double y, const IrsGeometry& geometry, const BeamParams& beam,
                         bool* regime_warning) {
  geometry.validate();
  const double ci = std::cos(geometry.theta_i);
  const double w = beam_width(geometry.d_t2r, beam);
  if (regime_warning) {
    const double extent = std::isfinite(geometry.a_r) ? geometry.a_r : 6.0 * w / ci;
    *regime_warning = geometry.d_t2r < 100.0 * extent * std::sin(geometry.theta_i);
  }
  return std::numbers::sqrt2 * ci / (kSqrtPi * w) * std::exp(-2.0 * ci * ci * y * y / (w * w));
}

}  // namespace irsfso::beam
