#pragma once

#include <complex>

#include "geometry.hpp"

namespace irsfso::beam {

// Collimated Gaussian beam launched from its waist. Fields use the
// convention E = amplitude * exp(-i * phase) with the propagation phase of
// propagation_phase(); densities are normalized so the transverse power
// integral is 1 at every plane.
struct BeamParams {
  double w0;          // waist radius [m]
  double wavelength;  // [m]
  double e0;          // on-axis field amplitude at the waist

  // e0 <= 0 selects the unit-power normalization e0 = sqrt(sqrt(2)/(sqrt(pi)*w0)).
  BeamParams(double w0_, double wavelength_, double e0_ = 0.0);

  double wavenumber() const;      // k = 2*pi/lambda
  double rayleigh_range() const;  // z0 = pi*w0^2/lambda
};

struct FieldSample {
  double amplitude;  // >= 0
  double phase;      // unwrapped propagation phase [rad]

  double wrapped_phase() const;           // in (-pi, pi]
  std::complex<double> value() const;     // amplitude * exp(-i*phase)
};

// w(z) = w0*sqrt(1 + (z/z0)^2); even in z.
double beam_width(double z, const BeamParams& beam);

// 1/R(z) = z/(z^2 + z0^2); odd in z, zero (flat wavefront) at the waist.
double inverse_curvature(double z, const BeamParams& beam);

// Gouy phase atan(z/z0) in (-pi/2, pi/2).
double gouy_phase(double z, const BeamParams& beam);

// psi(y, z) = -k*z - k*y^2/(2R(z)) + gouy(z); the field is exp(-i*psi).
double propagation_phase(double y, double z, const BeamParams& beam);

FieldSample field(double y, double z, const BeamParams& beam);

// Transverse power density, unit total power at every z.
double power_density(double y, double z, const BeamParams& beam);

// Power density along the tilted reflector line (the cos(theta_i)-projected
// beam profile). Valid when d_t2r dominates y*sin(theta_i); sets
// *regime_warning when the geometry strays from that regime.
double irs_power_density(double y, const IrsGeometry& geometry, const BeamParams& beam,
                         bool* regime_warning = nullptr);

}  // namespace irsfso::beam
