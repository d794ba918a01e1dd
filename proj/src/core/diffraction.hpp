#pragma once

#include <cstddef>
#include <vector>

#include "beam.hpp"
#include "geometry.hpp"
#include "irs.hpp"

namespace irsfso::diffraction {

struct RxProfile {
  enum class Method { huygens_fresnel, geometric_optics };

  std::vector<double> y;        // strictly increasing receiver offsets
  std::vector<double> density;  // >= 0
  Method method = Method::huygens_fresnel;
};

struct DiffractionOptions {
  double phase_step = 0.39269908169872414;  // pi/8 per integration interval
  double amplitude_cutoff = 1e-6;           // truncation of the incident envelope
  std::size_t max_nodes = 1u << 22;         // evaluation budget per field point
  int initial_panels = 256;
  int workers = 1;
};

// Secondary-wavelet superposition of the phase-shifted reflected field at a
// receiver offset y_tilde (perpendicular to the reflection axis). The total
// integrand phase is sampled until each interval advances by at most
// phase_step, then fixed-order panels are accumulated.
beam::FieldSample huygens_fresnel_field(double y_tilde, const IrsGeometry& geometry,
                                        const beam::BeamParams& beam,
                                        const irs::PhaseProfile& profile,
                                        const DiffractionOptions& opts = {});

RxProfile huygens_fresnel_profile(const std::vector<double>& y_tilde_grid,
                                  const IrsGeometry& geometry, const beam::BeamParams& beam,
                                  const irs::PhaseProfile& profile,
                                  const DiffractionOptions& opts = {});

// Gaussian profile of width w(d_f, w_tilde0) scaled to the power the
// reflector intercepts.
RxProfile geometric_optics_profile(const std::vector<double>& y_tilde_grid,
                                   const IrsGeometry& geometry, const beam::BeamParams& beam,
                                   double w_tilde0);

// Power crossing the reflector segment [-a_r, a_r] (projected flux).
double intercepted_power(const IrsGeometry& geometry, const beam::BeamParams& beam);

// RMS pointwise relative deviation over |y| <= region, with the pointwise
// mean density as denominator (floored at 1e-12 of the peak). Profiles on
// different grids are compared by linear interpolation onto the first grid.
double compare_profiles(const RxProfile& a, const RxProfile& b, double region);

// Rescales the profile so its trapezoidal power integral equals total_power.
void normalize_power(RxProfile& profile, double total_power);

}  // namespace irsfso::diffraction
