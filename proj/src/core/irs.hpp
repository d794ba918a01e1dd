#pragma once

#include "beam.hpp"
#include "geometry.hpp"

namespace irsfso::irs {

struct EquivalentWidths {
  double w_irs;         // beam width along the tilted reflector
  double w_eq_theta_r;  // reflector spot projected onto the reflected axis
};

EquivalentWidths equivalent_widths(const IrsGeometry& geometry, const beam::BeamParams& beam);

// Waist of the outgoing beam that reaches width w_eq_theta_r exactly at the
// receiver distance (the converging root). Throws infeasible_focus when the
// requested distance exceeds the diffraction-limited reach of the spot.
double virtual_waist_exact(const IrsGeometry& geometry, const beam::BeamParams& beam);

struct VirtualBeam {
  double w_tilde0;         // waist of the outgoing (virtual-source) beam
  double d_f;              // waist position beyond the receiver
  bool far_field_warning;  // receiver closer than 10 Rayleigh ranges of the waist
};

// Far-field solution for a beam that is w_l wide at the receiver while still
// matching the reflector spot; w_l must lie in [waist-at-receiver, spot width).
VirtualBeam virtual_waist_for_target_width(const IrsGeometry& geometry,
                                           const beam::BeamParams& beam, double w_l);

// Phase shift applied across the reflector, as a pure evaluator of the
// unwrapped profile. Built from the incident leg and the outgoing
// (virtual-source) leg; the raw constructor accepts signed distances so the
// degenerate flat-mirror configuration can be expressed.
class PhaseProfile {
public:
  struct Leg {
    double theta;  // axis angle from the surface normal
    double dist;   // signed distance from the surface center to the source
    double waist;
  };

  PhaseProfile(Leg incident, Leg outgoing, double wavelength, double valid_halfwidth);

  double operator()(double y) const;

  double valid_min() const { return -valid_halfwidth_; }
  double valid_max() const { return valid_halfwidth_; }

  const Leg& incident() const { return incident_; }
  const Leg& outgoing() const { return outgoing_; }

private:
  Leg incident_;
  Leg outgoing_;
  beam::BeamParams in_beam_;
  beam::BeamParams out_beam_;
  double valid_halfwidth_;
};

// Profile that makes the reflected beam converge toward a waist w_tilde0 at
// distance d_r2l + d_f along the reflection direction.
PhaseProfile phase_shift_profile(const IrsGeometry& geometry, const beam::BeamParams& beam,
                                 double w_tilde0);

}  // namespace irsfso::irs
