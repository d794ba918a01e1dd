#pragma once

#include <cmath>
#include <limits>

#include "errors.hpp"

namespace irsfso {

// Reflection geometry in the yz-plane. The surface lies on the y-axis with
// its normal along +z; the transmitter sits at distance d_t2r along the
// incidence direction and the receiver at distance d_r2l along the
// reflection direction. a_r is the surface half-length (may be infinite).
// d_f is an optional focal offset: the reflected beam converges to a waist
// at distance d_r2l + d_f, i.e. d_f beyond the receiver.
struct IrsGeometry {
  double theta_i = 0.0;
  double theta_r = 0.0;
  double d_t2r = 0.0;
  double d_r2l = 0.0;
  double a_r = std::numeric_limits<double>::infinity();
  double d_f = 0.0;

  void validate() const {
    constexpr double half_pi = 1.5707963267948966;
    if (!(theta_i >= 0.0 && theta_i < half_pi))
      throw Error(errc::domain_error, "geometry.theta_i must be in [0, pi/2)");
    if (!(theta_r >= 0.0 && theta_r < half_pi))
      throw Error(errc::domain_error, "geometry.theta_r must be in [0, pi/2)");
    if (!(d_t2r > 0.0)) throw Error(errc::domain_error, "geometry.d_t2r must be > 0");
    if (!(d_r2l > 0.0)) throw Error(errc::domain_error, "geometry.d_r2l must be > 0");
    if (!(a_r > 0.0)) throw Error(errc::domain_error, "geometry.a_r must be > 0");
    if (d_f < 0.0 || !std::isfinite(d_f))
      throw Error(errc::domain_error, "geometry.d_f must be finite and >= 0");
  }
};

}  // namespace irsfso
