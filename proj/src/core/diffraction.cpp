#include "diffraction.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "errors.hpp"
#include "parallel.hpp"
#include "quadrature.hpp"

namespace irsfso::diffraction {

using beam::BeamParams;
using beam::FieldSample;

namespace {

constexpr double kPi = std::numbers::pi;

// 7-point Gauss-Legendre on [-1, 1]
constexpr double kGlx[7] = {-0.949107912342758524526189684047851,
                            -0.741531185599394439863864773280788,
                            -0.405845151377397166906606412076961,
                            0.0,
                            0.405845151377397166906606412076961,
                            0.741531185599394439863864773280788,
                            0.949107912342758524526189684047851};
constexpr double kGlw[7] = {0.129484966168869693270611432679082,
                            0.279705391489276667901467771423780,
                            0.381830050505118944950369775488975,
                            0.417959183673469387755102040816327,
                            0.381830050505118944950369775488975,
                            0.279705391489276667901467771423780,
                            0.129484966168869693270611432679082};

struct Integrand {
  const IrsGeometry* geom;
  const BeamParams* beam_params;
  const irs::PhaseProfile* profile;
  double r0y, r0z;  // receiver point
  double ci, si;

  // smooth (unwrapped) total phase of the wavelet sum at reflector offset y
  double phase(double y) const {
    const double dy = r0y - y;
    const double dist = std::sqrt(dy * dy + r0z * r0z);
    const double k = beam_params->wavenumber();
    const double psi_in = beam::propagation_phase(y * ci, geom->d_t2r + y * si, *beam_params);
    return k * dist + (*profile)(y)-psi_in;
  }

  // amplitude with the spreading and aperture-obliquity factors
  double amplitude(double y) const {
    const double dy = r0y - y;
    const double dist = std::sqrt(dy * dy + r0z * r0z);
    const double w = beam::beam_width(geom->d_t2r + y * si, *beam_params);
    const double yh = y * ci;
    const double a_in =
        beam_params->e0 * std::sqrt(beam_params->w0 / w) * std::exp(-yh * yh / (w * w));
    const double obliquity = r0z / dist;
    return a_in * obliquity / std::sqrt(dist);
  }
};

// Envelope truncation: outward from the incident-spot center until the
// envelope falls below cutoff * peak, clamped to the reflector extent.
std::pair<double, double> integration_range(const IrsGeometry& geom, const BeamParams& bp,
                                            double cutoff) {
  const double ci = std::cos(geom.theta_i);
  const double w = beam::beam_width(geom.d_t2r, bp);
  double reach = w * std::sqrt(std::log(1.0 / cutoff)) / ci;
  reach *= 1.05;
  const double lim = std::isfinite(geom.a_r) ? geom.a_r : reach;
  return {-std::min(reach, lim), std::min(reach, lim)};
}

}  // namespace

FieldSample huygens_fresnel_field(double y_tilde, const IrsGeometry& geometry,
                                  const BeamParams& beam_params, const irs::PhaseProfile& profile,
                                  const DiffractionOptions& opts) {
  geometry.validate();

  Integrand f;
  f.geom = &geometry;
  f.beam_params = &beam_params;
  f.profile = &profile;
  const double cr = std::cos(geometry.theta_r), sr = std::sin(geometry.theta_r);
  f.r0y = y_tilde * cr + geometry.d_r2l * sr;
  f.r0z = -y_tilde * sr + geometry.d_r2l * cr;
  f.ci = std::cos(geometry.theta_i);
  f.si = std::sin(geometry.theta_i);

  const auto [lo, hi] = integration_range(geometry, beam_params, opts.amplitude_cutoff);

  // Phase-resolved node list: bisect intervals until both the endpoint
  // advance and the midpoint sag are below the phase step. The cancellation
  // between the designed shift and the path phase is discovered here, not
  // assumed.
  struct Node {
    double y, phi;
  };
  std::vector<Node> nodes;
  const int n0 = std::max(2, opts.initial_panels);
  nodes.reserve(static_cast<std::size_t>(n0) + 1);
  std::size_t evals = 0;
  auto eval_node = [&](double y) -> Node {
    ++evals;
    return {y, f.phase(y)};
  };
  for (int i = 0; i <= n0; ++i)
    nodes.push_back(eval_node(lo + (hi - lo) * static_cast<double>(i) / n0));

  std::vector<Node> refined;
  refined.reserve(nodes.size() * 2);
  // iterative stack-based refinement, left to right
  std::vector<std::pair<Node, Node>> stack;
  refined.push_back(nodes.front());
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    stack.push_back({nodes[i], nodes[i + 1]});
    while (!stack.empty()) {
      auto [a, b] = stack.back();
      stack.pop_back();
      if (evals > opts.max_nodes)
        throw Error(errc::quadrature_limit,
                    "wavelet integration exceeded the node budget; the phase profile "
                    "oscillates faster than the sampler can resolve");
      const Node m = eval_node(0.5 * (a.y + b.y));
      const bool flat = std::fabs(b.phi - a.phi) <= opts.phase_step &&
                        std::fabs(m.phi - 0.5 * (a.phi + b.phi)) <= 0.25 * opts.phase_step;
      if (flat || (b.y - a.y) < 1e-9 * (hi - lo)) {
        refined.push_back(b);
      } else {
        stack.push_back({m, b});
        stack.push_back({a, m});
      }
    }
  }

  // fixed-order panels between adjacent refined nodes
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t i = 0; i + 1 < refined.size(); ++i) {
    const double a = refined[i].y, b = refined[i + 1].y;
    if (b <= a) continue;
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double re = 0.0, im = 0.0;
    for (int g = 0; g < 7; ++g) {
      const double y = c + h * kGlx[g];
      const double amp = f.amplitude(y);
      const double ph = f.phase(y);
      re += kGlw[g] * amp * std::cos(ph);
      im += kGlw[g] * amp * std::sin(ph);
    }
    acc += std::complex<double>(re * h, im * h);
    evals += 7;
    if (evals > opts.max_nodes)
      throw Error(errc::quadrature_limit, "wavelet integration exceeded the node budget");
  }

  const double varsigma = std::sqrt(f.ci / cr);
  // 1/j = -j
  const std::complex<double> field_value =
      std::complex<double>(0.0, -1.0) * varsigma / std::sqrt(beam_params.wavelength) * acc;

  return {std::abs(field_value), -std::arg(field_value)};
}

RxProfile huygens_fresnel_profile(const std::vector<double>& y_tilde_grid,
                                  const IrsGeometry& geometry, const BeamParams& beam_params,
                                  const irs::PhaseProfile& profile,
                                  const DiffractionOptions& opts) {
  RxProfile out;
  out.method = RxProfile::Method::huygens_fresnel;
  out.y = y_tilde_grid;
  out.density.assign(y_tilde_grid.size(), 0.0);
  parallel_chunks(y_tilde_grid.size(), opts.workers, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const FieldSample s =
          huygens_fresnel_field(y_tilde_grid[i], geometry, beam_params, profile, opts);
      out.density[i] = s.amplitude * s.amplitude;
    }
  });
  return out;
}

double intercepted_power(const IrsGeometry& geometry, const BeamParams& beam_params) {
  geometry.validate();
  const auto [lo, hi] = integration_range(geometry, beam_params, 1e-9);
  const double ci = std::cos(geometry.theta_i), si = std::sin(geometry.theta_i);
  const auto flux = [&](double y) {
    const FieldSample s = beam::field(y * ci, geometry.d_t2r + y * si, beam_params);
    return s.amplitude * s.amplitude * ci;
  };
  numerics::QuadratureSpec spec;
  spec.abs_tol = 1e-12;
  return numerics::integrate_checked(flux, lo, hi, spec);
}

RxProfile geometric_optics_profile(const std::vector<double>& y_tilde_grid,
                                   const IrsGeometry& geometry, const BeamParams& beam_params,
                                   double w_tilde0) {
  geometry.validate();
  if (!(w_tilde0 > 0.0)) throw Error(errc::domain_error, "w_tilde0 must be > 0");
  const BeamParams virt(w_tilde0, beam_params.wavelength);
  const double w_rx = beam::beam_width(geometry.d_f, virt);
  const double p = intercepted_power(geometry, beam_params);

  RxProfile out;
  out.method = RxProfile::Method::geometric_optics;
  out.y = y_tilde_grid;
  out.density.resize(y_tilde_grid.size());
  const double norm = p * std::numbers::sqrt2 / (std::sqrt(kPi) * w_rx);
  for (std::size_t i = 0; i < y_tilde_grid.size(); ++i) {
    const double yt = y_tilde_grid[i];
    out.density[i] = norm * std::exp(-2.0 * yt * yt / (w_rx * w_rx));
  }
  return out;
}

namespace {

double interp(const RxProfile& p, double x) {
  const auto it = std::lower_bound(p.y.begin(), p.y.end(), x);
  if (it == p.y.begin()) return p.density.front();
  if (it == p.y.end()) return p.density.back();
  const std::size_t i = static_cast<std::size_t>(it - p.y.begin());
  const double x0 = p.y[i - 1], x1 = p.y[i];
  const double t = (x - x0) / (x1 - x0);
  return (1.0 - t) * p.density[i - 1] + t * p.density[i];
}

}  // namespace

double compare_profiles(const RxProfile& a, const RxProfile& b, double region) {
  if (!(region > 0.0)) throw Error(errc::domain_error, "comparison region must be > 0");

  double peak = 0.0;
  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = 0; i < a.y.size(); ++i) {
    if (std::fabs(a.y[i]) > region) continue;
    const double da = a.density[i];
    const double db = interp(b, a.y[i]);
    pts.emplace_back(da, db);
    peak = std::max(peak, std::max(da, db));
  }
  if (pts.empty()) throw Error(errc::domain_error, "no samples inside the comparison region");

  double acc = 0.0;
  for (const auto& [da, db] : pts) {
    const double denom = std::max(0.5 * (da + db), 1e-12 * peak);
    const double dev = (da - db) / denom;
    acc += dev * dev;
  }
  return std::sqrt(acc / static_cast<double>(pts.size()));
}

void normalize_power(RxProfile& profile, double total_power) {
  if (profile.y.size() < 2) throw Error(errc::domain_error, "profile needs at least two samples");
  double integral = 0.0;
  for (std::size_t i = 0; i + 1 < profile.y.size(); ++i)
    integral += 0.5 * (profile.density[i] + profile.density[i + 1]) *
                (profile.y[i + 1] - profile.y[i]);
  if (!(integral > 0.0)) throw Error(errc::numeric_error, "profile has no power to normalize");
  const double s = total_power / integral;
  for (double& d : profile.density) d *= s;
}

}  // namespace irsfso::diffraction
