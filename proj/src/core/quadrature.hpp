#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <set>
#include <string>
#include <utility>

#include "errors.hpp"

namespace irsfso::numerics {

struct QuadratureSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  int max_subdivisions = 2000;

  void validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
      throw Error(errc::domain_error, "quadrature tolerances must be > 0");
    if (max_subdivisions < 1)
      throw Error(errc::domain_error, "max_subdivisions must be >= 1");
  }
};

struct IntegrationResult {
  double value = 0.0;
  double error_bound = 0.0;
  int subdivisions = 0;
  bool converged = false;
};

namespace detail {

// Gauss-Kronrod 7-15 pair on [-1, 1]. Nodes are symmetric; xgk[i] are the
// positive abscissae, wgk the Kronrod weights, wg the embedded Gauss weights
// (nonzero on odd Kronrod indices).
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <class F>
void gk15(const F& f, double a, double b, double& value, double& err) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);

  const double fc = f(c);
  double resk = kWgk[7] * fc;
  double resg = kWg[3] * fc;
  double resabs = std::fabs(resk);

  for (int i = 0; i < 7; ++i) {
    const double dx = h * kXgk[i];
    const double f1 = f(c - dx);
    const double f2 = f(c + dx);
    const double fsum = f1 + f2;
    resk += kWgk[i] * fsum;
    resabs += kWgk[i] * (std::fabs(f1) + std::fabs(f2));
    if (i % 2 == 1) resg += kWg[i / 2] * fsum;
  }

  value = resk * h;
  const double diff = std::fabs((resk - resg) * h);
  resabs *= std::fabs(h);
  // QUADPACK-style sharpened error estimate
  err = diff;
  if (resabs > 0.0 && diff > 0.0) {
    const double scaled = std::pow(200.0 * diff / resabs, 1.5);
    err = resabs * std::min(1.0, scaled);
  }
  if (err < 50.0 * std::numeric_limits<double>::epsilon() * resabs)
    err = 50.0 * std::numeric_limits<double>::epsilon() * resabs;
}

struct Panel {
  double err;
  int id;  // deterministic tie-break
  double a, b, value;
  bool operator<(const Panel& o) const {
    if (err != o.err) return err > o.err;  // largest error first
    return id < o.id;
  }
};

}  // namespace detail

// Globally adaptive Gauss-Kronrod integration of f over [a, b]. The worst
// panel (largest error estimate) is bisected until the summed error bound
// meets max(abs_tol, rel_tol*|estimate|) or the subdivision budget runs out.
// Fully deterministic for fixed inputs.
template <class F>
IntegrationResult integrate_adaptive(const F& f, double a, double b,
                                     const QuadratureSpec& spec = {}) {
  spec.validate();
  if (!(a <= b)) throw Error(errc::domain_error, "integration bounds must satisfy a <= b");

  IntegrationResult res;
  if (a == b) {
    res.converged = true;
    return res;
  }

  std::set<detail::Panel> panels;
  int next_id = 0;

  auto push = [&](double lo, double hi) {
    detail::Panel p;
    p.a = lo;
    p.b = hi;
    p.id = next_id++;
    detail::gk15(f, lo, hi, p.value, p.err);
    panels.insert(p);
  };

  push(a, b);
  int subdivisions = 0;

  auto totals = [&]() {
    double v = 0.0, e = 0.0;
    for (const auto& p : panels) {
      v += p.value;
      e += p.err;
    }
    return std::pair{v, e};
  };

  while (true) {
    auto [value, err] = totals();
    const double target = std::max(spec.abs_tol, spec.rel_tol * std::fabs(value));
    if (err <= target) {
      res.value = value;
      res.error_bound = err;
      res.subdivisions = subdivisions;
      res.converged = true;
      return res;
    }
    if (subdivisions >= spec.max_subdivisions) {
      res.value = value;
      res.error_bound = err;
      res.subdivisions = subdivisions;
      res.converged = false;
      return res;
    }
    auto worst = *panels.begin();
    panels.erase(panels.begin());
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // interval no longer splittable; keep as-is and accept its error
      panels.insert(worst);
      auto [v2, e2] = totals();
      res.value = v2;
      res.error_bound = e2;
      res.subdivisions = subdivisions;
      res.converged = e2 <= std::max(spec.abs_tol, spec.rel_tol * std::fabs(v2));
      return res;
    }
    push(worst.a, mid);
    push(mid, worst.b);
    ++subdivisions;
  }
}

// Same as integrate_adaptive but throws QuadratureLimitError when the
// subdivision budget is exhausted before the tolerance is met.
template <class F>
double integrate_checked(const F& f, double a, double b, const QuadratureSpec& spec = {}) {
  const IntegrationResult r = integrate_adaptive(f, a, b, spec);
  if (!r.converged)
    throw QuadratureLimitError(r.value, r.error_bound,
                               "adaptive quadrature hit the subdivision limit (" +
                                   std::to_string(r.subdivisions) + " bisections)");
  return r.value;
}

}  // namespace irsfso::numerics
