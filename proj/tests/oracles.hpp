// Test-side oracles, independent of the library implementation paths they
// check: extended-precision series, root bracketing, and a Newton solver for
// the two-constraint focusing system.

#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>

namespace oracles {

// 1F2 by direct Pochhammer products in extended precision (no term
// recurrence, unlike the library).
inline long double hyp1f2_direct(long double a, long double b1, long double b2, long double x,
                                 int terms = 200) {
  long double sum = 0.0L;
  for (int n = terms; n >= 0; --n) {
    long double num = 1.0L, den = 1.0L;
    for (int j = 0; j < n; ++j) {
      num *= (a + j) * x;
      den *= (b1 + j) * (b2 + j) * (j + 1);
    }
    sum += num / den;
  }
  return sum;
}

// erf from its Maclaurin series in long double.
inline long double erf_series(long double x, int terms = 200) {
  const long double two_over_sqrt_pi = 1.1283791670955125738961589031215L;
  long double term = x;
  long double sum = 0.0L;
  for (int n = 0; n < terms; ++n) {
    sum += term / (2 * n + 1);
    term *= -x * x / (n + 1);
  }
  return two_over_sqrt_pi * sum;
}

// ln Gamma via the log of a high-order product/Stirling hybrid.
inline long double ln_gamma_series(long double x) {
  // shift up for Stirling accuracy
  long double shift = 0.0L;
  while (x < 20.0L) {
    shift -= std::log(x);
    x += 1.0L;
  }
  const long double inv = 1.0L / x;
  const long double inv2 = inv * inv;
  const long double half_log_two_pi = 0.91893853320467274178032973640562L;
  long double s = (x - 0.5L) * std::log(x) - x + half_log_two_pi;
  s += inv / 12.0L - inv * inv2 / 360.0L + inv * inv2 * inv2 / 1260.0L -
       inv * inv2 * inv2 * inv2 / 1680.0L;
  return s + shift;
}

// bisection root finder
inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     double tol = 1e-14, int max_iter = 200) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0) == (fhi > 0)) throw std::runtime_error("bisect: root not bracketed");
  for (int i = 0; i < max_iter && hi - lo > tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Damped 2-variable Newton iteration with finite-difference Jacobian; solves
// r1(x, y) = r2(x, y) = 0 from the given seed.
struct Newton2Result {
  double x, y;
  bool converged;
};

inline Newton2Result newton2(const std::function<double(double, double)>& r1,
                             const std::function<double(double, double)>& r2, double x,
                             double y, int max_iter = 100, double tol = 1e-12) {
  for (int it = 0; it < max_iter; ++it) {
    const double f1 = r1(x, y), f2 = r2(x, y);
    if (std::fabs(f1) < tol && std::fabs(f2) < tol) return {x, y, true};
    const double hx = 1e-7 * (std::fabs(x) + 1e-12);
    const double hy = 1e-7 * (std::fabs(y) + 1e-12);
    const double j11 = (r1(x + hx, y) - f1) / hx;
    const double j12 = (r1(x, y + hy) - f1) / hy;
    const double j21 = (r2(x + hx, y) - f2) / hx;
    const double j22 = (r2(x, y + hy) - f2) / hy;
    const double det = j11 * j22 - j12 * j21;
    if (det == 0.0) return {x, y, false};
    double dx = (-f1 * j22 + f2 * j12) / det;
    double dy = (-j11 * f2 + j21 * f1) / det;
    double damp = 1.0;
    // keep the iterate in the positive quadrant
    while ((x + damp * dx <= 0.0 || y + damp * dy < 0.0) && damp > 1e-6) damp *= 0.5;
    x += damp * dx;
    y += damp * dy;
  }
  return {x, y, false};
}

// regularized lower incomplete gamma (series / continued fraction), used by
// the fading-distribution oracles
inline double gamma_p_oracle(double a, double x) {
  if (x <= 0.0) return 0.0;
  const double lga = std::lgamma(a);
  if (x < a + 1.0) {
    double ap = a, del = 1.0 / a, sum = del;
    for (int n = 0; n < 1000; ++n) {
      ap += 1.0;
      del *= x / ap;
      sum += del;
      if (std::fabs(del) < std::fabs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - lga);
  }
  double b = x + 1.0 - a, c = 1e300, d = 1.0 / b, h = d;
  for (int i = 1; i <= 1000; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < 1e-300) d = 1e-300;
    c = b + an / c;
    if (std::fabs(c) < 1e-300) c = 1e-300;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) break;
  }
  return 1.0 - std::exp(-x + a * std::log(x) - lga) * h;
}

}  // namespace oracles
