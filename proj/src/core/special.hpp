#pragma once

#include <utility>

namespace irsfso::numerics {

// Gauss error function and complement (thin wrappers over libm).
double erf(double x);
double erfc(double x);

// Inverse error function on (-1, 1). Rational initial approximation refined
// by Halley iterations; erf(erfinv(p)) == p to ~1e-15. Throws on |p| >= 1.
double erfinv(double p);

// Inverse standard normal CDF (used by erfinv and the samplers).
double norm_quantile(double q);

// log Gamma for x > 0. Throws at non-positive integers (poles).
double ln_gamma(double x);

// log |Gamma(x)| together with the sign of Gamma(x); supports negative
// non-integer arguments via the reflection formula.
struct SignedLogGamma {
  double log_abs;
  int sign;  // +1 or -1
};
SignedLogGamma ln_gamma_signed(double x);

// Generalized hypergeometric 1F2(a; b1, b2; x), summed by term recurrence
// until the running term drops below 1e-15 of the partial sum. Converges for
// every finite x; throws non_convergence after 10000 terms (out-of-regime
// argument, e.g. overflow range).
double hyp1f2(double a, double b1, double b2, double x);

// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
double gamma_p(double a, double x);

}  // namespace irsfso::numerics
