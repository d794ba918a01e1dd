#include "special.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "errors.hpp"

namespace irsfso::numerics {

double erf(double x) { return std::erf(x); }
double erfc(double x) { return std::erfc(x); }

namespace {

// Acklam's rational approximation to the standard normal quantile,
// accurate to ~1.15e-9 before polishing.
double norm_quantile_seed(double q) {
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double plow = 0.02425;

  if (q < plow) {
    const double r = std::sqrt(-2.0 * std::log(q));
    return (((((c[0] * r + c[1]) * r + c[2]) * r + c[3]) * r + c[4]) * r + c[5]) /
           ((((d[0] * r + d[1]) * r + d[2]) * r + d[3]) * r + 1.0);
  }
  if (q > 1.0 - plow) {
    const double r = std::sqrt(-2.0 * std::log(1.0 - q));
    return -(((((c[0] * r + c[1]) * r + c[2]) * r + c[3]) * r + c[4]) * r + c[5]) /
           ((((d[0] * r + d[1]) * r + d[2]) * r + d[3]) * r + 1.0);
  }
  const double u = q - 0.5;
  const double r = u * u;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * u /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

}  // namespace

double norm_quantile(double q) {
  if (!(q > 0.0 && q < 1.0))
    throw Error(errc::domain_error, "norm_quantile requires q in (0, 1)");

  double x = norm_quantile_seed(q);
  // Halley polish against Phi(x) = erfc(-x/sqrt(2))/2
  for (int it = 0; it < 2; ++it) {
    const double e = 0.5 * std::erfc(-x * std::numbers::sqrt2 / 2.0) - q;
    const double u = e * std::sqrt(2.0 * std::numbers::pi) * std::exp(0.5 * x * x);
    x -= u / (1.0 + 0.5 * x * u);
  }
  return x;
}

double erfinv(double p) {
  if (!(p > -1.0 && p < 1.0))
    throw Error(errc::domain_error, "erfinv requires p in (-1, 1)");
  if (p == 0.0) return 0.0;
  return norm_quantile(0.5 * (p + 1.0)) / std::numbers::sqrt2;
}

double ln_gamma(double x) {
  if (x <= 0.0 && x == std::floor(x))
    throw Error(errc::domain_error, "ln_gamma pole at non-positive integer " + std::to_string(x));
  return std::lgamma(x);
}

SignedLogGamma ln_gamma_signed(double x) {
  if (x <= 0.0 && x == std::floor(x))
    throw Error(errc::domain_error, "gamma pole at non-positive integer " + std::to_string(x));
  if (x > 0.0) return {std::lgamma(x), 1};
  // Gamma(x) alternates sign between consecutive negative integers:
  // negative on (-1,0), positive on (-2,-1), ...
  const double n = std::floor(-x);
  const int sign = (static_cast<long long>(n) % 2 == 0) ? -1 : 1;
  return {std::lgamma(x), sign};
}

double hyp1f2(double a, double b1, double b2, double x) {
  if ((b1 <= 0.0 && b1 == std::floor(b1)) || (b2 <= 0.0 && b2 == std::floor(b2)))
    throw Error(errc::domain_error, "hyp1f2 lower parameters must not be non-positive integers");
  if (!std::isfinite(x)) throw Error(errc::domain_error, "hyp1f2 requires finite x");
  if (x == 0.0) return 1.0;

  constexpr int kMaxTerms = 10000;
  constexpr double kTol = 1e-15;

  double term = 1.0;
  double sum = 1.0;
  double comp = 0.0;  // Kahan compensation
  int small_streak = 0;

  for (int n = 0; n < kMaxTerms; ++n) {
    term *= (a + n) * x / ((b1 + n) * (b2 + n) * (n + 1.0));
    if (!std::isfinite(term))
      throw Error(errc::non_convergence, "hyp1f2 term overflow (argument out of range)");
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    if (std::fabs(term) <= kTol * std::fabs(sum)) {
      if (++small_streak >= 2 && n >= 2) return sum;
    } else {
      small_streak = 0;
    }
  }
  throw Error(errc::non_convergence, "hyp1f2 did not converge within 10000 terms");
}

double gamma_p(double a, double x) {
  if (!(a > 0.0)) throw Error(errc::domain_error, "gamma_p requires a > 0");
  if (x < 0.0) throw Error(errc::domain_error, "gamma_p requires x >= 0");
  if (x == 0.0) return 0.0;

  const double lga = std::lgamma(a);
  if (x < a + 1.0) {
    // series for P(a, x)
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int n = 0; n < 500; ++n) {
      ap += 1.0;
      del *= x / ap;
      sum += del;
      if (std::fabs(del) < std::fabs(sum) * 1e-16)
        return sum * std::exp(-x + a * std::log(x) - lga);
    }
    throw Error(errc::non_convergence, "gamma_p series did not converge");
  }
  // Lentz continued fraction for Q(a, x)
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) {
      const double q = std::exp(-x + a * std::log(x) - lga) * h;
      return 1.0 - q;
    }
  }
  throw Error(errc::non_convergence, "gamma_p continued fraction did not converge");
}

}  // namespace irsfso::numerics
