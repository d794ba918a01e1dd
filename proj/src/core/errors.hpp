#pragma once

#include <stdexcept>
#include <string>

namespace irsfso {

enum class errc {
  domain_error = 1,
  infeasible_focus,
  out_of_regime,
  non_convergence,
  quadrature_limit,
  model_mismatch,
  degenerate_distribution,
  config_error,
  numeric_error,
  io_error,
};

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

// Thrown when adaptive integration exhausts its subdivision budget. Carries
// the best estimate so callers can decide whether it is still usable.
class QuadratureLimitError : public Error {
public:
  QuadratureLimitError(double best, double bound, const std::string& what)
      : Error(errc::quadrature_limit, what), best_estimate(best), error_bound(bound) {}

  double best_estimate;
  double error_bound;
};

} // namespace irsfso
