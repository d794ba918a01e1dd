#include "montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <memory>

#include "errors.hpp"
#include "parallel.hpp"
#include "sampling.hpp"

namespace irsfso::montecarlo {

using channel::LinkBudget;
using channel::TurbulenceModel;
using numerics::RngStream;
using pointing::PointingScenario;

void McConfig::validate() const {
  if (n_trials < 1000) throw Error(errc::domain_error, "mc.trials must be >= 1000");
  if (workers < 1) throw Error(errc::domain_error, "mc.workers must be >= 1");
}

double sample_ha(const TurbulenceModel& turbulence, RngStream& rng) {
  if (turbulence.kind == TurbulenceModel::Kind::lognormal) {
    return std::exp(numerics::sample_normal(0.0, 4.0 * turbulence.sigma2(), rng));
  }
  const double x = numerics::sample_gamma(turbulence.alpha, 1.0 / turbulence.alpha, rng);
  const double y = numerics::sample_gamma(turbulence.beta, 1.0 / turbulence.beta, rng);
  return x * y;
}

McEstimate simulate_outage(const LinkBudget& budget, const TurbulenceModel& turbulence,
                           const PointingScenario& scenario, const McConfig& cfg) {
  budget.validate();
  scenario.validate();
  cfg.validate();

  PointingScenario sc = scenario;
  if (cfg.pointing_override) sc.model = *cfg.pointing_override;
  const pointing::Model model = sc.effective_model();

  std::unique_ptr<pointing::HpExactCache> cache;
  if (model == pointing::Model::exact && cfg.n_trials > 100'000)
    cache = std::make_unique<pointing::HpExactCache>(sc);

  const auto hp_of = [&](double u) {
    if (model == pointing::Model::exact)
      return cache ? (*cache)(u) : pointing::hp_exact(u, sc);
    PointingScenario tmp = sc;
    tmp.model = model;
    return pointing::hp(u, tmp);
  };

  const double h0 = channel::outage_threshold(budget);
  const std::uint64_t n = cfg.n_trials;

  std::atomic<std::uint64_t> failures{0};
  parallel_chunks(n, cfg.workers, [&](std::size_t lo, std::size_t hi) {
    std::uint64_t local = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      RngStream rng(cfg.seed, i);
      const double u = sc.sigma_u > 0.0 ? numerics::sample_rayleigh(sc.sigma_u, rng) : 0.0;
      const double ha = sample_ha(turbulence, rng);
      const double h = budget.h_l * ha * hp_of(u);
      if (h < h0) ++local;
    }
    failures.fetch_add(local, std::memory_order_relaxed);
  });

  McEstimate est;
  est.n_trials = n;
  est.p_out = static_cast<double>(failures.load()) / static_cast<double>(n);
  est.std_error = std::sqrt(est.p_out * (1.0 - est.p_out) / static_cast<double>(n));
  return est;
}

EmpiricalCdf::EmpiricalCdf(std::vector<double> samples) : sorted_(std::move(samples)) {
  if (sorted_.empty()) throw Error(errc::domain_error, "empirical CDF needs samples");
  std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCdf::operator()(double x) const {
  const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
  return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

double ks_distance(const EmpiricalCdf& empirical, const std::function<double(double)>& cdf) {
  const auto& xs = empirical.sorted_samples();
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = cdf(xs[i]);
    const double hi = static_cast<double>(i + 1) / n;
    const double lo = static_cast<double>(i) / n;
    d = std::max(d, std::max(std::fabs(hi - f), std::fabs(f - lo)));
  }
  return d;
}

}  // namespace irsfso::montecarlo
