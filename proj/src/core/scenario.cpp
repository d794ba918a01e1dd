#include "scenario.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "diffraction.hpp"
#include "errors.hpp"
#include "irs.hpp"
#include "parallel.hpp"

namespace irsfso::scenario {

using cfg::Config;
using cfg::ResultTable;

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
double watts_to_dbm(double watts) {
  if (!(watts > 0.0)) throw Error(errc::domain_error, "power must be > 0 for dBm");
  return 10.0 * std::log10(watts * 1000.0);
}

namespace {

pointing::Model parse_model(const std::string& name, const std::string& key) {
  if (name == "exact") return pointing::Model::exact;
  if (name == "erf" || name == "erf_approx") return pointing::Model::erf_approx;
  if (name == "indicator") return pointing::Model::indicator;
  if (name == "gaussian" || name == "gaussian_wide") return pointing::Model::gaussian_wide;
  if (name == "auto") return pointing::Model::autosel;
  throw Error(errc::config_error,
              key + ": unknown pointing model '" + name +
                  "' (expected exact|erf|indicator|gaussian|auto)");
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::string leaf_of(const std::string& key) {
  const auto dot = key.rfind('.');
  return dot == std::string::npos ? key : key.substr(dot + 1);
}

std::string hash_hex(const Config& c) {
  std::ostringstream os;
  os << "0x" << std::hex << c.hash();
  return os.str();
}

void stamp(ResultTable& t, const Config& c, const Scenario& s, const std::string& pipeline) {
  t.set_metadata("pipeline", pipeline);
  t.set_metadata("config_hash", hash_hex(c));
  t.set_metadata("seed", std::to_string(s.mc.seed));
  t.set_metadata("version", kVersion);
}

struct SweepAxis {
  std::string key;
  std::vector<double> values;
};

std::vector<double> grid_values(const Config& c, const std::string& section) {
  const bool has_list = c.has(section + ".values");
  const bool has_range = c.has(section + ".from") || c.has(section + ".to") ||
                         c.has(section + ".count");
  if (has_list && has_range)
    throw Error(errc::config_error,
                section + ": conflicting definitions (give either values or from/to/count)");
  if (has_list) {
    const auto v = c.array(section + ".values");
    if (v.empty()) throw Error(errc::config_error, section + ".values: empty grid");
    return v;
  }
  const double from = c.number(section + ".from");
  const double to = c.number(section + ".to");
  const double count_d = c.number(section + ".count");
  const int count = static_cast<int>(count_d);
  if (count < 2 || count_d != count)
    throw Error(errc::config_error, section + ".count: need an integer >= 2");
  std::vector<double> v(count);
  for (int i = 0; i < count; ++i)
    v[i] = from + (to - from) * static_cast<double>(i) / (count - 1);
  return v;
}

SweepAxis sweep_axis(const Config& c) {
  if (!c.has("sweep.axis"))
    throw Error(errc::config_error, "sweep.axis: required for this pipeline");
  return {c.string("sweep.axis"), grid_values(c, "sweep")};
}

std::optional<SweepAxis> group_axis(const Config& c) {
  if (!c.has("group.axis")) return std::nullopt;
  SweepAxis g{c.string("group.axis"), grid_values(c, "group")};
  if (c.has("sweep.axis") && g.key == c.string("sweep.axis"))
    throw Error(errc::config_error, "group.axis: must differ from sweep.axis");
  return g;
}

Config with_value(const Config& base, const std::string& key, double value) {
  Config c = base;
  c.set(key, cfg::format_double(value));
  return c;
}

}  // namespace

Scenario Scenario::from_config(const Config& c) {
  Scenario s;

  s.beam = beam::BeamParams(c.number_or("beam.w0", 1e-3), c.number_or("beam.wavelength", 1550e-9),
                            c.number_or("beam.e0", 0.0));

  s.geometry.theta_i = c.number_or("geometry.theta_i", std::numbers::pi / 3.0);
  s.geometry.theta_r = c.number_or("geometry.theta_r", std::numbers::pi / 6.0);
  s.geometry.d_t2r = c.number_or("geometry.d_t2r", 500.0);
  s.geometry.d_r2l = c.number_or("geometry.d_r2l", 500.0);
  s.geometry.a_r = c.number_or("geometry.a_r", std::numeric_limits<double>::infinity());
  s.geometry.d_f = c.number_or("geometry.d_f", 0.0);
  s.geometry.validate();

  s.pointing.a_l = c.number_or("pointing.a_l", 0.1);
  s.pointing.w_l = c.number_or("pointing.w_l", 0.1);
  s.pointing.sigma_u = c.number_or("pointing.sigma_u", 0.01);
  s.pointing.model = parse_model(c.string_or("pointing.model", "auto"), "pointing.model");
  s.pointing.validate();

  const std::string kind = c.string_or("turbulence.kind", "lognormal");
  double sigma_r2;
  if (c.has("turbulence.sigma_r2")) {
    sigma_r2 = c.number("turbulence.sigma_r2");
  } else if (c.has("turbulence.cn2")) {
    sigma_r2 = channel::rytov_variance(c.number("turbulence.cn2"), s.beam.wavenumber(),
                                       s.geometry.d_t2r + s.geometry.d_r2l);
  } else {
    sigma_r2 = 1.0;
  }
  if (kind == "lognormal") {
    s.turbulence = channel::TurbulenceModel::lognormal(sigma_r2);
  } else if (kind == "gamma_gamma" || kind == "gamma-gamma") {
    if (c.has("turbulence.alpha") || c.has("turbulence.beta")) {
      s.turbulence = channel::TurbulenceModel::gamma_gamma_shapes(
          c.number("turbulence.alpha"), c.number("turbulence.beta"), sigma_r2);
    } else {
      s.turbulence = channel::TurbulenceModel::gamma_gamma(sigma_r2);
    }
  } else {
    throw Error(errc::config_error,
                "turbulence.kind: expected lognormal or gamma_gamma, got '" + kind + "'");
  }

  if (c.has("budget.h_l") && c.has("budget.att_coeff"))
    throw Error(errc::config_error, "budget: give either h_l or att_coeff, not both");
  if (c.has("budget.att_coeff")) {
    const double dist = c.number_or("budget.distance", s.geometry.d_t2r + s.geometry.d_r2l);
    s.budget.h_l = std::exp(-c.number("budget.att_coeff") * dist);
  } else {
    s.budget.h_l = c.number_or("budget.h_l", 0.9);
  }
  if (c.has("budget.pt") && c.has("budget.pt_dbm"))
    throw Error(errc::config_error, "budget: give either pt or pt_dbm, not both");
  if (c.has("budget.pt_dbm")) {
    s.budget.p_t = dbm_to_watts(c.number("budget.pt_dbm"));
  } else {
    s.budget.p_t = c.number_or("budget.pt", 1e-3);
  }
  s.budget.r0 = c.number_or("budget.r0", 1.0);
  s.budget.n0 = c.number_or("budget.n0", 1e-10);
  s.budget.eta = c.number_or("budget.eta", 1.0);
  s.budget.validate();

  const double trials = c.number_or("mc.trials", 1e6);
  if (trials < 1.0 || trials != std::floor(trials))
    throw Error(errc::config_error, "mc.trials: need a positive integer");
  s.mc.n_trials = static_cast<std::uint64_t>(trials);
  const double seed = c.number_or("mc.seed", 1.0);
  if (seed < 0.0 || seed != std::floor(seed))
    throw Error(errc::config_error, "mc.seed: need a non-negative integer");
  s.mc.seed = static_cast<std::uint64_t>(seed);
  const double workers = c.number_or("mc.workers", static_cast<double>(default_worker_count()));
  if (workers < 1.0 || workers != std::floor(workers))
    throw Error(errc::config_error, "mc.workers: need a positive integer");
  s.mc.workers = static_cast<int>(workers);
  if (c.has("mc.pointing_model"))
    s.mc.pointing_override = parse_model(c.string("mc.pointing_model"), "mc.pointing_model");
  s.mc.validate();

  return s;
}

namespace {

struct FocusSolution {
  double w_tilde0;
  double d_f;
};

// Resolve the outgoing waist according to profile.focus:
//   full         - waist exactly at the receiver
//   target_width - width pointing.w_l at the receiver, waist d_f beyond it
//   manual       - profile.w_tilde0 and geometry.d_f as given
FocusSolution resolve_focus(const Config& c, const Scenario& s) {
  const std::string mode = c.string_or("profile.focus", "full");
  if (mode == "full") {
    return {irs::virtual_waist_exact(s.geometry, s.beam), 0.0};
  }
  if (mode == "target_width") {
    const auto vb = irs::virtual_waist_for_target_width(s.geometry, s.beam, s.pointing.w_l);
    return {vb.w_tilde0, vb.d_f};
  }
  if (mode == "manual") {
    return {c.number("profile.w_tilde0"), s.geometry.d_f};
  }
  throw Error(errc::config_error,
              "profile.focus: expected full|target_width|manual, got '" + mode + "'");
}

}  // namespace

ResultTable run_phase_profile(const Config& c) {
  const Scenario s = Scenario::from_config(c);
  const FocusSolution focus = resolve_focus(c, s);

  IrsGeometry g = s.geometry;
  g.d_f = focus.d_f;
  const auto profile = irs::phase_shift_profile(g, s.beam, focus.w_tilde0);

  const double points_d = c.number_or("phase.points", 513.0);
  const int points = static_cast<int>(points_d);
  if (points < 2 || points_d != points)
    throw Error(errc::config_error, "phase.points: need an integer >= 2");

  ResultTable t({"y_m", "dpsi_rad", "dpsi_wrapped_rad"});
  const double lo = profile.valid_min(), hi = profile.valid_max();
  for (int i = 0; i < points; ++i) {
    const double y = lo + (hi - lo) * static_cast<double>(i) / (points - 1);
    const double p = profile(y);
    double wrapped = std::remainder(p, 2.0 * std::numbers::pi);
    if (wrapped <= -std::numbers::pi) wrapped += 2.0 * std::numbers::pi;
    t.add_row({y, p, wrapped});
  }
  stamp(t, c, s, "phase-profile");
  t.set_metadata("w_tilde0_m", cfg::format_double(focus.w_tilde0));
  t.set_metadata("d_f_m", cfg::format_double(focus.d_f));
  return t;
}

ResultTable run_field_profile(const Config& c) {
  const Scenario s = Scenario::from_config(c);
  const FocusSolution focus = resolve_focus(c, s);

  IrsGeometry g = s.geometry;
  g.d_f = focus.d_f;
  const auto profile = irs::phase_shift_profile(g, s.beam, focus.w_tilde0);

  const beam::BeamParams virt(focus.w_tilde0, s.beam.wavelength);
  const double w_rx = beam::beam_width(focus.d_f, virt);

  const double span = c.number_or("profile.y_span", 4.0 * w_rx);
  const double points_d = c.number_or("profile.points", 161.0);
  const int points = static_cast<int>(points_d);
  if (points < 2 || points_d != points)
    throw Error(errc::config_error, "profile.points: need an integer >= 2");

  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i)
    grid[i] = -span + 2.0 * span * static_cast<double>(i) / (points - 1);

  diffraction::DiffractionOptions opts;
  opts.workers = s.mc.workers;
  auto hf = diffraction::huygens_fresnel_profile(grid, g, s.beam, profile, opts);
  auto go = diffraction::geometric_optics_profile(grid, g, s.beam, focus.w_tilde0);

  const double p_int = diffraction::intercepted_power(g, s.beam);
  auto hf_norm = hf;
  diffraction::normalize_power(hf_norm, p_int);
  auto go_norm = go;
  diffraction::normalize_power(go_norm, p_int);
  const double rms = diffraction::compare_profiles(hf_norm, go_norm, w_rx);

  ResultTable t({"y_tilde_m", "density_hf", "density_go"});
  for (int i = 0; i < points; ++i) t.add_row({grid[i], hf.density[i], go.density[i]});
  stamp(t, c, s, "field-profile");
  t.set_metadata("w_tilde0_m", cfg::format_double(focus.w_tilde0));
  t.set_metadata("d_f_m", cfg::format_double(focus.d_f));
  t.set_metadata("w_rx_m", cfg::format_double(w_rx));
  t.set_metadata("intercepted_power", cfg::format_double(p_int));
  t.set_metadata("rms_rel_dev", cfg::format_double(rms));
  return t;
}

ResultTable run_pointing_curve(const Config& c) {
  const Scenario s = Scenario::from_config(c);

  std::vector<double> ratios;
  if (c.has("pointing_curve.ratios"))
    ratios = c.array("pointing_curve.ratios");
  else
    ratios = {s.pointing.w_l / s.pointing.a_l};

  const double umax = c.number_or("pointing_curve.u_max_over_al", 2.0);
  const double points_d = c.number_or("pointing_curve.points", 201.0);
  const int points = static_cast<int>(points_d);
  if (points < 2 || points_d != points)
    throw Error(errc::config_error, "pointing_curve.points: need an integer >= 2");

  ResultTable t({"w_l_over_al", "u_over_al", "hp_exact", "hp_model"});
  for (const double ratio : ratios) {
    pointing::PointingScenario ps = s.pointing;
    ps.w_l = ratio * ps.a_l;
    ps.validate();
    for (int i = 0; i < points; ++i) {
      const double u_over = umax * static_cast<double>(i) / (points - 1);
      const double u = u_over * ps.a_l;
      t.add_row({ratio, u_over, pointing::hp_exact(u, ps), pointing::hp(u, ps)});
    }
  }
  stamp(t, c, s, "pointing-curve");
  return t;
}

namespace {

enum class OutageMode { analytic, monte_carlo, both };

ResultTable run_outage_grid(const Config& c, OutageMode mode, const std::string& pipeline) {
  const auto sweep = sweep_axis(c);
  const auto group = group_axis(c);
  const Scenario base = Scenario::from_config(c);

  std::vector<std::string> cols;
  if (group) cols.push_back(leaf_of(group->key));
  cols.push_back(leaf_of(sweep.key));
  cols.push_back("h0");
  if (mode != OutageMode::monte_carlo) cols.push_back("pout_analytic");
  if (mode != OutageMode::analytic) {
    cols.push_back("pout_mc");
    cols.push_back("mc_stderr");
  }
  ResultTable t(cols);

  const std::vector<double> groups = group ? group->values : std::vector<double>{0.0};
  std::size_t point_index = 0;
  for (const double gv : groups) {
    Config cg = group ? with_value(c, group->key, gv) : c;
    for (const double sv : sweep.values) {
      const Config cp = with_value(cg, sweep.key, sv);
      const Scenario s = Scenario::from_config(cp);
      const double h0 = channel::outage_threshold(s.budget);

      std::vector<double> row;
      if (group) row.push_back(gv);
      row.push_back(sv);
      row.push_back(h0);
      if (mode != OutageMode::monte_carlo)
        row.push_back(channel::outage_analytic(s.budget, s.turbulence, s.pointing));
      if (mode != OutageMode::analytic) {
        montecarlo::McConfig mc = s.mc;
        mc.seed = splitmix64(base.mc.seed ^ (0x9e3779b97f4a7c15ull * (point_index + 1)));
        const auto est = montecarlo::simulate_outage(s.budget, s.turbulence, s.pointing, mc);
        row.push_back(est.p_out);
        row.push_back(est.std_error);
      }
      t.add_row(row);
      ++point_index;
    }
  }
  stamp(t, c, base, pipeline);
  t.set_metadata("trials", std::to_string(base.mc.n_trials));
  return t;
}

}  // namespace

ResultTable run_outage(const Config& c) {
  return run_outage_grid(c, OutageMode::analytic, "outage");
}

ResultTable run_montecarlo(const Config& c) {
  return run_outage_grid(c, OutageMode::monte_carlo, "montecarlo");
}

ResultTable run_sweep(const Config& c) { return run_outage_grid(c, OutageMode::both, "sweep"); }

ResultTable run_pipeline(const std::string& name, const Config& c) {
  if (name == "phase-profile") return run_phase_profile(c);
  if (name == "field-profile") return run_field_profile(c);
  if (name == "pointing-curve") return run_pointing_curve(c);
  if (name == "outage") return run_outage(c);
  if (name == "montecarlo") return run_montecarlo(c);
  if (name == "sweep") return run_sweep(c);
  throw Error(errc::config_error, "unknown pipeline '" + name + "'");
}

}  // namespace irsfso::scenario
