#pragma once

#include <optional>
#include <string>

#include "beam.hpp"
#include "channel.hpp"
#include "config.hpp"
#include "geometry.hpp"
#include "montecarlo.hpp"
#include "pointing.hpp"
#include "table.hpp"

namespace irsfso::scenario {

inline constexpr const char* kVersion = "0.1.0";

double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);

// Typed view of one grid point of a configuration (after sweep/group keys
// are substituted).
struct Scenario {
  beam::BeamParams beam{1e-3, 1550e-9};
  IrsGeometry geometry;
  pointing::PointingScenario pointing{0.1, 0.1, 0.01};
  channel::TurbulenceModel turbulence;
  channel::LinkBudget budget{1.0, 1e-3, 1.0, 1e-10};
  montecarlo::McConfig mc;

  static Scenario from_config(const cfg::Config& cfg);
};

// Pipelines (one per CLI subcommand). Each returns a table stamped with the
// config hash, seed, and version.
cfg::ResultTable run_phase_profile(const cfg::Config& cfg);
cfg::ResultTable run_field_profile(const cfg::Config& cfg);
cfg::ResultTable run_pointing_curve(const cfg::Config& cfg);
cfg::ResultTable run_outage(const cfg::Config& cfg);
cfg::ResultTable run_montecarlo(const cfg::Config& cfg);
cfg::ResultTable run_sweep(const cfg::Config& cfg);

// Dispatch by pipeline name ("phase-profile", "field-profile",
// "pointing-curve", "outage", "montecarlo", "sweep").
cfg::ResultTable run_pipeline(const std::string& name, const cfg::Config& cfg);

}  // namespace irsfso::scenario
