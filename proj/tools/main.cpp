// Command-line front end. All functionality lives behind the shared
// library's C interface; this file only parses flags and forwards.

#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "irsfso.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

int exit_code_for(irsfso_status st) {
  switch (st) {
    case IRSFSO_OK: return kExitOk;
    case IRSFSO_ERROR_CONFIG:
    case IRSFSO_ERROR_INVALID_ARGUMENT:
    case IRSFSO_ERROR_IO: return kExitConfig;
    default: return kExitNumeric;
  }
}

struct ScenarioDeleter {
  void operator()(irsfso_scenario* s) const { irsfso_scenario_free(s); }
};
struct TableDeleter {
  void operator()(irsfso_table* t) const { irsfso_table_free(t); }
};

struct CommonOpts {
  std::string config_path;
  std::string out_path = "-";
  std::string format = "csv";
  std::vector<std::string> overrides;
  long long seed = -1;
  long long trials = -1;
};

int run_pipeline(const CommonOpts& opts, const std::string& pipeline) {
  irsfso_scenario* raw = nullptr;
  if (const auto st = irsfso_scenario_load(opts.config_path.c_str(), &raw); st != IRSFSO_OK) {
    std::fprintf(stderr, "irsfso: %s\n", irsfso_last_error());
    return exit_code_for(st);
  }
  std::unique_ptr<irsfso_scenario, ScenarioDeleter> scenario(raw);

  auto set = [&](const char* key, const std::string& value) -> int {
    if (const auto st = irsfso_scenario_set(scenario.get(), key, value.c_str());
        st != IRSFSO_OK) {
      std::fprintf(stderr, "irsfso: %s\n", irsfso_last_error());
      return exit_code_for(st);
    }
    return kExitOk;
  };
  if (opts.seed >= 0)
    if (const int rc = set("mc.seed", std::to_string(opts.seed)); rc != kExitOk) return rc;
  if (opts.trials >= 0)
    if (const int rc = set("mc.trials", std::to_string(opts.trials)); rc != kExitOk) return rc;
  for (const auto& kv : opts.overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      std::fprintf(stderr, "irsfso: --set expects key=value, got '%s'\n", kv.c_str());
      return kExitConfig;
    }
    if (const int rc = set(kv.substr(0, eq).c_str(), kv.substr(eq + 1)); rc != kExitOk)
      return rc;
  }

  irsfso_table* traw = nullptr;
  if (const auto st = irsfso_run(scenario.get(), pipeline.c_str(), &traw); st != IRSFSO_OK) {
    std::fprintf(stderr, "irsfso: %s\n", irsfso_last_error());
    return exit_code_for(st);
  }
  std::unique_ptr<irsfso_table, TableDeleter> table(traw);

  const char* path = opts.out_path == "-" ? nullptr : opts.out_path.c_str();
  if (const auto st = irsfso_table_write(table.get(), path, opts.format.c_str());
      st != IRSFSO_OK) {
    std::fprintf(stderr, "irsfso: %s\n", irsfso_last_error());
    return exit_code_for(st);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Focused-beam reflector FSO link simulator"};
  app.set_version_flag("--version", std::string(irsfso_version()));
  app.require_subcommand(1);

  const std::vector<std::string> pipelines = {"phase-profile", "field-profile",
                                              "pointing-curve", "outage", "montecarlo", "sweep"};
  const std::vector<std::string> descriptions = {
      "Phase shift across the reflector",
      "Receiver-plane density: wavelet superposition vs geometric optics",
      "Pointing loss vs displacement for each model",
      "Analytic outage probability over a sweep",
      "Monte Carlo outage probability over a sweep",
      "Analytic and Monte Carlo outage side by side"};

  CommonOpts opts;
  for (std::size_t i = 0; i < pipelines.size(); ++i) {
    CLI::App* sub = app.add_subcommand(pipelines[i], descriptions[i]);
    sub->add_option("--config", opts.config_path, "Scenario config file")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--out", opts.out_path, "Output path ('-' for stdout)");
    sub->add_option("--seed", opts.seed, "Override mc.seed");
    sub->add_option("--trials", opts.trials, "Override mc.trials");
    sub->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--set", opts.overrides, "Override any config key (key=value)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return kExitConfig;
  }

  for (const auto& name : pipelines)
    if (app.got_subcommand(name)) return run_pipeline(opts, name);
  return kExitConfig;
}
