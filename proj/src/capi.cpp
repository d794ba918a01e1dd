#include "irsfso.h"

#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "core/beam.hpp"
#include "core/channel.hpp"
#include "core/config.hpp"
#include "core/errors.hpp"
#include "core/irs.hpp"
#include "core/pointing.hpp"
#include "core/scenario.hpp"
#include "core/special.hpp"
#include "core/table.hpp"

using irsfso::Error;
using irsfso::errc;

struct irsfso_scenario {
  irsfso::cfg::Config config;
};

struct irsfso_table {
  irsfso::cfg::ResultTable table;
};

namespace {

thread_local std::string g_last_error;

irsfso_status status_of(const Error& e) {
  g_last_error = e.what();
  switch (e.code()) {
    case errc::config_error: return IRSFSO_ERROR_CONFIG;
    case errc::io_error: return IRSFSO_ERROR_IO;
    case errc::domain_error: return IRSFSO_ERROR_DOMAIN;
    case errc::infeasible_focus:
    case errc::out_of_regime: return IRSFSO_ERROR_INFEASIBLE;
    default: return IRSFSO_ERROR_NUMERIC;
  }
}

template <class Fn>
irsfso_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return IRSFSO_OK;
  } catch (const Error& e) {
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return IRSFSO_ERROR_NUMERIC;
  }
}

irsfso_status write_table(const irsfso::cfg::ResultTable& t, std::ostream& os,
                          const char* format) {
  const std::string fmt = format ? format : "csv";
  if (fmt == "csv") {
    t.write_csv(os);
    return IRSFSO_OK;
  }
  if (fmt == "json") {
    t.write_json(os);
    return IRSFSO_OK;
  }
  g_last_error = "unknown format '" + fmt + "' (expected csv or json)";
  return IRSFSO_ERROR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* irsfso_version(void) { return irsfso::scenario::kVersion; }

const char* irsfso_last_error(void) { return g_last_error.c_str(); }

irsfso_status irsfso_scenario_load(const char* path, irsfso_scenario** out) {
  if (!path || !out) {
    g_last_error = "null argument";
    return IRSFSO_ERROR_INVALID_ARGUMENT;
  }
  return guarded([&] { *out = new irsfso_scenario{irsfso::cfg::Config::load(path)}; });
}

irsfso_status irsfso_scenario_parse(const char* text, irsfso_scenario** out) {
  if (!text || !out) {
    g_last_error = "null argument";
    return IRSFSO_ERROR_INVALID_ARGUMENT;
  }
  return guarded([&] { *out = new irsfso_scenario{irsfso::cfg::Config::parse(text)}; });
}

irsfso_status irsfso_scenario_set(irsfso_scenario* s, const char* key, const char* value) {
  if (!s || !key || !value) {
    g_last_error = "null argument";
    return IRSFSO_ERROR_INVALID_ARGUMENT;
  }
  return guarded([&] { s->config.set(key, value); });
}

void irsfso_scenario_free(irsfso_scenario* s) { delete s; }

irsfso_status irsfso_run(const irsfso_scenario* s, const char* pipeline, irsfso_table** out) {
  if (!s || !pipeline || !out) {
    g_last_error = "null argument";
    return IRSFSO_ERROR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    *out = new irsfso_table{irsfso::scenario::run_pipeline(pipeline, s->config)};
  });
}

size_t irsfso_table_columns(const irsfso_table* t) { return t ? t->table.columns().size() : 0; }

size_t irsfso_table_rows(const irsfso_table* t) { return t ? t->table.rows() : 0; }

const char* irsfso_table_column_name(const irsfso_table* t, size_t col) {
  if (!t || col >= t->table.columns().size()) return nullptr;
  return t->table.columns()[col].c_str();
}

double irsfso_table_value(const irsfso_table* t, size_t row, size_t col) {
  if (!t || row >= t->table.rows() || col >= t->table.columns().size()) return 0.0;
  return t->table.value(row, col);
}

const char* irsfso_table_metadata(const irsfso_table* t, const char* key) {
  if (!t || !key) return nullptr;
  const std::string* v = t->table.metadata_value(key);
  return v ? v->c_str() : nullptr;
}

irsfso_status irsfso_table_write(const irsfso_table* t, const char* path, const char* format) {
  if (!t) {
    g_last_error = "null table";
    return IRSFSO_ERROR_INVALID_ARGUMENT;
  }
  if (!path || std::strcmp(path, "-") == 0) return write_table(t->table, std::cout, format);
  std::ofstream out(path);
  if (!out) {
    g_last_error = std::string("cannot open output file '") + path + "'";
    return IRSFSO_ERROR_IO;
  }
  return write_table(t->table, out, format);
}

irsfso_status irsfso_table_to_string(const irsfso_table* t, const char* format, char** out) {
  if (!t || !out) {
    g_last_error = "null argument";
    return IRSFSO_ERROR_INVALID_ARGUMENT;
  }
  std::ostringstream os;
  const irsfso_status st = write_table(t->table, os, format);
  if (st != IRSFSO_OK) return st;
  const std::string s = os.str();
  *out = new char[s.size() + 1];
  std::memcpy(*out, s.c_str(), s.size() + 1);
  return IRSFSO_OK;
}

void irsfso_string_free(char* s) { delete[] s; }

void irsfso_table_free(irsfso_table* t) { delete t; }

double irsfso_erf(double x) { return irsfso::numerics::erf(x); }

irsfso_status irsfso_erfinv(double p, double* out) {
  if (!out) return IRSFSO_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = irsfso::numerics::erfinv(p); });
}

irsfso_status irsfso_hyp1f2(double a, double b1, double b2, double x, double* out) {
  if (!out) return IRSFSO_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = irsfso::numerics::hyp1f2(a, b1, b2, x); });
}

irsfso_status irsfso_beam_width(double z, double w0, double wavelength, double* out) {
  if (!out) return IRSFSO_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    const irsfso::beam::BeamParams beam(w0, wavelength);
    *out = irsfso::beam::beam_width(z, beam);
  });
}

irsfso_status irsfso_virtual_waist(double theta_i, double theta_r, double d_t2r, double d_r2l,
                                   double w0, double wavelength, double* out) {
  if (!out) return IRSFSO_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    irsfso::IrsGeometry g;
    g.theta_i = theta_i;
    g.theta_r = theta_r;
    g.d_t2r = d_t2r;
    g.d_r2l = d_r2l;
    const irsfso::beam::BeamParams beam(w0, wavelength);
    *out = irsfso::irs::virtual_waist_exact(g, beam);
  });
}

irsfso_status irsfso_hp(const char* model, double u, double w_l, double a_l, double* out) {
  if (!model || !out) return IRSFSO_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    irsfso::pointing::PointingScenario s{w_l, a_l, 0.0};
    const std::string m = model;
    if (m == "exact")
      s.model = irsfso::pointing::Model::exact;
    else if (m == "erf" || m == "erf_approx")
      s.model = irsfso::pointing::Model::erf_approx;
    else if (m == "indicator")
      s.model = irsfso::pointing::Model::indicator;
    else if (m == "gaussian" || m == "gaussian_wide")
      s.model = irsfso::pointing::Model::gaussian_wide;
    else if (m == "auto")
      s.model = irsfso::pointing::Model::autosel;
    else
      throw Error(errc::domain_error, "unknown pointing model '" + m + "'");
    *out = irsfso::pointing::hp(u, s);
  });
}

irsfso_status irsfso_rytov_variance(double cn2, double wavenumber, double distance, double* out) {
  if (!out) return IRSFSO_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = irsfso::channel::rytov_variance(cn2, wavenumber, distance); });
}

irsfso_status irsfso_gg_alpha_beta(double sigma_r2, double* alpha, double* beta) {
  if (!alpha || !beta) return IRSFSO_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    const auto [a, b] = irsfso::channel::gg_alpha_beta(sigma_r2);
    *alpha = a;
    *beta = b;
  });
}

irsfso_status irsfso_gg_cdf(double h_a, double alpha, double beta, double* out) {
  if (!out) return IRSFSO_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = irsfso::channel::gg_cdf(h_a, alpha, beta); });
}

irsfso_status irsfso_lognormal_cdf(double h_a, double sigma2, double* out) {
  if (!out) return IRSFSO_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = irsfso::channel::lognormal_cdf(h_a, sigma2); });
}

irsfso_status irsfso_outage_threshold(double p_t, double r0, double n0, double eta, double* out) {
  if (!out) return IRSFSO_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    const irsfso::channel::LinkBudget b{1.0, p_t, r0, n0, eta};
    *out = irsfso::channel::outage_threshold(b);
  });
}

}  // extern "C"
