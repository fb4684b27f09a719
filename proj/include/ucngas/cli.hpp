#pragma once

// Table-producing commands behind the `ucngas` executable, and their CSV /
// JSON serialization. Every command is deterministic: the same RunConfig
// yields byte-identical output.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "json.hpp"

#include "ucngas/constants.hpp"
#include "ucngas/density.hpp"
#include "ucngas/eigen.hpp"
#include "ucngas/error.hpp"
#include "ucngas/thermo.hpp"
#include "ucngas/units.hpp"

namespace ucngas::cli {

enum class OutputFormat { csv, json };

/// Exit status contract of the executable.
enum ExitCode : int { success = 0, usage_error = 1, numerical_failure = 2 };

/// Thrown for arguments that are well-formed but semantically invalid.
class usage_error_exception : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GridConfig {
  double t_min = 0.01;
  double t_max = 2.0;
  int t_steps = 200;
  int z_steps = 400;
  double efermi_min_K = 1e-5;
  double efermi_max_K = 1e-1;
  int efermi_steps = 41;
  // Parametric fig1 sweep over eta instead of t.
  bool eta_sweep = false;
  double eta_min = -5.0;
  double eta_max = 100.0;
  int eta_steps = 200;
};

struct RunConfig {
  PhysicalConstants constants = default_constants();
  OutputFormat format = OutputFormat::csv;
  std::string output_path;  // empty: standard output
  Coefficients coeffs = Coefficients::consistent;
  GridConfig grid;
  int n_max = 10;
  double report_efermi_K = 1e-3;
  double report_t = 1e-4;
};

inline void validate(const RunConfig& cfg) {
  const GridConfig& g = cfg.grid;
  if (!cfg.constants.valid()) throw usage_error_exception("constants must be positive");
  if (!(g.t_min > 0.0 && g.t_min < g.t_max)) throw usage_error_exception("need 0 < t_min < t_max");
  if (g.t_min < min_reduced_temperature || g.t_max > max_reduced_temperature) {
    throw usage_error_exception("t grid must lie in [1e-4, 1e3]");
  }
  if (g.t_steps < 2 || g.z_steps < 2 || g.efermi_steps < 2 || g.eta_steps < 2) {
    throw usage_error_exception("grid steps must be >= 2");
  }
  if (!(g.efermi_min_K > 0.0 && g.efermi_min_K < g.efermi_max_K)) {
    throw usage_error_exception("need 0 < efermi_min_K < efermi_max_K");
  }
  if (!(g.eta_min < g.eta_max)) throw usage_error_exception("need eta_min < eta_max");
  if (!(cfg.report_efermi_K > 0.0)) throw usage_error_exception("efermi must be positive");
}

/// Column-named numeric table.
struct Table {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Scientific notation, 12 significant digits.
[[nodiscard]] inline std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.11e", v);
  return buf;
}

[[nodiscard]] inline std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += table.columns[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_number(row[i]);
    }
    out += '\n';
  }
  return out;
}

[[nodiscard]] inline nlohmann::ordered_json meta_json(const std::string& command,
                                                      const RunConfig& cfg) {
  nlohmann::ordered_json meta;
  meta["command"] = command;
  meta["constants"] = {{"m_kg", cfg.constants.m},
                       {"g_mps2", cfg.constants.g},
                       {"hbar_Js", cfg.constants.hbar},
                       {"kB_JpK", cfg.constants.kB}};
  meta["paper_literal"] = cfg.coeffs == Coefficients::paper_literal;
  const GridConfig& g = cfg.grid;
  meta["grid"] = {{"t_min", g.t_min},
                  {"t_max", g.t_max},
                  {"t_steps", g.t_steps},
                  {"z_steps", g.z_steps},
                  {"efermi_min_K", g.efermi_min_K},
                  {"efermi_max_K", g.efermi_max_K},
                  {"efermi_steps", g.efermi_steps},
                  {"eta_sweep", g.eta_sweep},
                  {"eta_min", g.eta_min},
                  {"eta_max", g.eta_max},
                  {"eta_steps", g.eta_steps}};
  return meta;
}

/// {"meta": ..., "rows": [{column: value, ...}, ...]}
[[nodiscard]] inline nlohmann::ordered_json to_json(const Table& table, const RunConfig& cfg) {
  nlohmann::ordered_json doc;
  doc["meta"] = meta_json(table.command, cfg);
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < row.size(); ++i) obj[table.columns[i]] = row[i];
    doc["rows"].push_back(std::move(obj));
  }
  return doc;
}

[[nodiscard]] inline std::string render(const Table& table, const RunConfig& cfg) {
  if (cfg.format == OutputFormat::json) return to_json(table, cfg).dump(2) + "\n";
  return to_csv(table);
}

[[nodiscard]] inline std::vector<double> log_grid(double lo, double hi, int steps) {
  std::vector<double> grid(static_cast<std::size_t>(steps));
  const double ratio = std::log(hi / lo);
  for (int i = 0; i < steps; ++i) {
    grid[static_cast<std::size_t>(i)] = lo * std::exp(ratio * i / (steps - 1));
  }
  grid.back() = hi;
  return grid;
}

[[nodiscard]] inline std::vector<double> linear_grid(double lo, double hi, int steps) {
  std::vector<double> grid(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    grid[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (steps - 1);
  }
  return grid;
}

namespace detail {

// Re-raises numerical failures with the grid point that caused them.
template <class F>
auto at_point(const char* what, double value, F&& f) {
  try {
    return f();
  } catch (const domain_error& e) {
    throw convergence_error(std::string(what) + " = " + format_number(value) + ": " + e.what());
  } catch (const convergence_error& e) {
    throw convergence_error(std::string(what) + " = " + format_number(value) + ": " + e.what());
  }
}

}  // namespace detail

/// (n_z, E_exact [peV], E_asymptotic [peV], rel_error) for n_z = 1..n_max.
[[nodiscard]] inline Table cmd_eigen(int n_max, const PhysicalConstants& c) {
  if (n_max < 1 || n_max > max_vertical_quantum_number) {
    throw usage_error_exception("n_max must lie in [1, 1000]");
  }
  Table t{"eigen", {"n_z", "E_exact_peV", "E_asymptotic_peV", "rel_error"}, {}};
  for (int n = 1; n <= n_max; ++n) {
    const double exact = eigen_energy_exact(n, c);
    const double asym = eigen_energy_asymptotic(n, c);
    t.rows.push_back({static_cast<double>(n), convert(exact, Unit::joule, Unit::peV, c),
                      convert(asym, Unit::joule, Unit::peV, c),
                      std::abs(asym - exact) / exact});
  }
  return t;
}

/// Chemical potential and internal energy against temperature, with the
/// free-gas baseline at the same Fermi energy.
[[nodiscard]] inline Table cmd_fig1(const RunConfig& cfg) {
  validate(cfg);
  Table t{"fig1", {"t", "mu_over_ef", "u_over_nef", "mu_free_over_ef", "u_free_over_nef"}, {}};
  const GridConfig& g = cfg.grid;
  if (g.eta_sweep) {
    t.columns.insert(t.columns.begin() + 1, "eta");
    for (const double eta : linear_grid(g.eta_min, g.eta_max, g.eta_steps)) {
      t.rows.push_back(detail::at_point("eta", eta, [&] {
        const double temp = 1.0 / beta_epsf_from_eta(eta);
        return std::vector<double>{temp, eta, eta * temp, internal_energy_at(eta, temp),
                                   free_gas_mu_over_ef(temp), free_gas_u_over_nef(temp)};
      }));
    }
    return t;
  }
  for (const double temp : log_grid(g.t_min, g.t_max, g.t_steps)) {
    t.rows.push_back(detail::at_point("t", temp, [&] {
      const ThermoPoint p = thermo_point(temp);
      return std::vector<double>{temp, p.mu_over_ef, p.u_over_nef, free_gas_mu_over_ef(temp),
                                 free_gas_u_over_nef(temp)};
    }));
  }
  return t;
}

/// Long-format density surface (t, m g z / eps_F, n / n(0,0)).
[[nodiscard]] inline Table cmd_fig2(const RunConfig& cfg) {
  validate(cfg);
  Table t{"fig2", {"t", "mgz_over_ef", "n_over_n00"}, {}};
  const std::vector<double> xs = linear_grid(0.0, 1.5, cfg.grid.z_steps);
  for (const double temp : log_grid(cfg.grid.t_min, cfg.grid.t_max, cfg.grid.t_steps)) {
    const double eta = detail::at_point("t", temp, [&] { return eta_from_t(temp); });
    for (const double x : xs) {
      t.rows.push_back({temp, x, reduced_density(eta, temp, x)});
    }
  }
  return t;
}

/// Zero-temperature bottom density against Fermi energy, display units.
[[nodiscard]] inline Table cmd_fig3(const RunConfig& cfg) {
  validate(cfg);
  Table t{"fig3", {"efermi_K", "n_bottom_per_cm3"}, {}};
  std::vector<double> energies;
  for (const double kelvin :
       log_grid(cfg.grid.efermi_min_K, cfg.grid.efermi_max_K, cfg.grid.efermi_steps)) {
    energies.push_back(convert(kelvin, Unit::kelvin, Unit::joule, cfg.constants));
  }
  for (const auto& p : bottom_density_vs_fermi(energies, cfg.constants, cfg.coeffs)) {
    t.rows.push_back({p.fermi_temperature_K, p.density_per_cm3});
  }
  return t;
}

/// Worked numbers for a gas with Fermi energy kB * efermi_K at reduced
/// temperature t. The thermal wavelength is taken at the Fermi temperature
/// eps_F / kB, the scale at which degeneracy sets in.
struct Report {
  double efermi_K = 0.0;
  double t = 0.0;
  double eps_F_J = 0.0;
  double column_height_cm = 0.0;
  double bottom_density_per_cm3 = 0.0;
  double mean_separation_cm = 0.0;
  double thermal_wavelength_cm = 0.0;
  bool degenerate = false;
};

[[nodiscard]] inline Report make_report(const RunConfig& cfg) {
  validate(cfg);
  const PhysicalConstants& c = cfg.constants;
  if (!(cfg.report_t >= 0.0)) throw usage_error_exception("t must be >= 0");
  Report r;
  r.efermi_K = cfg.report_efermi_K;
  r.t = cfg.report_t;
  r.eps_F_J = convert(r.efermi_K, Unit::kelvin, Unit::joule, c);
  r.column_height_cm = convert(column_height(r.eps_F_J, c), Unit::metre, Unit::centimetre, c);
  const double ratio =
      detail::at_point("t", r.t, [&] { return density_ratio_at_bottom(r.t); });
  const double n = ratio * bottom_density_zero_T(r.eps_F_J, c, cfg.coeffs);
  const DilutenessReport d = diluteness(n, r.efermi_K, c);
  r.bottom_density_per_cm3 = convert(n, Unit::per_cubic_metre, Unit::per_cubic_centimetre, c);
  r.mean_separation_cm = convert(d.mean_separation, Unit::metre, Unit::centimetre, c);
  r.thermal_wavelength_cm = convert(d.thermal_wavelength, Unit::metre, Unit::centimetre, c);
  r.degenerate = d.degenerate;
  return r;
}

[[nodiscard]] inline Table report_table(const Report& r) {
  return {"report",
          {"efermi_K", "t", "eps_F_J", "column_height_cm", "bottom_density_per_cm3",
           "mean_separation_cm", "thermal_wavelength_cm", "degenerate"},
          {{r.efermi_K, r.t, r.eps_F_J, r.column_height_cm, r.bottom_density_per_cm3,
            r.mean_separation_cm, r.thermal_wavelength_cm, r.degenerate ? 1.0 : 0.0}}};
}

[[nodiscard]] inline std::string render_report(const Report& r, const RunConfig& cfg) {
  if (cfg.format == OutputFormat::csv) return to_csv(report_table(r));
  nlohmann::ordered_json doc;
  doc["meta"] = meta_json("report", cfg);
  doc["summary"] = {{"efermi_K", r.efermi_K},
                    {"t", r.t},
                    {"eps_F_J", r.eps_F_J},
                    {"column_height_cm", r.column_height_cm},
                    {"bottom_density_per_cm3", r.bottom_density_per_cm3},
                    {"mean_separation_cm", r.mean_separation_cm},
                    {"thermal_wavelength_cm", r.thermal_wavelength_cm},
                    {"degenerate", r.degenerate}};
  return doc.dump(2) + "\n";
}

}  // namespace ucngas::cli
