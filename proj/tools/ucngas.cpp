// ucngas: eigenstates, thermodynamics and density tables for an ideal Fermi
// gas of ultra-cold neutrons above a hard floor under gravity.
//
//   ucngas <eigen|fig1|fig2|fig3|report> [--config PATH] [--out PATH]
//          [--format csv|json] [--paper-literal] [grid flags]

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "ucngas/cli.hpp"

namespace {

using ucngas::cli::ExitCode;
using ucngas::cli::OutputFormat;
using ucngas::cli::RunConfig;

struct CommonOptions {
  std::string config_path;
  std::string format = "csv";
  bool paper_literal = false;
};

void add_common(CLI::App* sub, RunConfig& cfg, CommonOptions& opts) {
  sub->add_option("--config", opts.config_path, "constants file (key = value)")
      ->check(CLI::ExistingFile);
  sub->add_option("--out", cfg.output_path, "output file (default: standard output)");
  sub->add_option("--format", opts.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_flag("--paper-literal", opts.paper_literal,
                "use the literal printed coefficients (spin-less density, pi^2/2 expansion)");
}

void add_t_grid(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--t-min", cfg.grid.t_min, "smallest reduced temperature kB T / eps_F");
  sub->add_option("--t-max", cfg.grid.t_max, "largest reduced temperature");
  sub->add_option("--t-steps", cfg.grid.t_steps, "log-spaced temperature points");
}

int write_output(const std::string& text, const RunConfig& cfg) {
  if (cfg.output_path.empty()) {
    std::cout << text;
    return std::cout ? ExitCode::success : ExitCode::usage_error;
  }
  std::ofstream out(cfg.output_path, std::ios::binary);
  if (!out) {
    std::cerr << "ucngas: cannot open " << cfg.output_path << " for writing\n";
    return ExitCode::usage_error;
  }
  out << text;
  return out ? ExitCode::success : ExitCode::usage_error;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ideal Fermi gas of ultra-cold neutrons in the Earth's gravitational field"};
  app.require_subcommand(1);

  RunConfig cfg;
  CommonOptions opts;

  auto* eigen = app.add_subcommand("eigen", "exact vs asymptotic vertical eigenenergies");
  add_common(eigen, cfg, opts);
  eigen->add_option("--n-max", cfg.n_max, "highest vertical quantum number (1..1000)");

  auto* fig1 = app.add_subcommand("fig1", "chemical potential and internal energy vs temperature");
  add_common(fig1, cfg, opts);
  add_t_grid(fig1, cfg);
  fig1->add_flag("--eta-sweep", cfg.grid.eta_sweep, "sweep eta = mu / kB T instead of t");
  fig1->add_option("--eta-min", cfg.grid.eta_min);
  fig1->add_option("--eta-max", cfg.grid.eta_max);
  fig1->add_option("--eta-steps", cfg.grid.eta_steps);

  auto* fig2 = app.add_subcommand("fig2", "density surface n(t, z) / n(0, 0)");
  add_common(fig2, cfg, opts);
  add_t_grid(fig2, cfg);
  fig2->add_option("--z-steps", cfg.grid.z_steps, "uniform points on 0 <= mgz/eps_F <= 1.5");

  auto* fig3 = app.add_subcommand("fig3", "bottom density vs Fermi energy");
  add_common(fig3, cfg, opts);
  fig3->add_option("--efermi-min-K", cfg.grid.efermi_min_K);
  fig3->add_option("--efermi-max-K", cfg.grid.efermi_max_K);
  fig3->add_option("--efermi-steps", cfg.grid.efermi_steps);

  auto* report = app.add_subcommand("report", "worked numbers for one Fermi energy");
  add_common(report, cfg, opts);
  report->add_option("--efermi-K", cfg.report_efermi_K, "Fermi energy as a temperature");
  report->add_option("--t", cfg.report_t, "reduced temperature (0 for the ground state)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return ExitCode::usage_error;
  }

  CLI::App* sub = app.get_subcommands().front();
  const bool format_given = sub->count("--format") > 0;
  cfg.format = opts.format == "json" ? OutputFormat::json : OutputFormat::csv;
  if (sub == report && !format_given) cfg.format = OutputFormat::json;
  cfg.coeffs = opts.paper_literal ? ucngas::Coefficients::paper_literal
                                  : ucngas::Coefficients::consistent;

  try {
    if (!opts.config_path.empty()) {
      std::ifstream in(opts.config_path);
      cfg.constants = ucngas::parse_constants_config(in);
    }

    std::string text;
    if (sub == eigen) {
      text = ucngas::cli::render(ucngas::cli::cmd_eigen(cfg.n_max, cfg.constants), cfg);
    } else if (sub == fig1) {
      text = ucngas::cli::render(ucngas::cli::cmd_fig1(cfg), cfg);
    } else if (sub == fig2) {
      text = ucngas::cli::render(ucngas::cli::cmd_fig2(cfg), cfg);
    } else if (sub == fig3) {
      text = ucngas::cli::render(ucngas::cli::cmd_fig3(cfg), cfg);
    } else {
      text = ucngas::cli::render_report(ucngas::cli::make_report(cfg), cfg);
    }
    return write_output(text, cfg);
  } catch (const ucngas::config_error& e) {
    std::cerr << "ucngas: config: " << e.what() << '\n';
    return ExitCode::usage_error;
  } catch (const ucngas::cli::usage_error_exception& e) {
    std::cerr << "ucngas: " << e.what() << '\n';
    return ExitCode::usage_error;
  } catch (const std::exception& e) {
    std::cerr << "ucngas: numerical failure: " << e.what() << '\n';
    return ExitCode::numerical_failure;
  }
}
