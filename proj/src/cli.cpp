#include "vho/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iomanip>
#include <locale>
#include <map>
#include <ostream>
#include <stdexcept>

#include "vho/box_model.hpp"
#include "vho/exact_ho.hpp"
#include "vho/numerics.hpp"
#include "vho/report.hpp"
#include "vho/validation.hpp"
#include "vho/variational.hpp"

namespace vho::cli {

namespace {

bool wants_csv(OutputFormat f) { return f != OutputFormat::plot; }
bool wants_plot(OutputFormat f) { return f != OutputFormat::csv; }

void note_written(std::ostream& out, const std::filesystem::path& p) { out << "wrote " << p.string() << '\n'; }

void write_energy_outputs(const RunConfig& config, const std::vector<EnergyComparisonRow>& table, std::ostream& out) {
  if (wants_csv(config.format)) {
    emit_csv(table, config.output_dir / "energies.csv");
    note_written(out, config.output_dir / "energies.csv");
  }
  if (wants_plot(config.format)) {
    emit_plot(table, config.output_dir / "energies.svg");
    note_written(out, config.output_dir / "energies.svg");
  }
}

void write_trace_outputs(const RunConfig& config, const TracePair& traces, std::ostream& out) {
  const std::string stem = "wavefunction_r" + std::to_string(traces.approximate.r);
  if (wants_csv(config.format)) {
    emit_csv(traces, config.output_dir / (stem + ".csv"));
    note_written(out, config.output_dir / (stem + ".csv"));
  }
  if (wants_plot(config.format)) {
    emit_plot(traces, config.output_dir / (stem + ".svg"));
    note_written(out, config.output_dir / (stem + ".svg"));
  }
}

void print_energy_table(const std::vector<EnergyComparisonRow>& table, std::ostream& out) {
  out << std::setw(4) << "r" << std::setw(16) << "E*_r/hw" << std::setw(16) << "E_r/hw" << std::setw(16) << "ratio"
      << std::setw(16) << "rel_error" << '\n';
  for (const auto& row : table)
    out << std::setw(4) << row.r << std::setw(16) << row.e_star_over_ew << std::setw(16) << row.e_exact_over_ew
        << std::setw(16) << row.ratio << std::setw(16) << row.rel_error << '\n';
}

int cmd_energies(const RunConfig& config, const PhysicalParams<double>& params, std::ostream& out) {
  const auto table = energy_table(config.r_max, params);
  print_energy_table(table, out);
  write_energy_outputs(config, table, out);
  return 0;
}

int cmd_wavefunction(const RunConfig& config, const PhysicalParams<double>& params, std::ostream& out) {
  const auto traces = wavefunction_traces(config.r, params, config.n_points);
  const auto sol = solve(config.r, params);
  const Eigen::Index mid = traces.approximate.xs.size() / 2;
  out << "r = " << config.r << "\nL* = " << sol.l_star << "\ngrid half-width = " << traces.approximate.domain_half_width
      << "\npoints = " << config.n_points << "\nphi*(0) = " << traces.approximate.values(mid) << '\n';
  if (config.exact) {
    const double max_diff = (traces.approximate.values - traces.exact.values).cwiseAbs().maxCoeff();
    out << "psi(0) = " << traces.exact.values(mid) << "\nmax |phi* - psi| on grid = " << max_diff
        << "\n|<phi*, psi>| = " << overlap_diagnostics(config.r, params).back().abs_overlap << '\n';
  }
  write_trace_outputs(config, traces, out);
  return 0;
}

int cmd_compare(const RunConfig& config, const PhysicalParams<double>& params, std::ostream& out) {
  const auto table = energy_table(config.r_max, params);
  print_energy_table(table, out);
  const auto overlaps = overlap_diagnostics(config.r_max, params);
  out << '\n' << std::setw(4) << "r" << std::setw(16) << "|<phi*,psi>|" << '\n';
  for (const auto& row : overlaps) out << std::setw(4) << row.r << std::setw(16) << row.abs_overlap << '\n';
  out << "\npeak ratio phi*_0(0)/psi_0(0) = " << std::setprecision(12) << peak_ratio(params) << '\n';

  write_energy_outputs(config, table, out);
  if (wants_csv(config.format)) {
    emit_csv(overlaps, config.output_dir / "overlaps.csv");
    note_written(out, config.output_dir / "overlaps.csv");
  }
  for (int r : {0, 1}) write_trace_outputs(config, wavefunction_traces(r, params, config.n_points), out);
  return 0;
}

int cmd_optimize(const RunConfig& config, const PhysicalParams<double>& params, std::ostream& out) {
  const auto analytic = solve(config.r, params);
  const double ew = params.epsilon_omega();
  auto print = [&](const char* label, double eps, double l, double e) {
    out << label << "\n  epsilon* = " << eps << "\n  L*       = " << l << "\n  E*       = " << e << '\n';
  };

  if (config.method == OptimizeMethod::analytic) {
    print("analytic", analytic.epsilon_star, analytic.l_star, analytic.e_star);
  } else {
    const auto result = minimize_golden([&](double eps) { return energy_functional(config.r, eps, params); },
                                        1e-3 * ew, 1e3 * ew);
    const double l = half_width_for_scale(result.x_min, params);
    print("golden", result.x_min, l, result.f_min);
    out << "  iterations = " << result.iterations << (result.converged ? "" : " (bracket tolerance not reached)")
        << '\n';
    print("analytic", analytic.epsilon_star, analytic.l_star, analytic.e_star);
    out << "difference (golden - analytic)\n  epsilon* = " << result.x_min - analytic.epsilon_star
        << "\n  L*       = " << l - analytic.l_star << "\n  E*       = " << result.f_min - analytic.e_star << '\n';
  }
  const double quad =
      expectation_energy(BoxState<double>(config.r, analytic.l_star), params, config.quadrature_order);
  out << "quadrature <H> at L* (order " << config.quadrature_order << ") = " << quad << '\n'
      << "exact E_r = " << exact_energy(config.r, params) << '\n';
  return 0;
}

int cmd_validate(const PhysicalParams<double>& params, std::ostream& out) {
  const auto checks = run_validation(params);
  int failures = 0;
  out << std::scientific << std::setprecision(3);
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << std::left << std::setw(36) << c.name << std::right
        << " tol=" << c.tolerance << " observed=" << c.observed << '\n';
    failures += c.passed ? 0 : 1;
  }
  out << checks.size() - failures << '/' << checks.size() << " checks passed\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

void validate_config(const RunConfig& config) {
  if (!(config.mass > 0) || !(config.omega > 0) || !(config.hbar > 0))
    throw std::invalid_argument("mass, omega and hbar must be positive");
  if (config.r < 0 || config.r_max < 0) throw std::invalid_argument("quantum numbers must be non-negative");
  if (config.n_points < 3 || config.n_points % 2 == 0)
    throw std::invalid_argument("--n-points must be odd and at least 3");
  if (config.quadrature_order < 1 || config.quadrature_order > kMaxQuadratureOrder)
    throw std::invalid_argument("--quadrature-order must lie in [1, 10000]");
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate_config(config);
    const PhysicalParams<double> params(config.mass, config.omega, config.hbar);
    if (config.command != Command::validate && config.command != Command::optimize)
      std::filesystem::create_directories(config.output_dir);

    out.imbue(std::locale::classic());
    const auto flags = out.flags();
    const auto precision = out.precision();
    out << std::setprecision(10);
    int status = 0;
    switch (config.command) {
      case Command::energies: status = cmd_energies(config, params, out); break;
      case Command::wavefunction: status = cmd_wavefunction(config, params, out); break;
      case Command::compare: status = cmd_compare(config, params, out); break;
      case Command::optimize: status = cmd_optimize(config, params, out); break;
      case Command::validate: status = cmd_validate(params, out); break;
    }
    out.flags(flags);
    out.precision(precision);
    return status;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Variational quantization of the harmonic oscillator with particle-in-a-box trial states"};
  app.require_subcommand(1);
  RunConfig config;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--mass", config.mass, "Particle mass")->capture_default_str();
    sub->add_option("--omega", config.omega, "Angular frequency")->capture_default_str();
    sub->add_option("--hbar", config.hbar, "Reduced Planck constant")->capture_default_str();
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--output-dir", config.output_dir, "Directory for CSV/SVG files")->capture_default_str();
    const std::map<std::string, OutputFormat> formats{
        {"csv", OutputFormat::csv}, {"plot", OutputFormat::plot}, {"both", OutputFormat::both}};
    sub->add_option("--format", config.format, "csv, plot or both")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->default_str("csv");
  };

  auto* energies = app.add_subcommand("energies", "Variational vs exact energy table");
  energies->add_option("--r-max", config.r_max, "Highest quantum number")->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  add_common(energies);
  add_output(energies);

  auto* wavefunction = app.add_subcommand("wavefunction", "Sample approximate and exact wavefunctions");
  wavefunction->add_option("--r", config.r, "Quantum number")->required()->check(CLI::NonNegativeNumber);
  wavefunction->add_flag("--exact", config.exact, "Also report exact-state values, grid difference and overlap");
  wavefunction->add_option("--n-points", config.n_points, "Odd number of grid points")->capture_default_str();
  add_common(wavefunction);
  add_output(wavefunction);

  auto* compare = app.add_subcommand("compare", "Energy table, overlaps, peak ratio and r = 0, 1 traces");
  compare->add_option("--r-max", config.r_max, "Highest quantum number")->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  compare->add_option("--n-points", config.n_points, "Odd number of grid points")->capture_default_str();
  add_common(compare);
  add_output(compare);

  auto* optimize = app.add_subcommand("optimize", "Optimal box scale, half-width and energy for one state");
  optimize->add_option("--r", config.r, "Quantum number")->required()->check(CLI::NonNegativeNumber);
  const std::map<std::string, OptimizeMethod> methods{{"analytic", OptimizeMethod::analytic},
                                                      {"golden", OptimizeMethod::golden}};
  optimize->add_option("--method", config.method, "analytic or golden")
      ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case))
      ->default_str("analytic");
  optimize->add_option("--quadrature-order", config.quadrature_order, "Gauss-Legendre order for the <H> check")
      ->capture_default_str();
  add_common(optimize);

  auto* validate = app.add_subcommand("validate", "Run every oracle cross-check; nonzero exit on failure");
  add_common(validate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  if (energies->parsed()) config.command = Command::energies;
  else if (wavefunction->parsed()) config.command = Command::wavefunction;
  else if (compare->parsed()) config.command = Command::compare;
  else if (optimize->parsed()) config.command = Command::optimize;
  else config.command = Command::validate;

  return run(config, out, err);
}

}  // namespace vho::cli
