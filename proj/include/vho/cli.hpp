#ifndef VHO_CLI_HPP
#define VHO_CLI_HPP

#include <filesystem>
#include <iosfwd>
#include <string>

namespace vho::cli {

enum class Command { energies, wavefunction, compare, optimize, validate };
enum class OutputFormat { csv, plot, both };
enum class OptimizeMethod { analytic, golden };

struct RunConfig {
  Command command = Command::validate;
  int r = 0;      // wavefunction, optimize
  int r_max = 10; // energies, compare
  double mass = 1;
  double omega = 1;
  double hbar = 1;
  int n_points = 401;
  int quadrature_order = 64;
  bool exact = false;
  OptimizeMethod method = OptimizeMethod::analytic;
  std::filesystem::path output_dir = ".";
  OutputFormat format = OutputFormat::csv;
};

/// Throws std::invalid_argument describing the first bad field.
void validate_config(const RunConfig& config);

/// Executes a validated config. Human-readable tables go to `out`; errors to
/// `err`. Returns the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and runs it.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace vho::cli

#endif  // VHO_CLI_HPP
