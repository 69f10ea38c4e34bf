#ifndef VHO_REPORT_HPP
#define VHO_REPORT_HPP

// Comparison of the variational results with the exact oscillator: energy
// table, wavefunction traces, ground-state peak ratio and overlaps, plus
// CSV and SVG emission.

#include <Eigen/Core>

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "vho/params.hpp"

namespace vho {

struct EnergyComparisonRow {
  int r = 0;
  double e_star_over_ew = 0;
  double e_exact_over_ew = 0;
  double ratio = 0;      // e_star / e_exact
  double rel_error = 0;  // (e_star - e_exact) / e_exact, signed
};

enum class TraceKind { approximate, exact };

struct WavefunctionTrace {
  int r = 0;
  TraceKind kind = TraceKind::approximate;
  Eigen::VectorXd xs;
  Eigen::VectorXd values;
  double domain_half_width = 0;
};

struct TracePair {
  WavefunctionTrace approximate;
  WavefunctionTrace exact;
};

struct OverlapRow {
  int r = 0;
  double abs_overlap = 0;
};

std::vector<EnergyComparisonRow> energy_table(int r_max, const PhysicalParams<double>& params = {});

/// phi_0*(0) / psi_0(0) = (2/pi)^(1/4) ((pi^2 - 6)/3)^(1/8), independent of
/// alpha. Throws std::logic_error if the closed form and the pointwise ratio
/// of the two wavefunctions disagree by more than 1e-12.
double peak_ratio(const PhysicalParams<double>& params = {});

/// Ratio of the two wavefunctions evaluated at x = 0.
double peak_ratio_pointwise(const PhysicalParams<double>& params = {});

/// Approximate and exact r-th states on a common grid of n_points (odd, >= 3)
/// spanning [-W, W] with W = max(L*(r), 6/sqrt(alpha)).
TracePair wavefunction_traces(int r, const PhysicalParams<double>& params = {}, int n_points = 401);

/// |<phi_r*, psi_r>| over [-L*(r), L*(r)] for r = 0..r_max.
std::vector<OverlapRow> overlap_diagnostics(int r_max, const PhysicalParams<double>& params = {});

/// Shortest-round-trip-safe text for a double: 17 significant digits, C locale.
std::string format_number(double value);

void emit_csv(const std::vector<EnergyComparisonRow>& table, const std::filesystem::path& destination);
void emit_csv(const TracePair& traces, const std::filesystem::path& destination);
void emit_csv(const std::vector<OverlapRow>& overlaps, const std::filesystem::path& destination);

void emit_plot(const std::vector<EnergyComparisonRow>& table, const std::filesystem::path& destination);
void emit_plot(const TracePair& traces, const std::filesystem::path& destination);

}  // namespace vho

#endif  // VHO_REPORT_HPP
