#include "vho/report.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "vho/exact_ho.hpp"
#include "vho/numerics.hpp"
#include "vho/svg_plot.hpp"
#include "vho/variational.hpp"

namespace vho {

namespace {

void write_file(const std::filesystem::path& destination, const std::string& contents) {
  std::ofstream out(destination, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + destination.string() + "' for writing: " + std::strerror(errno));
  out << contents;
  out.flush();
  if (!out) throw std::runtime_error("write to '" + destination.string() + "' failed: " + std::strerror(errno));
}

std::vector<double> to_std(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

}  // namespace

std::string format_number(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::vector<EnergyComparisonRow> energy_table(int r_max, const PhysicalParams<double>& params) {
  if (r_max < 0) throw std::domain_error("energy_table: r_max must be non-negative");
  std::vector<EnergyComparisonRow> rows;
  rows.reserve(r_max + 1);
  const double ew = params.epsilon_omega();
  for (int r = 0; r <= r_max; ++r) {
    EnergyComparisonRow row;
    row.r = r;
    row.e_star_over_ew = solve(r, params).e_star / ew;
    row.e_exact_over_ew = exact_energy(r, params) / ew;
    row.ratio = row.e_star_over_ew / row.e_exact_over_ew;
    row.rel_error = (row.e_star_over_ew - row.e_exact_over_ew) / row.e_exact_over_ew;
    rows.push_back(row);
  }
  return rows;
}

double peak_ratio_pointwise(const PhysicalParams<double>& params) {
  return optimized_wavefunction(0, params, 0.0) / exact_wavefunction(0, params, 0.0);
}

double peak_ratio(const PhysicalParams<double>& params) {
  constexpr double pi = std::numbers::pi;
  const double closed = std::pow(2.0 / pi, 0.25) * std::pow((pi * pi - 6.0) / 3.0, 0.125);
  const double pointwise = peak_ratio_pointwise(params);
  if (std::abs(closed - pointwise) > 1e-12)
    throw std::logic_error("peak_ratio: closed form " + format_number(closed) + " disagrees with pointwise ratio " +
                           format_number(pointwise));
  return closed;
}

TracePair wavefunction_traces(int r, const PhysicalParams<double>& params, int n_points) {
  if (r < 0) throw std::domain_error("wavefunction_traces: quantum number must be non-negative");
  if (n_points < 3 || n_points % 2 == 0)
    throw std::domain_error("wavefunction_traces: n_points must be odd and at least 3");

  const double l_star = solve(r, params).l_star;
  const double half_width = std::max(l_star, 6.0 / std::sqrt(params.alpha()));
  const BoxState<double> box(r, l_star);

  // Symmetric by construction: x_i = -x_{n-1-i} and x_{n/2} = 0 exactly.
  Eigen::VectorXd xs(n_points);
  const int mid = n_points / 2;
  for (int i = 0; i <= mid; ++i) {
    const double x = half_width * static_cast<double>(mid - i) / mid;
    xs(i) = -x;
    xs(n_points - 1 - i) = x;
  }

  TracePair pair;
  pair.approximate = {r, TraceKind::approximate, xs, xs.unaryExpr([&](double x) { return box_wavefunction(box, x); }),
                      half_width};
  pair.exact = {r, TraceKind::exact, xs, xs.unaryExpr([&](double x) { return exact_wavefunction(r, params, x); }),
                half_width};
  return pair;
}

std::vector<OverlapRow> overlap_diagnostics(int r_max, const PhysicalParams<double>& params) {
  if (r_max < 0) throw std::domain_error("overlap_diagnostics: r_max must be non-negative");
  std::vector<OverlapRow> rows;
  rows.reserve(r_max + 1);
  for (int r = 0; r <= r_max; ++r) {
    const BoxState<double> box(r, solve(r, params).l_star);
    const double value = overlap([&](double x) { return box_wavefunction(box, x); },
                                 [&](double x) { return exact_wavefunction(r, params, x); }, -box.half_width,
                                 box.half_width, default_quadrature_order(r));
    rows.push_back({r, std::abs(value)});
  }
  return rows;
}

void emit_csv(const std::vector<EnergyComparisonRow>& table, const std::filesystem::path& destination) {
  std::ostringstream out;
  out << "r,e_star_over_ew,e_exact_over_ew,ratio,rel_error\n";
  for (const auto& row : table)
    out << row.r << ',' << format_number(row.e_star_over_ew) << ',' << format_number(row.e_exact_over_ew) << ','
        << format_number(row.ratio) << ',' << format_number(row.rel_error) << '\n';
  write_file(destination, out.str());
}

void emit_csv(const TracePair& traces, const std::filesystem::path& destination) {
  if (traces.approximate.xs.size() != traces.exact.xs.size() || traces.approximate.xs != traces.exact.xs)
    throw std::domain_error("emit_csv: approximate and exact traces must share a grid");
  std::ostringstream out;
  out << "x,approximate,exact\n";
  for (Eigen::Index i = 0; i < traces.approximate.xs.size(); ++i)
    out << format_number(traces.approximate.xs(i)) << ',' << format_number(traces.approximate.values(i)) << ','
        << format_number(traces.exact.values(i)) << '\n';
  write_file(destination, out.str());
}

void emit_csv(const std::vector<OverlapRow>& overlaps, const std::filesystem::path& destination) {
  std::ostringstream out;
  out << "r,abs_overlap\n";
  for (const auto& row : overlaps) out << row.r << ',' << format_number(row.abs_overlap) << '\n';
  write_file(destination, out.str());
}

void emit_plot(const std::vector<EnergyComparisonRow>& table, const std::filesystem::path& destination) {
  if (table.empty()) throw std::domain_error("emit_plot: energy table is empty");
  PlotSeries approx{"approximate E*_r / hbar omega", {}, {}, "#d62728", true};
  PlotSeries exact{"exact E_r / hbar omega", {}, {}, "#1f77b4", true};
  for (const auto& row : table) {
    approx.xs.push_back(row.r);
    approx.ys.push_back(row.e_star_over_ew);
    exact.xs.push_back(row.r);
    exact.ys.push_back(row.e_exact_over_ew);
  }
  SvgPlot plot("Approximate and exact oscillator eigenenergies", "r", "energy / hbar omega");
  plot.add_series(std::move(approx));
  plot.add_series(std::move(exact));
  write_file(destination, plot.render());
}

void emit_plot(const TracePair& traces, const std::filesystem::path& destination) {
  if (traces.approximate.xs.size() == 0) throw std::domain_error("emit_plot: traces are empty");
  const std::string r = std::to_string(traces.approximate.r);
  SvgPlot plot("Approximate and exact state r = " + r, "x", "amplitude");
  plot.add_series({"approximate phi*_" + r, to_std(traces.approximate.xs), to_std(traces.approximate.values),
                   "#d62728", false});
  plot.add_series({"exact psi_" + r, to_std(traces.exact.xs), to_std(traces.exact.values), "#1f77b4", false});
  write_file(destination, plot.render());
}

}  // namespace vho
