// Acceptance suite: one PASS/FAIL line per criterion. Usage:
//   acceptance <path-to-vho-cli> <scratch-dir>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "vho/box_model.hpp"
#include "vho/exact_ho.hpp"
#include "vho/numerics.hpp"
#include "vho/report.hpp"
#include "vho/validation.hpp"
#include "vho/variational.hpp"

using namespace vho;
namespace fs = std::filesystem;

namespace {

struct Criterion {
  int id;
  std::string title;
  bool passed;
  std::string detail;
};

std::string sci(double v) {
  std::ostringstream s;
  s << std::scientific << std::setprecision(3) << v;
  return s.str();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<double>> read_csv(const fs::path& p, std::string& header) {
  std::ifstream in(p);
  std::vector<std::vector<double>> rows;
  std::getline(in, header);
  for (std::string line; std::getline(in, line);) {
    std::vector<double> row;
    std::istringstream fields(line);
    for (std::string f; std::getline(fields, f, ',');) row.push_back(std::stod(f));
    rows.push_back(row);
  }
  return rows;
}

int shell(const std::string& cli, const std::string& args, const fs::path& stdout_file) {
  const std::string cmd = "\"" + cli + "\" " + args + " > \"" + stdout_file.string() + "\" 2>&1";
  return std::system(cmd.c_str());
}

std::map<std::string, std::string> snapshot(const fs::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file()) files[e.path().filename().string()] = slurp(e.path());
  return files;
}

const auto units = natural_units();

Criterion peak_ratio_criterion() {
  const double got = peak_ratio(units);
  const double err = std::abs(got - 0.9221215996);
  return {1, "peak ratio phi*_0(0)/psi_0(0) = 0.9221215996 (1e-9 abs)", err <= 1e-9,
          "got " + format_number(got) + ", |err| = " + sci(err)};
}

Criterion spectrum_criterion() {
  const double stated[] = {0.5678618, 1.6702898, 2.6272333};
  bool ok = true;
  std::string detail;
  for (int r = 0; r < 3; ++r) {
    const double e = solve(r, units).e_star / units.epsilon_omega();
    const double err = std::abs(e - stated[r]);
    const auto g = golden_cross_check(r, units);
    const bool value_ok = err <= 1e-6;
    const bool golden_ok = g.converged && g.epsilon_rel_error <= 1e-8 && g.energy_rel_error <= 1e-8;
    ok = ok && value_ok && golden_ok;
    detail += "r=" + std::to_string(r) + ": E*=" + format_number(e) + " vs " + format_number(stated[r]) +
              " |err|=" + sci(err) + (value_ok ? "" : " [OUT OF TOL]") + ", golden eps rel=" +
              sci(g.epsilon_rel_error) + " E rel=" + sci(g.energy_rel_error) + (golden_ok ? "" : " [OUT OF TOL]") +
              "; ";
  }
  return {2, "closed-form spectrum r=0,1,2 (1e-6) + golden-section confirmation (1e-8 rel)", ok, detail};
}

Criterion quadrature_criterion() {
  double worst = 0;
  for (double L : {0.5, 1.0, 2.0, 5.0})
    for (int r = 0; r <= 20; ++r) {
      const double quad = expectation_energy(BoxState<double>(r, L), units, 64);
      const double closed = energy_functional(r, box_ground_scale(L, units), units);
      worst = std::max(worst, std::abs(quad - closed) / closed);
    }
  return {3, "quadrature <H> vs closed-form functional, r<=20, L in {0.5,1,2,5} (1e-9 rel)", worst <= 1e-9,
          "max rel err = " + sci(worst)};
}

Criterion stationarity_criterion() {
  double worst = 0;
  for (int r = 0; r <= 20; ++r) {
    const auto s = solve(r, units);
    const double h = 1e-5 * s.epsilon_star;
    const double slope =
        (energy_functional(r, s.epsilon_star + h, units) - energy_functional(r, s.epsilon_star - h, units)) / (2 * h);
    worst = std::max(worst, std::abs(slope));
  }
  return {4, "stationarity |dE/deps| at eps*, r<=20 (< 1e-6 eps_omega)", worst < 1e-6 * units.epsilon_omega(),
          "max |slope| = " + sci(worst)};
}

Criterion bound_criterion() {
  bool ok = solve(0, units).e_star > exact_energy(0, units);
  std::string detail = "E0* - E0 = " + format_number(solve(0, units).e_star - exact_energy(0, units));
  int violations = 0;
  for (int r = 0; r <= 200; ++r) {
    const double diff = solve(r, units).e_star - exact_energy(r, units);
    if (r <= 3 ? !(diff > 0) : !(diff < 0)) ++violations;
  }
  ok = ok && violations == 0;
  detail += ", crossover violations for r<=200: " + std::to_string(violations);
  return {5, "ground-state bound and crossover E*>E for r<=3, E*<E for r>=4", ok, detail};
}

Criterion basis_criterion() {
  const auto checks = run_validation(units);
  const char* wanted[] = {"box_orthonormality", "box_parity", "box_boundary", "box_compact_form",
                          "exact_orthonormality", "exact_parity"};
  bool ok = true;
  std::string detail;
  for (const char* name : wanted) {
    const auto it = std::find_if(checks.begin(), checks.end(), [&](const CheckResult& c) { return c.name == name; });
    if (it == checks.end()) {
      ok = false;
      detail += std::string(name) + " missing; ";
      continue;
    }
    ok = ok && it->passed;
    detail += it->name + "=" + sci(it->observed) + "/" + sci(it->tolerance) + " ";
  }
  return {6, "basis integrity: orthonormality, parity, boundary", ok, detail};
}

Criterion figure_criterion(const std::string& cli, const fs::path& scratch) {
  const fs::path dir = scratch / "figures";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const int status = shell(cli, "compare --r-max 10 --output-dir \"" + dir.string() + "\"", dir / "stdout.txt");
  if (status != 0) return {7, "figure reproduction from `compare --r-max 10`", false, "compare exited nonzero"};

  std::string header;
  const auto rows = read_csv(dir / "energies.csv", header);
  bool ok = header == "r,e_star_over_ew,e_exact_over_ew,ratio,rel_error" && rows.size() == 11;
  std::string detail;
  for (std::size_t i = 1; ok && i < rows.size(); ++i)
    if (!(rows[i][1] > rows[i - 1][1]) || !(rows[i][2] > rows[i - 1][2])) ok = false;
  detail += ok ? "series monotone; " : "energy table shape or monotonicity broken; ";
  if (rows.size() >= 2) {
    const bool close = std::abs(rows[0][4]) <= 0.14 && std::abs(rows[1][4]) <= 0.12;
    ok = ok && close;
    detail += "rel err r0=" + sci(rows[0][4]) + " r1=" + sci(rows[1][4]) + "; ";
  }

  for (int r : {0, 1}) {
    const auto trace = read_csv(dir / ("wavefunction_r" + std::to_string(r) + ".csv"), header);
    double worst = 0;
    for (const auto& row : trace) {
      worst = std::max(worst, std::abs(row[1] - optimized_wavefunction(r, units, row[0])));
      worst = std::max(worst, std::abs(row[2] - exact_wavefunction(r, units, row[0])));
    }
    const bool shape = header == "x,approximate,exact" && trace.size() == 401 && trace[200][0] == 0.0;
    const bool origin = r == 0 ? std::abs(trace[200][1] / trace[200][2] - 0.9221215996) <= 1e-9
                               : trace[200][1] == 0.0 && trace[200][2] == 0.0;
    ok = ok && shape && origin && worst == 0.0;
    detail += "trace r=" + std::to_string(r) + " max dev " + sci(worst) + (shape && origin ? "" : " [BAD]") + "; ";
  }
  return {7, "figure reproduction from `compare --r-max 10`: energy table and r=0,1 traces", ok, detail};
}

Criterion overlap_criterion() {
  const auto rows = overlap_diagnostics(10, units);
  bool ok = true;
  double worst = 0;
  for (const auto& row : rows) worst = std::max(worst, row.abs_overlap);
  ok = worst <= 1 + 1e-10;
  // Golden values from 40-digit adaptive quadrature, independent of Gauss-Legendre.
  const double e0 = std::abs(rows[0].abs_overlap - 0.99426308799994924);
  const double e1 = std::abs(rows[1].abs_overlap - 0.98583102136795026);
  ok = ok && e0 <= 1e-10 && e1 <= 1e-10;
  return {8, "overlaps |<phi*_r,psi_r>| <= 1+1e-10 (r<=10); r=0,1 golden to 1e-10", ok,
          "max = " + format_number(worst) + ", r0 dev " + sci(e0) + ", r1 dev " + sci(e1)};
}

Criterion determinism_criterion(const std::string& cli, const fs::path& scratch) {
  const std::vector<std::string> commands = {
      "energies --r-max 12 --format both",   "wavefunction --r 3 --exact --format both",
      "compare --r-max 10 --format both",    "optimize --r 5 --method golden",
      "optimize --r 2 --method analytic",    "validate"};
  bool ok = true;
  std::string detail;
  int idx = 0;
  for (const auto& args : commands) {
    const fs::path dir = scratch / ("determinism_" + std::to_string(idx++));
    std::map<std::string, std::string> runs[2];
    std::string outs[2];
    for (int k = 0; k < 2; ++k) {
      fs::remove_all(dir);
      fs::create_directories(dir);
      const fs::path log = scratch / "determinism_stdout.txt";
      const bool writes_files = args.rfind("optimize", 0) != 0 && args != "validate";
      const std::string full = writes_files ? args + " --output-dir \"" + dir.string() + "\"" : args;
      if (shell(cli, full, log) != 0) {
        ok = false;
        detail += "'" + args + "' exited nonzero; ";
      }
      outs[k] = slurp(log);
      runs[k] = snapshot(dir);
    }
    if (runs[0] != runs[1] || outs[0] != outs[1]) {
      ok = false;
      detail += "'" + args + "' differs; ";
    }
  }
  if (detail.empty()) detail = std::to_string(commands.size()) + " commands byte-identical across runs";
  return {9, "determinism: identical config gives byte-identical files and stdout", ok, detail};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <vho-cli> <scratch-dir>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const fs::path scratch = argv[2];
  fs::create_directories(scratch);

  std::vector<Criterion> results;
  auto guarded = [&](int id, auto&& fn) {
    try {
      results.push_back(fn());
    } catch (const std::exception& e) {
      results.push_back({id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what()});
    }
  };
  guarded(1, peak_ratio_criterion);
  guarded(2, spectrum_criterion);
  guarded(3, quadrature_criterion);
  guarded(4, stationarity_criterion);
  guarded(5, bound_criterion);
  guarded(6, basis_criterion);
  guarded(7, [&] { return figure_criterion(cli, scratch); });
  guarded(8, overlap_criterion);
  guarded(9, [&] { return determinism_criterion(cli, scratch); });

  int failed = 0;
  for (const auto& c : results) {
    std::cout << (c.passed ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << "\n       " << c.detail << '\n';
    failed += c.passed ? 0 : 1;
  }
  std::cout << results.size() - failed << '/' << results.size() << " acceptance criteria passed\n";
  return failed == 0 ? 0 : 1;
}
