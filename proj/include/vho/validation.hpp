#ifndef VHO_VALIDATION_HPP
#define VHO_VALIDATION_HPP

#include <string>
#include <vector>

#include "vho/params.hpp"

namespace vho {

/// Outcome of one oracle cross-check. `observed` is the worst error seen
/// (or a violation count for yes/no properties, with tolerance 0).
struct CheckResult {
  std::string name;
  double tolerance = 0;
  double observed = 0;
  bool passed = false;
};

/// Quadrature order used for exact-state integrals over [-12, 12]/sqrt(alpha).
inline constexpr int kExactStateQuadratureOrder = 160;

/// Relative error of golden-section search against the analytic optimum for
/// the r-th functional, run in extended precision.
struct GoldenCrossCheck {
  double epsilon_rel_error = 0;
  double energy_rel_error = 0;
  bool converged = false;
};
GoldenCrossCheck golden_cross_check(int r, const PhysicalParams<double>& params = {});

/// Runs every cross-check of the closed-form results against the independent
/// quadrature and minimization oracles.
std::vector<CheckResult> run_validation(const PhysicalParams<double>& params = {});

}  // namespace vho

#endif  // VHO_VALIDATION_HPP
