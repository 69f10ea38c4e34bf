#ifndef VHO_EXACT_HO_HPP
#define VHO_EXACT_HO_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "vho/params.hpp"

namespace vho {

inline constexpr int kMaxHermiteDegree = 170;

/// (r + 1/2) hbar omega.
template <typename Scalar>
Scalar exact_energy(int r, const PhysicalParams<Scalar>& params) {
  if (r < 0) throw std::domain_error("exact_energy: quantum number must be non-negative");
  return (Scalar(r) + Scalar(0.5)) * params.epsilon_omega();
}

/// Physicists' Hermite polynomial H_n(y) by the three-term recurrence.
/// Degrees above 170 are rejected; use exact_wavefunction for large n.
template <typename Scalar = double>
Scalar hermite(int n, Scalar y) {
  if (n < 0 || n > kMaxHermiteDegree) throw std::domain_error("hermite: degree must lie in [0, 170]");
  Scalar h0 = 1;
  if (n == 0) return h0;
  Scalar h1 = Scalar(2) * y;
  for (int k = 1; k < n; ++k) {
    const Scalar h2 = Scalar(2) * y * h1 - Scalar(2 * k) * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

/// Normalized oscillator eigenfunction psi_r(x), evaluated with the
/// normalized recurrence
///   psi_{n+1} = sqrt(2/(n+1)) y psi_n - sqrt(n/(n+1)) psi_{n-1},  y = x sqrt(alpha),
/// so 2^r r! is never formed.
template <typename Scalar>
Scalar exact_wavefunction(int r, const PhysicalParams<Scalar>& params, Scalar x) {
  if (r < 0) throw std::domain_error("exact_wavefunction: quantum number must be non-negative");
  const Scalar alpha = params.alpha();
  const Scalar y = x * std::sqrt(alpha);
  Scalar prev = 0;
  Scalar cur = std::pow(alpha / std::numbers::pi_v<Scalar>, Scalar(0.25)) * std::exp(-y * y / Scalar(2));
  for (int n = 0; n < r; ++n) {
    const Scalar next = std::sqrt(Scalar(2) / Scalar(n + 1)) * y * cur - std::sqrt(Scalar(n) / Scalar(n + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Half-width of the window used to integrate exact states: 12/sqrt(alpha).
template <typename Scalar>
Scalar exact_integration_half_width(const PhysicalParams<Scalar>& params) {
  return Scalar(12) / std::sqrt(params.alpha());
}

}  // namespace vho

#endif  // VHO_EXACT_HO_HPP
