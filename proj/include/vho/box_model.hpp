#ifndef VHO_BOX_MODEL_HPP
#define VHO_BOX_MODEL_HPP

// Particle in a box of half-width L: eigenstates and eigenvalues. These are
// the trial functions of the variational calculation.

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "vho/params.hpp"

namespace vho {

/// Quantum number r and box half-width L identifying one box eigenstate.
template <typename Scalar = double>
struct BoxState {
  int r = 0;
  Scalar half_width = Scalar(1);

  BoxState() = default;
  BoxState(int r_, Scalar half_width_) : r(r_), half_width(half_width_) {
    if (r_ < 0) throw std::domain_error("BoxState: quantum number must be non-negative");
    if (!(half_width_ > 0)) throw std::domain_error("BoxState: half-width must be positive");
  }

  bool even() const { return r % 2 == 0; }
};

/// Ground-state energy of the free particle in the box,
/// hbar^2 pi^2 / (8 m L^2).
template <typename Scalar>
Scalar box_ground_scale(Scalar half_width, const PhysicalParams<Scalar>& params) {
  if (!(half_width > 0)) throw std::domain_error("box_ground_scale: half-width must be positive");
  const Scalar pi = std::numbers::pi_v<Scalar>;
  return params.hbar() * params.hbar() * pi * pi / (Scalar(8) * params.mass() * half_width * half_width);
}

/// Inverse of box_ground_scale: the half-width whose ground energy is epsilon.
template <typename Scalar>
Scalar half_width_for_scale(Scalar epsilon, const PhysicalParams<Scalar>& params) {
  if (!(epsilon > 0)) throw std::domain_error("half_width_for_scale: epsilon must be positive");
  const Scalar pi = std::numbers::pi_v<Scalar>;
  return pi * params.hbar() / std::sqrt(Scalar(8) * params.mass() * epsilon);
}

template <typename Scalar>
Scalar box_energy(const BoxState<Scalar>& state, const PhysicalParams<Scalar>& params) {
  const Scalar n = Scalar(state.r + 1);
  return n * n * box_ground_scale(state.half_width, params);
}

/// Wave number (r+1) pi / (2L) of the box state.
template <typename Scalar>
Scalar box_wavenumber(const BoxState<Scalar>& state) {
  return Scalar(state.r + 1) * std::numbers::pi_v<Scalar> / (Scalar(2) * state.half_width);
}

/// Box eigenfunction: cos(kx)/sqrt(L) for even r, sin(kx)/sqrt(L) for odd r,
/// zero outside [-L, L].
template <typename Scalar>
Scalar box_wavefunction(const BoxState<Scalar>& state, Scalar x) {
  using std::abs;
  const Scalar L = state.half_width;
  if (abs(x) > L) return Scalar(0);
  const Scalar kx = box_wavenumber(state) * x;
  const Scalar amplitude = Scalar(1) / std::sqrt(L);
  return state.even() ? amplitude * std::cos(kx) : amplitude * std::sin(kx);
}

/// First derivative of box_wavefunction inside the box (zero outside).
template <typename Scalar>
Scalar box_wavefunction_derivative(const BoxState<Scalar>& state, Scalar x) {
  using std::abs;
  const Scalar L = state.half_width;
  if (abs(x) > L) return Scalar(0);
  const Scalar k = box_wavenumber(state);
  const Scalar amplitude = k / std::sqrt(L);
  return state.even() ? -amplitude * std::sin(k * x) : amplitude * std::cos(k * x);
}

/// Single-expression form sqrt(1/L) cos[(pi/2) sin^2(r pi/2) - (r+1) pi x / 2L].
/// Kept for cross-checking against box_wavefunction; not used on hot paths.
template <typename Scalar>
Scalar box_wavefunction_compact(const BoxState<Scalar>& state, Scalar x) {
  using std::abs;
  const Scalar L = state.half_width;
  if (abs(x) > L) return Scalar(0);
  const Scalar pi = std::numbers::pi_v<Scalar>;
  const Scalar s = std::sin(Scalar(state.r) * pi / Scalar(2));
  return std::sqrt(Scalar(1) / L) * std::cos(pi / Scalar(2) * s * s - box_wavenumber(state) * x);
}

}  // namespace vho

#endif  // VHO_BOX_MODEL_HPP
