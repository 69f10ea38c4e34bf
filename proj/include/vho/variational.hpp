#ifndef VHO_VARIATIONAL_HPP
#define VHO_VARIATIONAL_HPP

// Closed-form variational quantization of the free oscillator with box
// eigenstates as trial functions. The variation parameter is the box ground
// scale epsilon; the optimal half-width L* follows from it.

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "vho/box_model.hpp"
#include "vho/params.hpp"

namespace vho {

/// E_r(epsilon) = a_r * epsilon + b_r / epsilon.
template <typename Scalar = double>
struct EnergyCoefficients {
  Scalar a_r;
  Scalar b_r;
};

template <typename Scalar = double>
struct VariationalSolution {
  int r = 0;
  Scalar gamma;         // epsilon* / epsilon_omega
  Scalar epsilon_star;  // optimal box ground scale
  Scalar l_star;        // optimal box half-width
  Scalar e_star;        // optimized energy
};

/// Coefficients for an explicit energy scale epsilon_omega >= 0. A zero scale
/// is the free-particle limit, which PhysicalParams cannot represent.
template <typename Scalar>
EnergyCoefficients<Scalar> coefficients(int r, Scalar epsilon_omega) {
  if (r < 0) throw std::domain_error("coefficients: quantum number must be non-negative");
  const Scalar pi = std::numbers::pi_v<Scalar>;
  const Scalar n = Scalar(r + 1);
  const Scalar b = epsilon_omega * epsilon_omega / Scalar(8) * (pi * pi / Scalar(6) - Scalar(1) / (n * n));
  return {n * n, b};
}

template <typename Scalar>
EnergyCoefficients<Scalar> coefficients(int r, const PhysicalParams<Scalar>& params) {
  return coefficients(r, params.epsilon_omega());
}

/// Energy of the r-th box state of ground scale epsilon in the oscillator
/// potential.
template <typename Scalar>
Scalar energy_functional(int r, Scalar epsilon, Scalar epsilon_omega) {
  if (!(epsilon > 0)) throw std::domain_error("energy_functional: epsilon must be positive");
  const auto c = coefficients(r, epsilon_omega);
  return c.a_r * epsilon + c.b_r / epsilon;
}

template <typename Scalar>
Scalar energy_functional(int r, Scalar epsilon, const PhysicalParams<Scalar>& params) {
  return energy_functional(r, epsilon, params.epsilon_omega());
}

/// sqrt[(pi^2 (r+1)^2 - 6) / (48 (r+1)^4)].
template <typename Scalar = double>
Scalar gamma(int r) {
  if (r < 0) throw std::domain_error("gamma: quantum number must be non-negative");
  const Scalar pi = std::numbers::pi_v<Scalar>;
  const Scalar n2 = Scalar(r + 1) * Scalar(r + 1);
  return std::sqrt((pi * pi * n2 - Scalar(6)) / (Scalar(48) * n2 * n2));
}

template <typename Scalar>
VariationalSolution<Scalar> solve(int r, const PhysicalParams<Scalar>& params) {
  const Scalar pi = std::numbers::pi_v<Scalar>;
  const Scalar n2 = Scalar(r + 1) * Scalar(r + 1);
  VariationalSolution<Scalar> s;
  s.r = r;
  s.gamma = gamma<Scalar>(r);
  s.epsilon_star = s.gamma * params.epsilon_omega();
  s.l_star = Scalar(1) / std::sqrt(Scalar(8) * params.alpha() * s.gamma / (pi * pi));
  s.e_star = params.epsilon_omega() * std::sqrt((pi * pi * n2 - Scalar(6)) / Scalar(12));
  return s;
}

/// Box state of half-width L*(r): the optimized approximation to the r-th
/// oscillator eigenstate. Zero outside [-L*, L*].
template <typename Scalar>
Scalar optimized_wavefunction(int r, const PhysicalParams<Scalar>& params, Scalar x) {
  return box_wavefunction(BoxState<Scalar>(r, solve(r, params).l_star), x);
}

}  // namespace vho

#endif  // VHO_VARIATIONAL_HPP
