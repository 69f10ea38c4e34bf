#ifndef VHO_PARAMS_HPP
#define VHO_PARAMS_HPP

#include <stdexcept>

namespace vho {

/// Mass, angular frequency and reduced Planck constant of the oscillator.
/// The derived scales alpha = m*omega/hbar (1/length^2) and
/// epsilon_omega = hbar*omega (energy) are recomputed on every access.
template <typename Scalar = double>
class PhysicalParams {
 public:
  PhysicalParams() = default;

  PhysicalParams(Scalar mass, Scalar omega, Scalar hbar) : mass_(mass), omega_(omega), hbar_(hbar) {
    if (!(mass > 0) || !(omega > 0) || !(hbar > 0))
      throw std::domain_error("PhysicalParams: mass, omega and hbar must be positive");
  }

  Scalar mass() const { return mass_; }
  Scalar omega() const { return omega_; }
  Scalar hbar() const { return hbar_; }

  Scalar alpha() const { return mass_ * omega_ / hbar_; }
  Scalar epsilon_omega() const { return hbar_ * omega_; }

  template <typename Other>
  PhysicalParams<Other> cast() const {
    return PhysicalParams<Other>(Other(mass_), Other(omega_), Other(hbar_));
  }

 private:
  Scalar mass_{1};
  Scalar omega_{1};
  Scalar hbar_{1};
};

/// m = omega = hbar = 1, so alpha = epsilon_omega = 1.
template <typename Scalar = double>
PhysicalParams<Scalar> natural_units() {
  return PhysicalParams<Scalar>();
}

}  // namespace vho

#endif  // VHO_PARAMS_HPP
