#include <doctest.h>

#include <cmath>
#include <numbers>

#include "vho/exact_ho.hpp"
#include "vho/numerics.hpp"
#include "vho/validation.hpp"

using namespace vho;

namespace {

constexpr double pi = std::numbers::pi;

// Direct formula (alpha/pi)^(1/4) (2^r r!)^(-1/2) H_r(x sqrt(alpha)) exp(-alpha x^2/2).
double direct_psi(int r, double alpha, double x) {
  const double y = x * std::sqrt(alpha);
  const double norm = std::pow(alpha / pi, 0.25) / std::sqrt(std::pow(2.0, r) * std::tgamma(r + 1.0));
  return norm * hermite(r, y) * std::exp(-y * y / 2);
}

}  // namespace

TEST_CASE("exact_energy") {
  CHECK(exact_energy(0, natural_units()) == 0.5);
  CHECK(exact_energy(3, natural_units()) == 3.5);
  CHECK(exact_energy(0, PhysicalParams<double>(1.0, 2.0, 1.0)) == 1.0);
  CHECK_THROWS_AS(exact_energy(-1, natural_units()), std::domain_error);
}

TEST_CASE("hermite reproduces the low-order polynomials") {
  CHECK(hermite(2, 3.0) == 34.0);
  CHECK(hermite(3, 2.0) == 40.0);
  for (double y : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
    CHECK(hermite(0, y) == 1.0);
    CHECK(hermite(1, y) == 2 * y);
    CHECK(hermite(2, y) == 4 * y * y - 2);
    CHECK(hermite(3, y) == 8 * y * y * y - 12 * y);
  }
  CHECK_NOTHROW(hermite(170, 0.5));
  CHECK_THROWS_AS(hermite(171, 0.5), std::domain_error);
  CHECK_THROWS_AS(hermite(-1, 0.5), std::domain_error);
}

TEST_CASE("exact_wavefunction point values") {
  const auto p = natural_units();
  CHECK(exact_wavefunction(0, p, 0.0) == doctest::Approx(0.75112554446494248).epsilon(1e-15));
  CHECK(exact_wavefunction(1, PhysicalParams<double>(2.0, 3.0, 0.5), 0.0) == 0.0);
  // psi_1 = (alpha/pi)^(1/4) x sqrt(2 alpha) exp(-alpha x^2 / 2)
  const PhysicalParams<double> q(1.0, 4.0, 1.0);
  const double x = 0.3;
  CHECK(exact_wavefunction(1, q, x) ==
        doctest::Approx(std::pow(4.0 / pi, 0.25) * x * std::sqrt(8.0) * std::exp(-2 * x * x)).epsilon(1e-14));
}

TEST_CASE("normalized recurrence agrees with the direct formula") {
  const auto p = natural_units();
  for (int r = 0; r <= 10; ++r)
    for (int i = 0; i <= 240; ++i) {
      const double x = -6 + 0.05 * i;
      CHECK(std::abs(exact_wavefunction(r, p, x) - direct_psi(r, 1.0, x)) <= 1e-10);
    }
}

TEST_CASE("parity on a 101-point grid") {
  const auto p = natural_units();
  for (int r = 0; r <= 20; ++r) {
    const double sign = r % 2 == 0 ? 1 : -1;
    for (int i = 0; i <= 100; ++i) {
      const double x = -6 + 0.12 * i;
      CHECK(std::abs(exact_wavefunction(r, p, -x) - sign * exact_wavefunction(r, p, x)) <= 1e-12);
    }
  }
}

TEST_CASE("orthonormality on [-12, 12]") {
  const auto p = natural_units();
  const double W = exact_integration_half_width(p);
  CHECK(W == 12.0);
  const auto rule = gauss_legendre(kExactStateQuadratureOrder);
  for (int r = 0; r <= 10; ++r)
    for (int s = 0; s <= 10; ++s) {
      const double ip = overlap([&](double x) { return exact_wavefunction(r, p, x); },
                                [&](double x) { return exact_wavefunction(s, p, x); }, -W, W, rule);
      CHECK(std::abs(ip - (r == s ? 1.0 : 0.0)) <= 1e-8);
    }
}

TEST_CASE("large quantum numbers stay finite") {
  const auto p = natural_units();
  for (double x : {0.0, 0.7, 5.0, 20.0}) CHECK(std::isfinite(exact_wavefunction(500, p, x)));
  // Norm of a high state over its classically allowed region and tails.
  const double W = 40;
  const double norm = integrate(
      [&](double x) {
        const double v = exact_wavefunction(300, p, x);
        return v * v;
      },
      -W, W, gauss_legendre(1200));
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-8));
}
