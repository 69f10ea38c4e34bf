#include <doctest.h>

#include <cmath>
#include <numbers>

#include "vho/box_model.hpp"
#include "vho/numerics.hpp"

using namespace vho;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("box_ground_scale") {
  const PhysicalParams<double> p(2.0, 3.0, 0.7);
  const double unit_L = pi * p.hbar() / std::sqrt(8 * p.mass());
  CHECK(box_ground_scale(unit_L, p) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(box_ground_scale(2 * unit_L, p) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(box_ground_scale(2.0845, natural_units()) == doctest::Approx(0.28392652000960609).epsilon(1e-14));
  CHECK_THROWS_AS(box_ground_scale(0.0, p), std::domain_error);
  CHECK_THROWS_AS(box_ground_scale(-1.0, p), std::domain_error);
  CHECK(half_width_for_scale(box_ground_scale(1.7, p), p) == doctest::Approx(1.7).epsilon(1e-14));
}

TEST_CASE("box_energy scales as (r+1)^2") {
  const auto p = natural_units();
  const double unit_L = pi / std::sqrt(8.0);
  CHECK(box_energy(BoxState<double>(0, 1.3), p) == box_ground_scale(1.3, p));
  CHECK(box_energy(BoxState<double>(2, unit_L), p) == doctest::Approx(9.0).epsilon(1e-14));
  CHECK(box_energy(BoxState<double>(5, unit_L), p) == doctest::Approx(36.0).epsilon(1e-14));
}

TEST_CASE("BoxState rejects invalid input") {
  CHECK_THROWS_AS(BoxState<double>(-1, 1.0), std::domain_error);
  CHECK_THROWS_AS(BoxState<double>(0, 0.0), std::domain_error);
  CHECK(BoxState<double>(4, 1.0).even());
  CHECK_FALSE(BoxState<double>(3, 1.0).even());
}

TEST_CASE("box_wavefunction point values") {
  const double L = 1.7;
  CHECK(box_wavefunction(BoxState<double>(0, L), 0.0) == doctest::Approx(1 / std::sqrt(L)));
  CHECK(box_wavefunction(BoxState<double>(1, L), L / 2) == doctest::Approx(1 / std::sqrt(L)).epsilon(1e-14));
  for (int r = 0; r <= 20; ++r) {
    const BoxState<double> s(r, L);
    CHECK(std::abs(box_wavefunction(s, L)) < 1e-12);
    CHECK(std::abs(box_wavefunction(s, -L)) < 1e-12);
    CHECK(box_wavefunction(s, L * 1.0001) == 0.0);
    CHECK(box_wavefunction(s, -3 * L) == 0.0);
  }
}

TEST_CASE("parity, compact form and derivative on a 101-point grid") {
  for (double L : {0.5, 2.0}) {
    for (int r = 0; r <= 20; ++r) {
      const BoxState<double> s(r, L);
      const double sign = r % 2 == 0 ? 1 : -1;
      for (int i = 0; i <= 100; ++i) {
        const double x = -L + 2 * L * i / 100.0;
        CHECK(std::abs(box_wavefunction(s, -x) - sign * box_wavefunction(s, x)) <= 1e-12);
        CHECK(std::abs(box_wavefunction_compact(s, x) - box_wavefunction(s, x)) <= 1e-12);
        if (i > 0 && i < 100) {
          // Central difference of the analytic function.
          const double h = 1e-6 * L;
          const double fd = (box_wavefunction(s, x + h) - box_wavefunction(s, x - h)) / (2 * h);
          CHECK(box_wavefunction_derivative(s, x) == doctest::Approx(fd).epsilon(1e-5).scale(box_wavenumber(s)));
        }
      }
    }
  }
}

TEST_CASE("box states are orthonormal under quadrature") {
  const double L = 1.3;
  const auto rule = gauss_legendre(default_quadrature_order(40));
  for (int r = 0; r <= 20; ++r)
    for (int s = 0; s <= 20; ++s) {
      const BoxState<double> a(r, L), b(s, L);
      const double ip = overlap([&](double x) { return box_wavefunction(a, x); },
                                [&](double x) { return box_wavefunction(b, x); }, -L, L, rule);
      CHECK(std::abs(ip - (r == s ? 1.0 : 0.0)) <= 1e-10);
    }
}
