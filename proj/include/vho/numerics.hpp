#ifndef VHO_NUMERICS_HPP
#define VHO_NUMERICS_HPP

// Independent numerical oracles: Gauss-Legendre quadrature for expectation
// values and overlaps, and golden-section scalar minimization.

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "vho/box_model.hpp"
#include "vho/params.hpp"

namespace vho {

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Gauss-Legendre nodes and weights on (-1, 1). Nodes are strictly
/// increasing and symmetric about 0.
template <typename Scalar = double>
struct QuadratureRule {
  VectorX<Scalar> nodes;
  VectorX<Scalar> weights;

  int order() const { return static_cast<int>(nodes.size()); }
};

inline constexpr int kMaxQuadratureOrder = 10000;
inline constexpr int kDefaultQuadratureOrder = 64;

/// Order resolving the r-th box state: 64 up to r = 7, then 8 points per
/// half-period.
inline int default_quadrature_order(int r) { return std::max(kDefaultQuadratureOrder, 8 * (r + 1)); }

namespace detail {

// P_n(x) and P_n'(x) by the three-term recurrence.
template <typename Scalar>
void legendre_with_derivative(int n, Scalar x, Scalar& p, Scalar& dp) {
  Scalar p0 = 1;
  Scalar p1 = x;
  for (int k = 2; k <= n; ++k) {
    const Scalar p2 = (Scalar(2 * k - 1) * x * p1 - Scalar(k - 1) * p0) / Scalar(k);
    p0 = p1;
    p1 = p2;
  }
  p = n == 0 ? Scalar(1) : p1;
  dp = n == 0 ? Scalar(0) : Scalar(n) * (x * p1 - p0) / (x * x - Scalar(1));
}

}  // namespace detail

/// Legendre rule of the given order. Roots come from Newton iteration on
/// P_n seeded with cos(pi (i + 3/4) / (n + 1/2)).
template <typename Scalar = double>
QuadratureRule<Scalar> gauss_legendre(int order) {
  if (order < 1 || order > kMaxQuadratureOrder)
    throw std::domain_error("gauss_legendre: order must lie in [1, 10000]");

  constexpr int kMaxNewton = 100;
  const Scalar tol = std::min<Scalar>(Scalar(1e-15), Scalar(8) * std::numeric_limits<Scalar>::epsilon());
  const Scalar pi = std::numbers::pi_v<Scalar>;

  QuadratureRule<Scalar> rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);

  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    Scalar x = std::cos(pi * (Scalar(i) + Scalar(0.75)) / (Scalar(order) + Scalar(0.5)));
    Scalar p = 0;
    Scalar dp = 0;
    for (int it = 0; it < kMaxNewton; ++it) {
      detail::legendre_with_derivative(order, x, p, dp);
      const Scalar step = p / dp;
      x -= step;
      if (std::abs(step) <= tol) break;
    }
    detail::legendre_with_derivative(order, x, p, dp);
    const Scalar w = Scalar(2) / ((Scalar(1) - x * x) * dp * dp);
    // x is the i-th largest root; mirror it into the lower half.
    rule.nodes(order - 1 - i) = x;
    rule.nodes(i) = -x;
    rule.weights(order - 1 - i) = w;
    rule.weights(i) = w;
  }
  if (order % 2 == 1) rule.nodes(order / 2) = Scalar(0);
  return rule;
}

/// Integral of f over [a, b] with the rule mapped affinely onto the interval.
template <typename Scalar, typename F>
Scalar integrate(F&& f, Scalar a, Scalar b, const QuadratureRule<Scalar>& rule) {
  if (!(a < b)) throw std::domain_error("integrate: require a < b");
  const Scalar half = (b - a) / Scalar(2);
  const Scalar mid = (a + b) / Scalar(2);
  const VectorX<Scalar> values = rule.nodes.unaryExpr([&](Scalar t) { return Scalar(f(mid + half * t)); });
  return half * rule.weights.dot(values);
}

template <typename Scalar, typename F, typename G>
Scalar overlap(F&& f, G&& g, Scalar a, Scalar b, const QuadratureRule<Scalar>& rule) {
  return integrate([&](Scalar x) { return Scalar(f(x) * g(x)); }, a, b, rule);
}

template <typename Scalar, typename F, typename G>
Scalar overlap(F&& f, G&& g, Scalar a, Scalar b, int order) {
  if (!(a < b)) throw std::domain_error("overlap: require a < b");
  return overlap(std::forward<F>(f), std::forward<G>(g), a, b, gauss_legendre<Scalar>(order));
}

/// Kinetic energy (hbar^2/2m) int (phi')^2 dx and second moment int x^2 phi^2 dx
/// of a box state, both by quadrature over [-L, L].
template <typename Scalar = double>
struct BoxExpectation {
  Scalar kinetic;
  Scalar mean_square_position;
};

template <typename Scalar>
BoxExpectation<Scalar> box_expectation_terms(const BoxState<Scalar>& state, const PhysicalParams<Scalar>& params,
                                             const QuadratureRule<Scalar>& rule) {
  const Scalar L = state.half_width;
  const Scalar dirichlet = integrate(
      [&](Scalar x) {
        const Scalar d = box_wavefunction_derivative(state, x);
        return d * d;
      },
      -L, L, rule);
  const Scalar second_moment = integrate(
      [&](Scalar x) {
        const Scalar phi = box_wavefunction(state, x);
        return x * x * phi * phi;
      },
      -L, L, rule);
  return {params.hbar() * params.hbar() / (Scalar(2) * params.mass()) * dirichlet, second_moment};
}

/// <phi_r| p^2/2m + m omega^2 x^2 / 2 |phi_r> over the box, with the kinetic
/// term in first-derivative form.
template <typename Scalar>
Scalar expectation_energy(const BoxState<Scalar>& state, const PhysicalParams<Scalar>& params, int order) {
  const auto terms = box_expectation_terms(state, params, gauss_legendre<Scalar>(order));
  const Scalar spring = params.mass() * params.omega() * params.omega() / Scalar(2);
  return terms.kinetic + spring * terms.mean_square_position;
}

template <typename Scalar>
Scalar expectation_energy(const BoxState<Scalar>& state, const PhysicalParams<Scalar>& params) {
  return expectation_energy(state, params, default_quadrature_order(state.r));
}

template <typename Scalar = double>
struct MinimizationResult {
  Scalar x_min;
  Scalar f_min;
  int iterations = 0;
  bool converged = false;
};

inline constexpr double kDefaultGoldenRelTol = 1e-10;
inline constexpr int kDefaultGoldenMaxIter = 200;

/// Golden-section search for the minimum of a unimodal f on [lo, hi].
/// Converged means the bracket shrank to rel_tol * |x_min| before max_iter
/// steps; otherwise the best point found so far is returned.
template <typename Scalar, typename F>
MinimizationResult<Scalar> minimize_golden(F&& f, Scalar lo, Scalar hi, Scalar rel_tol = Scalar(kDefaultGoldenRelTol),
                                           int max_iter = kDefaultGoldenMaxIter) {
  if (!(lo < hi)) throw std::domain_error("minimize_golden: require lo < hi");
  if (!(rel_tol > 0)) throw std::domain_error("minimize_golden: rel_tol must be positive");

  const Scalar inv_phi = (std::sqrt(Scalar(5)) - Scalar(1)) / Scalar(2);
  Scalar a = lo;
  Scalar b = hi;
  Scalar c = b - inv_phi * (b - a);
  Scalar d = a + inv_phi * (b - a);
  Scalar fc = f(c);
  Scalar fd = f(d);

  MinimizationResult<Scalar> result;
  auto within_tol = [&] {
    const Scalar x = fc < fd ? c : d;
    return std::abs(b - a) <= rel_tol * std::abs(x);
  };

  while (result.iterations < max_iter && !within_tol()) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    ++result.iterations;
  }

  result.converged = within_tol();
  if (fc < fd) {
    result.x_min = c;
    result.f_min = fc;
  } else {
    result.x_min = d;
    result.f_min = fd;
  }
  return result;
}

}  // namespace vho

#endif  // VHO_NUMERICS_HPP
