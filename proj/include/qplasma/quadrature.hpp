#pragma once

// Globally adaptive Gauss-Kronrod (G10/K21) quadrature for complex-valued
// integrands on a finite real interval.

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "qplasma/complex_math.hpp"

namespace qplasma {

struct QuadratureSpec {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_subdivisions = 2000;
};

struct QuadratureResult {
  Complex value;
  double error = 0.0;
  int subdivisions = 0;
};

namespace detail {

struct Panel {
  double a;
  double b;
  Complex value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

template <class F>
Panel gauss_kronrod_21(F& f, double a, double b) {
  using kronrod = boost::math::quadrature::gauss_kronrod<double, 21>;
  using gauss = boost::math::quadrature::gauss<double, 10>;
  const auto& nodes = kronrod::abscissa();
  const auto& kw = kronrod::weights();
  const auto& gw = gauss::weights();
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  // Kronrod nodes at odd indices are the Gauss-10 nodes.
  Complex k_sum = f(center) * kw[0];
  Complex g_sum{0.0, 0.0};
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    const Complex pair = f(center + half * nodes[i]) + f(center - half * nodes[i]);
    k_sum += pair * kw[i];
    if (i % 2 == 1) g_sum += pair * gw[i / 2];
  }
  const Complex value = half * k_sum;
  const double error = std::max(std::abs(half * (k_sum - g_sum)), 2.0 * std::numeric_limits<double>::epsilon() * std::abs(value));
  return {a, b, value, error};
}

}  // namespace detail

/// Integrates f over [a, b]. Interior breakpoints (e.g. the real part of a
/// nearby pole) seed the initial partition.
template <class F>
QuadratureResult integrate_adaptive(F f, double a, double b, const QuadratureSpec& spec,
                                    std::span<const double> breakpoints = {}) {
  if (!(spec.abs_tol > 0.0) || !(spec.rel_tol > 0.0) || spec.max_subdivisions < 64)
    throw InvalidArgument("QuadratureSpec: tolerances must be > 0 and max_subdivisions >= 64");
  if (!(b > a)) throw InvalidArgument("integrate_adaptive: need a < b");

  std::vector<double> cuts{a};
  for (double c : breakpoints)
    if (c > a && c < b) cuts.push_back(c);
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::priority_queue<detail::Panel> panels;
  Complex total{0.0, 0.0};
  double total_error = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    auto p = detail::gauss_kronrod_21(f, cuts[i], cuts[i + 1]);
    total += p.value;
    total_error += p.error;
    panels.push(p);
  }

  int subdivisions = 0;
  while (total_error > std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
    if (subdivisions >= spec.max_subdivisions)
      throw ToleranceNotReached("error estimate " + std::to_string(total_error) + " after " +
                                std::to_string(subdivisions) + " subdivisions");
    const auto worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    auto left = detail::gauss_kronrod_21(f, worst.a, mid);
    auto right = detail::gauss_kronrod_21(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
    ++subdivisions;
  }

  // Re-sum to shed the drift of incremental updates.
  Complex resummed{0.0, 0.0};
  double resummed_error = 0.0;
  while (!panels.empty()) {
    resummed += panels.top().value;
    resummed_error += panels.top().error;
    panels.pop();
  }
  return {require_finite(resummed, "integrate_adaptive"), resummed_error, subdivisions};
}

}  // namespace qplasma
