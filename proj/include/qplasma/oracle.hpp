#pragma once

// Quadrature oracle: the Fermi-sphere integrals behind the permittivity,
// evaluated numerically before any closed-form reduction.
//
// After slicing the shifted Fermi sphere into disks (area pi (vF^2 - vx^2)),
// the dimensionless integrals in convention A are
//
//   J+-(x, y, q) = pi  \int_{-1}^{1} (1 - u^2) du / (y + i (u +- q/2 - x)),
//   g0(x, y)     = y/2 \int_{-1}^{1} du / (y + i (u - x)),
//
// and J+ - J- = -2 i pi q (1 - g(z,+q) + g(z,-q)).

#include <array>
#include <cmath>
#include <numbers>
#include <span>

#include "qplasma/dielectric.hpp"
#include "qplasma/kernels.hpp"
#include "qplasma/quadrature.hpp"

namespace qplasma {

namespace detail {

inline void require_contour_clear(double y, double pole, const char* where) {
  if (!std::isfinite(y) || y < 0.0) throw InvalidArgument(std::string(where) + ": y must be >= 0");
  if (y == 0.0 && pole >= -1.0 && pole <= 1.0)
    throw PoleOnContour(std::string(where) + ": real pole at u = " + std::to_string(pole));
}

}  // namespace detail

/// Numerical J+- over the Fermi sphere shifted by +-q/2.
inline QuadratureResult j_pm_quadrature(double x, double y, double q, Sign sign, const QuadratureSpec& spec = {}) {
  const double shift = sign_value(sign) * 0.5 * q;
  const double pole = x - shift;
  detail::require_contour_clear(y, pole, "j_pm_quadrature");
  auto integrand = [=](double u) { return std::numbers::pi * (1.0 - u * u) / Complex{y, u + shift - x}; };
  const std::array<double, 1> breaks{pole};
  return integrate_adaptive(integrand, -1.0, 1.0, spec, breaks);
}

/// Closed form of J+-: -i pi [(w^2 - 1) L(w) - 2w] with w = z -+ q/2.
/// J+ pairs with the down-shifted frequency z - q/2.
inline Complex j_closed_form(double x, double y, double q, Sign sign) {
  if (!std::isfinite(y) || y < 0.0) throw NonUpperHalfPlane("j_closed_form: y must be >= 0");
  const Complex w = Complex{x, y} - sign_value(sign) * 0.5 * q;
  return require_finite(-kI * std::numbers::pi * kernel_remainder(w), "j_closed_form");
}

/// J+ - J- through the g kernels: -2 i pi q (1 - g(z,+q) + g(z,-q)).
inline Complex j_difference_from_kernels(double x, double y, double q) {
  return -2.0 * kI * std::numbers::pi * q * response_numerator_a(Complex{x, y}, q);
}

/// Numerical g0(x, y); equals g0_a(x + iy).
inline QuadratureResult g0_quadrature(double x, double y, const QuadratureSpec& spec = {}) {
  if (!std::isfinite(y) || y <= 0.0) throw InvalidArgument("g0_quadrature: y must be > 0");
  auto integrand = [=](double u) { return 0.5 * y / Complex{y, u - x}; };
  const std::array<double, 1> breaks{x};
  return integrate_adaptive(integrand, -1.0, 1.0, spec, breaks);
}

/// Permittivity assembled from the oracle integrals:
/// eps = 1 + (3/2) xp^2 [(J+ - J-)/(-2 i pi q)] / (1 - g0).
inline Complex epsilon_from_quadrature(const DimensionlessPointA& p, const QuadratureSpec& spec = {}) {
  detail::validate(p, "epsilon_from_quadrature");
  detail::require_nonzero_q(p.q, "epsilon_from_quadrature");
  const Complex j_plus = j_pm_quadrature(p.x, p.y, p.q, Sign::plus, spec).value;
  const Complex j_minus = j_pm_quadrature(p.x, p.y, p.q, Sign::minus, spec).value;
  const Complex g0 = g0_quadrature(p.x, p.y, spec).value;
  const Complex numerator = (j_plus - j_minus) / (-2.0 * kI * std::numbers::pi * p.q);
  return 1.0 + 1.5 * p.xp * p.xp * numerator / (1.0 - g0);
}

}  // namespace qplasma
