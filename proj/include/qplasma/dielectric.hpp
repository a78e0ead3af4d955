#pragma once

// Longitudinal permittivity and conductivity of a degenerate collisional
// electron plasma: coordinate-space BGK model, Lindhard, Mermin, the static
// limits and the classical (hbar -> 0) limit.

#include <cmath>
#include <numbers>
#include <string>
#include <string_view>

#include "qplasma/complex_math.hpp"
#include "qplasma/kernels.hpp"

namespace qplasma {

/// x = w/(k vF), y = nu/(k vF), q = k/kF, xp = wp/(k vF).
struct DimensionlessPointA {
  double x = 0.0;
  double y = 0.0;
  double q = 1.0;
  double xp = 1.0;
};

/// x = w/(kF vF), y = nu/(kF vF), q = k/kF; xp2 is the coupling entering as 3 xp2/(2 q^2).
struct DimensionlessPointB {
  double x = 0.0;
  double y = 0.0;
  double q = 1.0;
  double xp2 = 1.0;
};

enum class Model { CollisionalBGK, Lindhard, Mermin, StaticMermin, StaticCollisional, ClassicalLimit };

constexpr std::string_view to_string(Model m) {
  switch (m) {
    case Model::CollisionalBGK: return "bgk";
    case Model::Lindhard: return "lindhard";
    case Model::Mermin: return "mermin";
    case Model::StaticMermin: return "static-mermin";
    case Model::StaticCollisional: return "static-bgk";
    case Model::ClassicalLimit: return "classical";
  }
  return "unknown";
}

/// Normalization of the conductivity value.
///
/// ClassicalConductivity: sigma / sigma0 with sigma0 = e^2 N/(m nu); needs nu > 0.
/// WavenumberScale: sigma / (e^2 N/(m k vF)), used for collisionless points.
enum class SigmaUnit { ClassicalConductivity, WavenumberScale };

struct Conductivity {
  Complex value;
  SigmaUnit unit = SigmaUnit::ClassicalConductivity;
};

struct DielectricResult {
  Complex epsilon;
  Conductivity sigma;
  Model model = Model::CollisionalBGK;
};

/// Argument of the static formulas: w = hbar k/(2 m vF) = q/2.
struct StaticArgs {
  double w = 1.0;
  double y = 0.0;
  double xp = 1.0;
};

namespace detail {

inline constexpr double kDenominatorFloor = 1e-30;

inline void validate(const DimensionlessPointA& p, const char* where) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.q) || !std::isfinite(p.xp))
    throw InvalidArgument(std::string(where) + ": non-finite input");
  if (p.y < 0.0) throw NonUpperHalfPlane(std::string(where) + ": y must be >= 0");
  if (p.xp < 0.0) throw InvalidArgument(std::string(where) + ": xp must be >= 0");
}

inline void validate_coupling(double xp, const char* where) {
  if (!std::isfinite(xp) || xp < 0.0) throw InvalidArgument(std::string(where) + ": xp must be finite and >= 0");
}

inline void validate_w(double w, const char* where) {
  if (!std::isfinite(w) || w <= 0.0) throw InvalidArgument(std::string(where) + ": w must be > 0");
  if (w == 1.0) throw PoleAtBranchPoint(std::string(where) + ": w = 1");
}

// sigma/sigma0 = (-3i/2) (w nu/(k vF)^2) R, where R is the coupling-free response
// such that eps = 1 + (3/2) xp^2 R. For nu = 0 the wavenumber scale drops the y factor.
inline Conductivity conductivity_from_response(Complex response, double x, double y) {
  const Complex prefactor = Complex{0.0, -1.5} * x;
  if (y > 0.0) return {require_finite(prefactor * y * response, "conductivity"), SigmaUnit::ClassicalConductivity};
  return {require_finite(prefactor * response, "conductivity"), SigmaUnit::WavenumberScale};
}

inline DielectricResult assemble(Model model, Complex response, double x, double y, double xp) {
  const Complex epsilon = require_finite(1.0 + 1.5 * xp * xp * response, "permittivity");
  return {epsilon, conductivity_from_response(response, x, y), model};
}

inline Complex collisional_response_a(Complex z, double q) {
  const Complex denominator = 1.0 - g0_a(z);
  if (std::abs(denominator) < kDenominatorFloor)
    throw DenominatorVanishes("1 - g0 vanishes at z = (" + std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")");
  return response_numerator_a(z, q) / denominator;
}

}  // namespace detail

/// Collisional (BGK, coordinate space) permittivity in convention A:
/// eps = 1 + (3/2) xp^2 (1 - g(z,+q) + g(z,-q)) / (1 - g0(z)).
inline DielectricResult epsilon_collisional_a(const DimensionlessPointA& p) {
  detail::validate(p, "epsilon_collisional_a");
  const Complex z{p.x, p.y};
  return detail::assemble(Model::CollisionalBGK, detail::collisional_response_a(z, p.q), p.x, p.y, p.xp);
}

/// Same model in convention B: eps = 1 + 3 xp2/(2 q^2) (1 - g+(z,q) + g-(z,q)) / (1 - g0(x,y,q)).
inline DielectricResult epsilon_collisional_b(const DimensionlessPointB& p) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.q) || !std::isfinite(p.xp2))
    throw InvalidArgument("epsilon_collisional_b: non-finite input");
  if (p.y < 0.0) throw NonUpperHalfPlane("epsilon_collisional_b: y must be >= 0");
  if (p.xp2 < 0.0) throw InvalidArgument("epsilon_collisional_b: xp2 must be >= 0");
  const Complex z{p.x, p.y};
  const Complex denominator = 1.0 - g0_b(z, p.q);
  if (std::abs(denominator) < detail::kDenominatorFloor) throw DenominatorVanishes("1 - g0 vanishes (convention B)");
  const Complex response = response_numerator_b(z, p.q) / denominator;
  const double q2 = p.q * p.q;
  const Complex epsilon = require_finite(1.0 + 1.5 * p.xp2 / q2 * response, "epsilon_collisional_b");
  // The coupling-free response is convention independent; x_A = x_B/|q|, y_A = y_B/|q|.
  const double aq = std::abs(p.q);
  return {epsilon, detail::conductivity_from_response(response, p.x / aq, p.y / aq), Model::CollisionalBGK};
}

/// Collisionless Lindhard permittivity, z = x + i0+.
inline DielectricResult epsilon_lindhard(double x, double q, double xp) {
  detail::validate(DimensionlessPointA{x, 0.0, q, xp}, "epsilon_lindhard");
  return detail::assemble(Model::Lindhard, response_numerator_a(Complex{x, 0.0}, q), x, 0.0, xp);
}

/// Static Mermin / Lindhard permittivity at w = q/2:
/// eps = 1 + (3/2) xp^2 [1 - (w^2-1)/(2w) ln|(w+1)/(w-1)|].
///
/// Real for every w. For w < 1 the -i pi parts of g(0+) and g(0-) cancel, so
/// the modulus form is the boundary value, not a principal-value choice.
inline DielectricResult epsilon_static_mermin(double w, double xp) {
  detail::validate_w(w, "epsilon_static_mermin");
  detail::validate_coupling(xp, "epsilon_static_mermin");
  const double response = 1.0 - (w * w - 1.0) / (2.0 * w) * log_abs_ratio(w);
  return {Complex{require_finite(1.0 + 1.5 * xp * xp * response, "epsilon_static_mermin"), 0.0},
          Conductivity{{0.0, 0.0}, SigmaUnit::WavenumberScale}, Model::StaticMermin};
}

/// Static (w = 0) limit of the collisional permittivity, written out term by term:
/// eps = 1 + (3 xp^2/2) [1 - (iy/2) L(iy)]^-1 [1 - ((iy+w)^2-1)/(4w) L(iy+w) + ((iy-w)^2-1)/(4w) L(iy-w)].
inline DielectricResult epsilon_static_collisional(double y, double w, double xp) {
  if (!std::isfinite(y) || y < 0.0) throw NonUpperHalfPlane("epsilon_static_collisional: y must be >= 0");
  if (!std::isfinite(w) || w <= 0.0) throw InvalidArgument("epsilon_static_collisional: w must be > 0");
  detail::validate_coupling(xp, "epsilon_static_collisional");
  const Complex iy{0.0, y};
  const Complex plus = iy + w;
  const Complex minus = iy - w;
  const Complex bracket =
      1.0 - (plus * plus - 1.0) / (4.0 * w) * clog_ratio(plus) + (minus * minus - 1.0) / (4.0 * w) * clog_ratio(minus);
  const Complex denominator = y == 0.0 ? Complex{1.0, 0.0} : 1.0 - 0.5 * iy * clog_ratio(iy);
  if (std::abs(denominator) < detail::kDenominatorFloor) throw DenominatorVanishes("epsilon_static_collisional");
  const Complex epsilon = require_finite(1.0 + 1.5 * xp * xp * bracket / denominator, "epsilon_static_collisional");
  return {epsilon, Conductivity{{0.0, 0.0}, y > 0.0 ? SigmaUnit::ClassicalConductivity : SigmaUnit::WavenumberScale},
          Model::StaticCollisional};
}

inline DielectricResult epsilon_static_collisional(const StaticArgs& a) {
  return epsilon_static_collisional(a.y, a.w, a.xp);
}

/// Mermin (momentum-space relaxation) permittivity in convention A:
/// eps = 1 + (3/2) xp^2 z N(z,q) / (x + i y N(z,q)/N0(q)), N0(q) = N(0 + i0, q).
///
/// x = 0 is the static limit, independent of y.
inline DielectricResult epsilon_mermin(const DimensionlessPointA& p) {
  detail::validate(p, "epsilon_mermin");
  detail::require_nonzero_q(p.q, "epsilon_mermin");
  if (p.x == 0.0) return epsilon_static_mermin(0.5 * std::abs(p.q), p.xp);

  const Complex z{p.x, p.y};
  const Complex dynamic = response_numerator_a(z, p.q);
  const Complex static_part = response_numerator_a(Complex{0.0, 0.0}, p.q);
  if (std::abs(static_part) < detail::kDenominatorFloor) throw StaticDenominatorVanishes("N0(q) = 0");
  const Complex denominator = p.x + kI * p.y * dynamic / static_part;
  if (std::abs(denominator) < detail::kDenominatorFloor) throw DenominatorVanishes("Mermin denominator vanishes");
  return detail::assemble(Model::Mermin, z * dynamic / denominator, p.x, p.y, p.xp);
}

/// hbar -> 0 limit of the collisional permittivity:
/// eps = 1 + (3 xp^2/2) (2 - z L(z)) / (1 - (i y/2) L(z)).
inline DielectricResult epsilon_classical_limit(Complex z, double xp) {
  detail::validate_coupling(xp, "epsilon_classical_limit");
  const Complex denominator = 1.0 - g0_a(z);
  if (std::abs(denominator) < detail::kDenominatorFloor) throw DenominatorVanishes("epsilon_classical_limit");
  return detail::assemble(Model::ClassicalLimit, classical_numerator(z) / denominator, z.real(), z.imag(), xp);
}

/// sigma_l / sigma0 = (-3i/2) x y (1 - g(z,+q) + g(z,-q)) / (1 - g0(z)).
/// At y = 0 the value is returned in the wavenumber scale e^2 N/(m k vF) instead.
inline Conductivity sigma_longitudinal(const DimensionlessPointA& p) {
  detail::validate(p, "sigma_longitudinal");
  if (p.x == 0.0) throw DivisionByZeroFrequency("sigma_longitudinal: x = 0");
  const Complex z{p.x, p.y};
  return detail::conductivity_from_response(detail::collisional_response_a(z, p.q), p.x, p.y);
}

/// eps = 1 + (4 pi i / w) sigma, recast dimensionlessly in convention A.
inline Complex epsilon_from_conductivity(const Conductivity& sigma, double x, double y, double xp) {
  if (x == 0.0) throw DivisionByZeroFrequency("epsilon_from_conductivity: x = 0");
  if (sigma.unit == SigmaUnit::ClassicalConductivity) {
    if (y <= 0.0) throw InvalidArgument("sigma0 normalization needs y > 0");
    return 1.0 + kI * (xp * xp / (x * y)) * sigma.value;
  }
  return 1.0 + kI * (xp * xp / x) * sigma.value;
}

}  // namespace qplasma
