#pragma once

// SI physical parameters and their maps onto the two dimensionless conventions.
//
// The plasma frequency is wp = sqrt(4 pi e^2 N / m) in Gaussian units, which is
// sqrt(N e^2 / (eps0 m)) in SI. (Written without the square root, 4 pi e^2 N/m
// is wp^2, not wp.)

#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "qplasma/dielectric.hpp"

namespace qplasma::units {

// CODATA 2018, SI.
inline constexpr double kHbar = 1.054571817e-34;            // J s
inline constexpr double kElectronMass = 9.1093837015e-31;   // kg
inline constexpr double kElementaryCharge = 1.602176634e-19;  // C
inline constexpr double kVacuumPermittivity = 8.8541878128e-12;  // F/m

inline constexpr double kConsistencyTolerance = 1e-6;

struct PhysicalParams {
  double omega = 0.0;    // rad/s
  double nu = 0.0;       // 1/s
  double k = 0.0;        // 1/m
  double vF = 0.0;       // m/s
  double kF = 0.0;       // 1/m
  double omega_p = 0.0;  // rad/s
  std::optional<double> N;  // 1/m^3
  double mass = kElectronMass;
};

struct FermiQuantities {
  double kF = 0.0;
  double vF = 0.0;
  double EF = 0.0;
};

/// kF = (3 pi^2 N)^(1/3), vF = hbar kF / m, EF = m vF^2 / 2.
inline FermiQuantities fermi_quantities(double N, double mass = kElectronMass, double hbar = kHbar) {
  if (!(N > 0.0) || !(mass > 0.0) || !(hbar > 0.0)) throw InvalidArgument("fermi_quantities: N, m, hbar must be > 0");
  const double kF = std::cbrt(3.0 * std::numbers::pi * std::numbers::pi * N);
  const double vF = hbar * kF / mass;
  return {kF, vF, 0.5 * mass * vF * vF};
}

inline double plasma_frequency(double N, double mass = kElectronMass) {
  if (!(N > 0.0) || !(mass > 0.0)) throw InvalidArgument("plasma_frequency: N, m must be > 0");
  return std::sqrt(N * kElementaryCharge * kElementaryCharge / (kVacuumPermittivity * mass));
}

/// sigma0 = e^2 N / (m nu) in S/m.
inline double classical_conductivity(double N, double nu, double mass = kElectronMass) {
  if (!(N > 0.0) || !(nu > 0.0)) throw InvalidArgument("classical_conductivity: N, nu must be > 0");
  return kElementaryCharge * kElementaryCharge * N / (mass * nu);
}

/// Absolute conductivity (S/m) from the dimensionless value returned by the dielectric module.
inline Complex absolute_conductivity(const Conductivity& sigma, const PhysicalParams& p) {
  if (!p.N) throw InvalidArgument("absolute_conductivity: density N is required");
  const double e2n_over_m = kElementaryCharge * kElementaryCharge * *p.N / p.mass;
  const double scale = sigma.unit == SigmaUnit::ClassicalConductivity ? e2n_over_m / p.nu : e2n_over_m / (p.k * p.vF);
  return sigma.value * scale;
}

/// Checks positivity and, when N is given, agreement of kF and omega_p with N.
inline void validate(const PhysicalParams& p) {
  if (!(p.k > 0.0)) throw ZeroWavenumber("k must be > 0");
  if (!(p.vF > 0.0) || !(p.kF > 0.0)) throw InvalidArgument("vF and kF must be > 0");
  if (!(p.omega >= 0.0) || !(p.nu >= 0.0) || !(p.omega_p >= 0.0))
    throw InvalidArgument("omega, nu, omega_p must be >= 0");
  if (!p.N) return;
  const auto fermi = fermi_quantities(*p.N, p.mass);
  const auto mismatch = [](double a, double b) { return std::abs(a - b) > kConsistencyTolerance * std::abs(b); };
  if (mismatch(p.kF, fermi.kF))
    throw InconsistentParams("kF = " + std::to_string(p.kF) + " disagrees with N (expected " + std::to_string(fermi.kF) + ")");
  if (p.omega_p > 0.0 && mismatch(p.omega_p, plasma_frequency(*p.N, p.mass)))
    throw InconsistentParams("omega_p disagrees with N");
}

/// Completes kF, vF and omega_p from N where they are unset (zero).
inline PhysicalParams with_density(PhysicalParams p, double N) {
  const auto fermi = fermi_quantities(N, p.mass);
  p.N = N;
  if (p.kF == 0.0) p.kF = fermi.kF;
  if (p.vF == 0.0) p.vF = fermi.vF;
  if (p.omega_p == 0.0) p.omega_p = plasma_frequency(N, p.mass);
  return p;
}

inline DimensionlessPointA to_convention_a(const PhysicalParams& p) {
  validate(p);
  const double kv = p.k * p.vF;
  return {p.omega / kv, p.nu / kv, p.k / p.kF, p.omega_p / kv};
}

/// xp2 = (omega_p / (kF vF))^2.
inline DimensionlessPointB to_convention_b(const PhysicalParams& p) {
  validate(p);
  const double kv = p.kF * p.vF;
  const double xp = p.omega_p / kv;
  return {p.omega / kv, p.nu / kv, p.k / p.kF, xp * xp};
}

/// Fermi-surface anchors needed to undo a dimensionless map.
struct FermiAnchors {
  double kF = 0.0;
  double vF = 0.0;
};

inline PhysicalParams from_convention_a(const DimensionlessPointA& a, const FermiAnchors& anchors) {
  if (!(anchors.kF > 0.0) || !(anchors.vF > 0.0)) throw InvalidArgument("from_convention_a: anchors must be > 0");
  if (a.q == 0.0) throw ZeroWavenumber("from_convention_a: q = 0");
  PhysicalParams p;
  p.kF = anchors.kF;
  p.vF = anchors.vF;
  p.k = a.q * anchors.kF;
  const double kv = p.k * p.vF;
  p.omega = a.x * kv;
  p.nu = a.y * kv;
  p.omega_p = a.xp * kv;
  return p;
}

inline PhysicalParams from_convention_b(const DimensionlessPointB& b, const FermiAnchors& anchors) {
  if (!(anchors.kF > 0.0) || !(anchors.vF > 0.0)) throw InvalidArgument("from_convention_b: anchors must be > 0");
  PhysicalParams p;
  p.kF = anchors.kF;
  p.vF = anchors.vF;
  p.k = b.q * anchors.kF;
  const double kv = p.kF * p.vF;
  p.omega = b.x * kv;
  p.nu = b.y * kv;
  p.omega_p = std::sqrt(b.xp2) * kv;
  return p;
}

}  // namespace qplasma::units
