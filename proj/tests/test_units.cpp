#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "qplasma/units.hpp"

namespace qplasma::units {
namespace {

constexpr double kCopperDensity = 8.47e28;

PhysicalParams copper(double omega, double nu, double k_over_kF) {
  PhysicalParams p = with_density(PhysicalParams{}, kCopperDensity);
  p.omega = omega;
  p.nu = nu;
  p.k = k_over_kF * p.kF;
  return p;
}

TEST(Fermi, CopperSanityValues) {
  // kF, vF, EF at 30 digits from the same CODATA constants.
  const auto f = fermi_quantities(kCopperDensity);
  EXPECT_NEAR(f.kF / 13586308449.7091, 1.0, 1e-12);
  EXPECT_NEAR(f.vF / 1572854.81187634, 1.0, 1e-12);
  EXPECT_NEAR(f.EF / kElementaryCharge / 7.03276129476282, 1.0, 1e-12);
}

TEST(Fermi, EightfoldDensityDoublesKF) {
  const double a = fermi_quantities(1e28).kF;
  const double b = fermi_quantities(8e28).kF;
  EXPECT_NEAR(b / a, 2.0, 1e-14);
}

TEST(Fermi, RejectsNonPositiveInput) {
  EXPECT_THROW(fermi_quantities(0.0), InvalidArgument);
  EXPECT_THROW(plasma_frequency(-1.0), InvalidArgument);
}

TEST(Fermi, PlasmaFrequencyOfCopper) {
  // sqrt(N e^2 / (eps0 m))
  EXPECT_NEAR(plasma_frequency(kCopperDensity) / 1.6418e16, 1.0, 1e-3);
}

TEST(ConventionA, DefinitionOfVariables) {
  const auto p = copper(2.0e15, 1.0e14, 0.8);
  const auto a = to_convention_a(p);
  const double kv = p.k * p.vF;
  EXPECT_DOUBLE_EQ(a.x, p.omega / kv);
  EXPECT_DOUBLE_EQ(a.y, p.nu / kv);
  EXPECT_DOUBLE_EQ(a.q, 0.8);
  EXPECT_DOUBLE_EQ(a.xp, p.omega_p / kv);
}

TEST(ConventionB, CrossConventionRelations) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> uw(0.0, 5e15), un(1e12, 1e15), uq(0.05, 5.0);
  for (int i = 0; i < 100; ++i) {
    const auto p = copper(uw(rng), un(rng), uq(rng));
    const auto a = to_convention_a(p);
    const auto b = to_convention_b(p);
    EXPECT_NEAR(a.x * a.q, b.x, 1e-14 * std::max(1.0, b.x));
    EXPECT_NEAR(a.y * a.q, b.y, 1e-14 * std::max(1.0, b.y));
    EXPECT_EQ(a.q, b.q);
    EXPECT_NEAR(a.xp * a.xp * a.q * a.q / b.xp2, 1.0, 1e-14);
  }
}

TEST(RoundTrip, BothConventions) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> uw(0.0, 5e15), un(1e12, 1e15), uq(0.05, 5.0);
  for (int i = 0; i < 100; ++i) {
    const auto p = copper(uw(rng), un(rng), uq(rng));
    const FermiAnchors anchors{p.kF, p.vF};
    for (const auto& back : {from_convention_a(to_convention_a(p), anchors), from_convention_b(to_convention_b(p), anchors)}) {
      EXPECT_NEAR(back.omega, p.omega, 1e-14 * p.omega + 1e-300);
      EXPECT_NEAR(back.nu, p.nu, 1e-14 * p.nu);
      EXPECT_NEAR(back.k, p.k, 1e-14 * p.k);
      EXPECT_NEAR(back.omega_p, p.omega_p, 1e-14 * p.omega_p);
    }
  }
}

TEST(Conductivity, InversionRecoversPermittivity) {
  const auto p = copper(3.0e15, 2.0e14, 1.1);
  const auto a = to_convention_a(p);
  const auto r = epsilon_collisional_a(a);
  const Complex back = epsilon_from_conductivity(r.sigma, a.x, a.y, a.xp);
  EXPECT_LT(std::abs(back - r.epsilon) / std::abs(r.epsilon), 1e-12);
  // Absolute sigma in S/m: sigma/sigma0 times e^2 N/(m nu).
  const Complex absolute = absolute_conductivity(r.sigma, p);
  EXPECT_NEAR(std::abs(absolute) / (std::abs(r.sigma.value) * classical_conductivity(kCopperDensity, p.nu)), 1.0, 1e-14);
}

TEST(Validation, ZeroWavenumber) {
  auto p = copper(1e15, 1e14, 1.0);
  p.k = 0.0;
  EXPECT_THROW(to_convention_a(p), ZeroWavenumber);
  EXPECT_THROW(to_convention_b(p), ZeroWavenumber);
  EXPECT_THROW(from_convention_a({0.1, 0.1, 0.0, 1.0}, {1e10, 1e6}), ZeroWavenumber);
}

TEST(Validation, InconsistentDensity) {
  auto p = copper(1e15, 1e14, 1.0);
  p.kF *= 1.01;
  EXPECT_THROW(to_convention_a(p), InconsistentParams);
  p = copper(1e15, 1e14, 1.0);
  p.omega_p *= 0.9;
  EXPECT_THROW(to_convention_b(p), InconsistentParams);
}

TEST(Validation, NegativeFrequency) {
  auto p = copper(-1e15, 1e14, 1.0);
  EXPECT_THROW(to_convention_a(p), InvalidArgument);
}

TEST(Validation, AbsoluteConductivityNeedsDensity) {
  PhysicalParams p;
  EXPECT_THROW(absolute_conductivity({1.0, SigmaUnit::ClassicalConductivity}, p), InvalidArgument);
}

}  // namespace
}  // namespace qplasma::units
