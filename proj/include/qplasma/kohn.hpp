#pragma once

// Kohn singularities: the roots of q^2 + 2 s1 q + 2 s2 z = 0 (convention B,
// z -> x at nu = 0) and a finite-difference measure of how collisions smooth
// the kink of eps(q) near q = 2.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qplasma/dielectric.hpp"

namespace qplasma {

/// Sign pair (s1, s2) of the branch q^2 + 2 s1 q + 2 s2 z = 0.
struct KohnBranch {
  Sign linear = Sign::plus;
  Sign frequency = Sign::plus;
};

struct KohnRoot {
  Complex q;
  KohnBranch branch;
  double residual = 0.0;
  bool degenerate = false;  // q = 0 or coincides with another entry
  bool physical = false;    // real and > 0
  bool primary = false;
};

/// q1 = 1 + sqrt(1 + 2x), q2 = 1 + sqrt(1 - 2x), q3 = -1 - sqrt(1 + 2x),
/// q4 = -1 - sqrt(1 - 2x), plus the companion root of each branch quadratic.
struct KohnRootSet {
  double x = 0.0;
  std::array<KohnRoot, 4> roots;
  std::array<KohnRoot, 4> companions;
};

inline Complex kohn_residual(Complex q, KohnBranch b, Complex z) {
  return q * q + 2.0 * sign_value(b.linear) * q + 2.0 * sign_value(b.frequency) * z;
}

namespace detail {

inline constexpr double kCoincidence = 1e-14;

inline void flag_degenerate(std::span<KohnRoot> entries) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    auto& r = entries[i];
    r.physical = r.q.imag() == 0.0 && r.q.real() > 0.0;
    if (std::abs(r.q) <= kCoincidence) r.degenerate = true;
    for (std::size_t j = 0; j < entries.size(); ++j)
      if (j != i && std::abs(entries[j].q - r.q) <= kCoincidence * std::max(1.0, std::abs(r.q))) r.degenerate = true;
  }
}

}  // namespace detail

/// Closed-form Kohn roots at nu = 0. Complex roots (1 +- 2x < 0) are data, not errors.
inline KohnRootSet kohn_roots_dimless(double x) {
  if (!std::isfinite(x)) throw InvalidArgument("kohn_roots_dimless: x is not finite");
  KohnRootSet set;
  set.x = x;
  const Complex z{x, 0.0};
  // Branch (s1, s2) has roots -s1 +- sqrt(1 - 2 s2 x); the primary root is the one with |q| near 2.
  const std::array<KohnBranch, 4> branches{{
      {Sign::minus, Sign::minus},  // q^2 - 2q - 2x
      {Sign::minus, Sign::plus},   // q^2 - 2q + 2x
      {Sign::plus, Sign::minus},   // q^2 + 2q - 2x
      {Sign::plus, Sign::plus},    // q^2 + 2q + 2x
  }};
  for (std::size_t i = 0; i < branches.size(); ++i) {
    const auto b = branches[i];
    const double s1 = sign_value(b.linear);
    const Complex root = std::sqrt(Complex{1.0 - 2.0 * sign_value(b.frequency) * x, 0.0});
    const Complex selected = -s1 + (-s1) * root;
    const Complex companion = -s1 - (-s1) * root;
    set.roots[i] = KohnRoot{selected, b, std::abs(kohn_residual(selected, b, z)), false, false, true};
    set.companions[i] = KohnRoot{companion, b, std::abs(kohn_residual(companion, b, z)), false, false, false};
  }
  detail::flag_degenerate(set.roots);
  detail::flag_degenerate(set.companions);
  return set;
}

/// k1,2 = kF + sqrt(kF^2 +- 2 kF w/vF), k3,4 = -kF - sqrt(kF^2 +- 2 kF w/vF).
inline std::array<Complex, 4> kohn_wavenumbers_physical(double omega, double kF, double vF) {
  if (!(kF > 0.0) || !(vF > 0.0) || !std::isfinite(omega))
    throw InvalidArgument("kohn_wavenumbers_physical: need kF, vF > 0 and finite omega");
  const Complex upper = std::sqrt(Complex{kF * kF + 2.0 * kF * omega / vF, 0.0});
  const Complex lower = std::sqrt(Complex{kF * kF - 2.0 * kF * omega / vF, 0.0});
  return {kF + upper, kF + lower, -kF - upper, -kF - lower};
}

/// Same wavenumbers from the Fermi-energy form k1,2 = (m vF/hbar)(1 + sqrt(1 +- hbar w/EF)).
inline std::array<Complex, 4> kohn_wavenumbers_energy_form(double omega, double vF, double mass, double hbar) {
  const double pF_over_hbar = mass * vF / hbar;
  const double fermi_energy = 0.5 * mass * vF * vF;
  const Complex upper = std::sqrt(Complex{1.0 + hbar * omega / fermi_energy, 0.0});
  const Complex lower = std::sqrt(Complex{1.0 - hbar * omega / fermi_energy, 0.0});
  return {pF_over_hbar * (1.0 + upper), pF_over_hbar * (1.0 + lower), -pF_over_hbar * (1.0 + upper),
          -pF_over_hbar * (1.0 + lower)};
}

/// Wavenumbers where a convention-A kernel log hits its branch point at y = 0:
/// x +- q/2 = +-1, i.e. |q| in {2|1 - x|, 2|1 + x|}, with signs.
inline std::array<double, 4> kernel_branch_wavenumbers(double x) {
  return {2.0 * (1.0 - x), -2.0 * (1.0 + x), 2.0 * (x - 1.0), 2.0 * (x + 1.0)};
}

inline bool near_kernel_branch_point(double x, double q, double tolerance) {
  if (std::abs(q) <= tolerance) return true;
  for (double qs : kernel_branch_wavenumbers(x))
    if (std::abs(q - qs) <= tolerance) return true;
  return false;
}

struct QWindow {
  double min = 1.8;
  double max = 2.2;
  std::size_t points = 2001;
};

struct BroadeningRow {
  double y = 0.0;
  double max_abs_derivative = 0.0;
  double q_at_max = 0.0;
  std::vector<double> skipped_q;
};

enum class PolePolicy { Skip, Raise };

inline constexpr double kSingularNodeTolerance = 1e-9;

/// max |d eps/dq| by central differences on a uniform grid, per collision frequency.
/// Grid nodes within 1e-9 of a y = 0 branch point are skipped (and reported) or rejected.
inline std::vector<BroadeningRow> singularity_broadening_scan(double x, double xp, std::span<const double> ys,
                                                              const QWindow& window,
                                                              PolePolicy policy = PolePolicy::Skip) {
  if (window.points < 2001) throw InvalidArgument("singularity_broadening_scan: need at least 2001 grid points");
  if (!(window.max > window.min)) throw InvalidArgument("singularity_broadening_scan: empty window");
  const std::size_t n = window.points;
  const double h = (window.max - window.min) / static_cast<double>(n - 1);

  std::vector<BroadeningRow> rows;
  rows.reserve(ys.size());
  for (double y : ys) {
    BroadeningRow row;
    row.y = y;
    std::vector<Complex> eps(n);
    std::vector<bool> valid(n, true);
    for (std::size_t i = 0; i < n; ++i) {
      const double q = window.min + h * static_cast<double>(i);
      if (y == 0.0 && near_kernel_branch_point(x, q, kSingularNodeTolerance)) {
        if (policy == PolePolicy::Raise)
          throw WindowContainsPole("branch point on grid node q = " + std::to_string(q));
        valid[i] = false;
        row.skipped_q.push_back(q);
        continue;
      }
      try {
        eps[i] = epsilon_collisional_a(DimensionlessPointA{x, y, q, xp}).epsilon;
      } catch (const PoleAtBranchPoint&) {
        if (policy == PolePolicy::Raise) throw;
        valid[i] = false;
        row.skipped_q.push_back(q);
      }
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
      if (!valid[i - 1] || !valid[i + 1] || !valid[i]) continue;
      const double d = std::abs(eps[i + 1] - eps[i - 1]) / (2.0 * h);
      if (d > row.max_abs_derivative) {
        row.max_abs_derivative = d;
        row.q_at_max = window.min + h * static_cast<double>(i);
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

/// True when max |d eps/dq| strictly decreases with increasing y.
inline bool broadening_strictly_decreasing(std::span<const BroadeningRow> rows) {
  std::vector<BroadeningRow> sorted(rows.begin(), rows.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.y < b.y; });
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (!(sorted[i].max_abs_derivative < sorted[i - 1].max_abs_derivative)) return false;
  return true;
}

}  // namespace qplasma
