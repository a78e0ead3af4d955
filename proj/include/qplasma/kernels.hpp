#pragma once

// g0 / g kernel functions in both dimensionless conventions.
//
// Convention A: z = (w + i nu)/(k vF), q = k/kF. Convention B: z = (w + i nu)/(kF vF).
// The two are related by z_B = q z_A and every kernel maps onto its partner.

#include <cmath>
#include <string>

#include "qplasma/complex_math.hpp"

namespace qplasma {

enum class Sign { plus, minus };

constexpr double sign_value(Sign s) { return s == Sign::plus ? 1.0 : -1.0; }

constexpr Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

struct KernelArgs {
  Complex z;
  double q = 1.0;
  Sign sign = Sign::plus;
};

namespace detail {

inline void require_nonzero_q(double q, const char* where) {
  if (!std::isfinite(q)) throw InvalidArgument(std::string(where) + ": q is not finite");
  if (q == 0.0) throw DegenerateQ(std::string(where) + ": q = 0 (use the classical-limit evaluation)");
}

}  // namespace detail

/// g0(x, y) = (i y / 2) ln((z+1)/(z-1)). Exactly zero on the real axis away from +-1.
inline Complex g0_a(Complex z) {
  const Complex log_term = clog_ratio(z);
  if (z.imag() == 0.0) return {0.0, 0.0};
  return require_finite(0.5 * kI * z.imag() * log_term, "g0_a");
}

/// g(z, +-q) = ((z +- q/2)^2 - 1)/(2q) ln((z +- q/2 + 1)/(z +- q/2 - 1)).
///
/// q enters the denominator with its own sign, so g_a(z, -q, plus) = -g_a(z, q, minus).
inline Complex g_a(const KernelArgs& args) {
  detail::require_nonzero_q(args.q, "g_a");
  const Complex shifted = args.z + sign_value(args.sign) * 0.5 * args.q;
  const Complex value = (shifted * shifted - 1.0) / (2.0 * args.q) * clog_ratio(shifted);
  return require_finite(value, "g_a");
}

inline Complex g_a(Complex z, double q, Sign sign) { return g_a(KernelArgs{z, q, sign}); }

/// g0(x, y, q) = (i y / (2q)) ln((z+q)/(z-q)), convention B.
inline Complex g0_b(Complex z, double q) {
  detail::require_nonzero_q(q, "g0_b");
  const Complex log_term = clog_ratio(z, q);
  if (z.imag() == 0.0) return {0.0, 0.0};
  return require_finite(kI * z.imag() / (2.0 * q) * log_term, "g0_b");
}

/// g+-(z, q) = ((z +- q^2/2)^2 - q^2)/(2 q^3) ln((z +- q^2/2 + q)/(z +- q^2/2 - q)), convention B.
inline Complex g_b(Complex z, double q, Sign sign) {
  detail::require_nonzero_q(q, "g_b");
  const Complex shifted = z + sign_value(sign) * 0.5 * q * q;
  const Complex value = (shifted * shifted - q * q) / (2.0 * q * q * q) * clog_ratio(shifted, q);
  return require_finite(value, "g_b");
}

/// 1 - g(z,+q) + g(z,-q): the shared numerator of the convention-A permittivities.
/// F(w) = (w^2 - 1) L(w) - 2w. For |w| > 2 the direct form loses digits
/// to cancellation, so the tail -4 sum_k w^-(2k+1) / ((2k+1)(2k+3)) is summed instead.
inline Complex kernel_remainder(Complex w) {
  const Complex log_term = clog_ratio(w);
  if (std::abs(w) <= 2.0) return (w * w - 1.0) * log_term - 2.0 * w;
  const Complex inv = 1.0 / w;
  const Complex inv2 = inv * inv;
  Complex power = inv;
  Complex sum{0.0, 0.0};
  for (int k = 0; k < 60; ++k) {
    const Complex term = power / static_cast<double>((2 * k + 1) * (2 * k + 3));
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
    power *= inv2;
  }
  return -4.0 * sum;
}

// 1 - g(z,+q) + g(z,-q) = -(F(z + q/2) - F(z - q/2)) / (2q): the O(z/q) parts of the
// two kernels cancel analytically, which keeps small q and large |z| accurate.
inline Complex response_numerator_a(Complex z, double q) {
  detail::require_nonzero_q(q, "response_numerator_a");
  const Complex value = -(kernel_remainder(z + 0.5 * q) - kernel_remainder(z - 0.5 * q)) / (2.0 * q);
  return require_finite(value, "response_numerator_a");
}

// Same reduction in convention B, with u = (z +- q^2/2)/|q| so that both
// arguments stay in the upper half plane for either sign of q.
inline Complex response_numerator_b(Complex z, double q) {
  detail::require_nonzero_q(q, "response_numerator_b");
  const double aq = std::abs(q);
  const Complex value =
      -(kernel_remainder((z + 0.5 * q * q) / aq) - kernel_remainder((z - 0.5 * q * q) / aq)) / (2.0 * aq);
  return require_finite(value, "response_numerator_b");
}

/// q -> 0 limit of response_numerator_a: 2 - z ln((z+1)/(z-1)).
inline Complex classical_numerator(Complex z) {
  const Complex log_term = clog_ratio(z);
  if (std::abs(z) <= 2.0) return require_finite(2.0 - z * log_term, "classical_numerator");
  // 2 - z L(z) = -2 sum_{k>=1} z^-2k / (2k+1)
  const Complex inv2 = 1.0 / (z * z);
  Complex power = inv2;
  Complex sum{0.0, 0.0};
  for (int k = 1; k < 60; ++k) {
    const Complex term = power / static_cast<double>(2 * k + 1);
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
    power *= inv2;
  }
  return require_finite(-2.0 * sum, "classical_numerator");
}

}  // namespace qplasma
