#pragma once

// Branch-safe complex elementary functions.
//
// Every logarithm in the library is the boundary value from the upper half
// plane (Im a -> 0+), i.e. the retarded response for fields ~ exp(-i w t).

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "qplasma/errors.hpp"

namespace qplasma {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

inline bool is_finite(Complex v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

inline Complex require_finite(Complex v, const char* where) {
  if (!is_finite(v)) throw NonFinite(std::string(where) + " produced a non-finite value");
  return v;
}

inline double require_finite(double v, const char* where) {
  if (!std::isfinite(v)) throw NonFinite(std::string(where) + " produced a non-finite value");
  return v;
}

/// ln((a+1)/(a-1)) on the branch continuous from the upper half plane.
///
/// For |a| > 1 this is 2 atanh(1/a); for |a| <= 1 it is 2 atanh(a) - i pi.
/// Both forms are analytic on Im a > 0 and avoid the cancellation of forming
/// the ratio first. On the real axis the value is the limit Im a -> 0+, so
/// for -1 < a < 1 the imaginary part is exactly -pi.
inline Complex clog_ratio(Complex a) {
  if (!is_finite(a)) throw NonFinite("clog_ratio argument is not finite");
  if (a.imag() < 0.0) throw NonUpperHalfPlane("clog_ratio requires Im(a) >= 0, got " + std::to_string(a.imag()));

  if (a.imag() == 0.0) {
    const double re = a.real();
    if (re == 1.0 || re == -1.0) throw PoleAtBranchPoint("clog_ratio at a = " + std::to_string(re));
    if (std::abs(re) < 1.0) return {2.0 * std::atanh(re), -std::numbers::pi};
    return {2.0 * std::atanh(1.0 / re), 0.0};
  }

  const Complex value = std::abs(a) > 1.0 ? 2.0 * std::atanh(1.0 / a) : 2.0 * std::atanh(a) - kI * std::numbers::pi;
  return require_finite(value, "clog_ratio");
}

/// ln((a+b)/(a-b)) for real b != 0, same branch as clog_ratio.
inline Complex clog_ratio(Complex a, double b) {
  if (b == 0.0 || !std::isfinite(b)) throw InvalidArgument("clog_ratio scale must be finite and nonzero");
  // (a+b)/(a-b) = (a/|b| + s)/(a/|b| - s) with s = sign(b); s = -1 inverts the ratio.
  const double scale = std::abs(b);
  const Complex base = clog_ratio(a / scale);
  return b > 0.0 ? base : -base;
}

/// ln|(w+1)/(w-1)| for real w != +-1.
inline double log_abs_ratio(double w) {
  if (w == 1.0 || w == -1.0) throw PoleAtBranchPoint("log_abs_ratio at w = " + std::to_string(w));
  return std::abs(w) < 1.0 ? 2.0 * std::atanh(w) : 2.0 * std::atanh(1.0 / w);
}

}  // namespace qplasma
