#pragma once

// compare / kohn / verify reports.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qplasma/cli/output.hpp"
#include "qplasma/dielectric.hpp"
#include "qplasma/kohn.hpp"
#include "qplasma/oracle.hpp"

namespace qplasma::cli {

struct CompareReport {
  DimensionlessPointA point;
  Complex bgk;
  Complex mermin;
  Complex lindhard;

  double bgk_mermin() const { return std::abs(bgk - mermin); }
  double bgk_lindhard() const { return std::abs(bgk - lindhard); }
  double mermin_lindhard() const { return std::abs(mermin - lindhard); }
};

/// Evaluates all three models at one point; Lindhard ignores y.
inline CompareReport run_compare(const DimensionlessPointA& p) {
  if (p.q == 0.0) throw DegenerateQ("compare: q = 0");
  return {p, epsilon_collisional_a(p).epsilon, epsilon_mermin(p).epsilon, epsilon_lindhard(p.x, p.q, p.xp).epsilon};
}

inline void print_compare_text(std::ostream& out, const CompareReport& r) {
  out << "point x=" << format_label(r.point.x) << " y=" << format_label(r.point.y) << " q=" << format_label(r.point.q)
      << " xp=" << format_label(r.point.xp) << '\n';
  const auto line = [&](const char* name, Complex v) {
    out << name << " re=" << format_value(v.real()) << " im=" << format_value(v.imag()) << '\n';
  };
  line("bgk     ", r.bgk);
  line("mermin  ", r.mermin);
  line("lindhard", r.lindhard);
  out << "|bgk-mermin|      " << format_value(r.bgk_mermin()) << '\n';
  out << "|bgk-lindhard|    " << format_value(r.bgk_lindhard()) << '\n';
  out << "|mermin-lindhard| " << format_value(r.mermin_lindhard()) << '\n';
}

inline void print_compare_json(std::ostream& out, const CompareReport& r) {
  const auto model = [&](const char* name, Complex v) {
    out << nlohmann::json{{"model", name},   {"x", r.point.x},   {"y", r.point.y},    {"q", r.point.q},
                          {"xp", r.point.xp}, {"re", v.real()}, {"im", v.imag()}}
               .dump()
        << '\n';
  };
  model("bgk", r.bgk);
  model("mermin", r.mermin);
  model("lindhard", r.lindhard);
  const auto diff = [&](const char* name, double d) { out << nlohmann::json{{"pair", name}, {"abs_diff", d}}.dump() << '\n'; };
  diff("bgk-mermin", r.bgk_mermin());
  diff("bgk-lindhard", r.bgk_lindhard());
  diff("mermin-lindhard", r.mermin_lindhard());
}

inline std::string branch_label(KohnBranch b) {
  std::string s = "q^2 ";
  s += b.linear == Sign::plus ? "+ 2q " : "- 2q ";
  s += b.frequency == Sign::plus ? "+ 2z" : "- 2z";
  return s;
}

inline std::string format_complex(Complex v) {
  if (v.imag() == 0.0) return format_label(v.real());
  return format_label(v.real()) + (v.imag() < 0.0 ? "" : "+") + format_label(v.imag()) + "i";
}

inline void print_kohn_roots(std::ostream& out, const KohnRootSet& set) {
  out << "kohn roots at x=" << format_label(set.x) << '\n';
  const auto row = [&](const char* name, const KohnRoot& r) {
    out << name << " q=" << format_complex(r.q) << "  [" << branch_label(r.branch) << "]"
        << " residual=" << format_label(r.residual) << (r.degenerate ? " degenerate" : "")
        << (r.physical ? " physical" : " non-physical") << '\n';
  };
  static constexpr std::array<const char*, 4> names{"q1", "q2", "q3", "q4"};
  for (std::size_t i = 0; i < 4; ++i) row(names[i], set.roots[i]);
  out << "companion roots (other root of each branch):\n";
  for (std::size_t i = 0; i < 4; ++i) row("  ", set.companions[i]);
}

inline void print_kohn_physical(std::ostream& out, const std::array<Complex, 4>& k, double kF) {
  static constexpr std::array<const char*, 4> names{"k1", "k2", "k3", "k4"};
  for (std::size_t i = 0; i < 4; ++i)
    out << names[i] << " = " << format_complex(k[i]) << " 1/m  (k/kF = " << format_complex(k[i] / kF) << ")\n";
}

struct VerifyReport {
  std::size_t points = 0;
  double max_rel_g0 = 0.0;
  double max_rel_j = 0.0;
  double max_rel_j_factorization = 0.0;
  double max_rel_epsilon = 0.0;

  bool passed() const {
    return max_rel_g0 < 1e-9 && max_rel_j < 1e-9 && max_rel_j_factorization < 1e-12 && max_rel_epsilon < 1e-8;
  }
};

inline double relative_error(Complex value, Complex reference) {
  const double scale = std::abs(reference);
  return scale == 0.0 ? std::abs(value) : std::abs(value - reference) / scale;
}

/// Closed forms against quadrature at random (x, y, q) with x in [-2,2], y in [1e-3,10] (log-uniform), q in [0.05,5].
inline VerifyReport run_verify(std::size_t points, std::uint64_t seed, double xp = 1.0) {
  const QuadratureSpec spec{1e-14, 1e-13, 20000};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(-2.0, 2.0), ulog_y(std::log(1e-3), std::log(10.0)), uq(0.05, 5.0);
  VerifyReport report;
  report.points = points;
  for (std::size_t i = 0; i < points; ++i) {
    const double x = ux(rng), y = std::exp(ulog_y(rng)), q = uq(rng);
    report.max_rel_g0 = std::max(report.max_rel_g0, relative_error(g0_a({x, y}), g0_quadrature(x, y, spec).value));
    for (Sign s : {Sign::plus, Sign::minus})
      report.max_rel_j =
          std::max(report.max_rel_j, relative_error(j_closed_form(x, y, q, s), j_pm_quadrature(x, y, q, s, spec).value));
    const Complex direct = j_closed_form(x, y, q, Sign::plus) - j_closed_form(x, y, q, Sign::minus);
    report.max_rel_j_factorization =
        std::max(report.max_rel_j_factorization, relative_error(j_difference_from_kernels(x, y, q), direct));
    const DimensionlessPointA p{x, y, q, xp};
    report.max_rel_epsilon =
        std::max(report.max_rel_epsilon, relative_error(epsilon_collisional_a(p).epsilon, epsilon_from_quadrature(p, spec)));
  }
  return report;
}

inline void print_verify(std::ostream& out, const VerifyReport& r) {
  out << "points                    " << r.points << '\n';
  out << "max rel err g0            " << format_label(r.max_rel_g0) << '\n';
  out << "max rel err J+-           " << format_label(r.max_rel_j) << '\n';
  out << "max rel err J factorized  " << format_label(r.max_rel_j_factorization) << '\n';
  out << "max rel err eps           " << format_label(r.max_rel_epsilon) << '\n';
  out << (r.passed() ? "PASS" : "FAIL") << '\n';
}

}  // namespace qplasma::cli
