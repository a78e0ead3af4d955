#pragma once

// Parallel grid evaluation for the sweep subcommand. Workers write into
// index-addressed slots, so the table is identical for any thread count.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "qplasma/cli/config.hpp"
#include "qplasma/dielectric.hpp"
#include "qplasma/kohn.hpp"

namespace qplasma::cli {

inline constexpr double kNudge = 1e-6;

struct SweepTable {
  std::string axis_name;
  std::vector<double> axis;  // one entry per row, after nudging
  std::vector<double> ys;
  std::vector<std::vector<std::optional<Complex>>> values;  // [y index][row]
  std::size_t skipped = 0;
  std::vector<std::string> warnings;

  std::size_t cells() const { return axis.size() * ys.size(); }
};

/// QPLASMA_THREADS, 0 or unset meaning hardware concurrency.
inline unsigned resolve_threads(const char* env_value) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (env_value == nullptr || *env_value == '\0') return hw;
  char* end = nullptr;
  const long n = std::strtol(env_value, &end, 10);
  if (end == env_value || *end != '\0' || n < 0) return hw;
  return n == 0 ? hw : static_cast<unsigned>(n);
}

inline unsigned threads_from_environment() { return resolve_threads(std::getenv("QPLASMA_THREADS")); }

/// True when (x, q) sits on a y = 0 log branch point of the chosen model.
inline bool is_singular_node(SweepModel model, double x, double q, double y) {
  constexpr double tol = kSingularNodeTolerance;
  if (model == SweepModel::mermin) {
    // N0(q) has its branch point at |q| = 2 regardless of y.
    if (std::abs(std::abs(q) - 2.0) <= tol) return true;
    if (x == 0.0) return false;
  }
  if (y != 0.0 && model != SweepModel::lindhard) return false;
  if (model == SweepModel::bgk_b) {
    // Convention B: q^2 +- 2q +- 2x = 0, plus q = 0.
    if (std::abs(q) <= tol) return true;
    const auto set = kohn_roots_dimless(x);
    for (const auto* group : {&set.roots, &set.companions})
      for (const auto& r : *group)
        if (r.q.imag() == 0.0 && std::abs(r.q.real() - q) <= tol) return true;
    return false;
  }
  return near_kernel_branch_point(x, q, tol);
}

inline Complex evaluate_model(SweepModel model, double x, double y, double q, double xp) {
  switch (model) {
    case SweepModel::bgk: return epsilon_collisional_a({x, y, q, xp}).epsilon;
    case SweepModel::bgk_b: return epsilon_collisional_b({x, y, q, xp * xp}).epsilon;
    case SweepModel::lindhard: return epsilon_lindhard(x, q, xp).epsilon;
    case SweepModel::mermin: return epsilon_mermin({x, y, q, xp}).epsilon;
  }
  return {};
}

inline SweepTable run_sweep_table(const SweepConfig& cfg, unsigned threads) {
  SweepTable table;
  const bool along_q = std::holds_alternative<Range>(cfg.q);
  table.axis_name = along_q ? "q" : "x";
  table.axis = along_q ? std::get<Range>(cfg.q).values() : std::get<Range>(cfg.x).values();
  table.ys = cfg.y;
  const double fixed = along_q ? std::get<double>(cfg.x) : std::get<double>(cfg.q);
  const std::size_t rows = table.axis.size();

  // Nudge axis nodes that hit a branch point for any requested y.
  for (auto& value : table.axis) {
    for (double y : cfg.y) {
      const double x = along_q ? fixed : value;
      const double q = along_q ? value : fixed;
      if (is_singular_node(cfg.model, x, q, y)) {
        table.warnings.push_back(table.axis_name + " = " + std::to_string(value) + " is a branch point; nudged by +1e-6");
        value += kNudge;
        break;
      }
    }
  }

  table.values.assign(cfg.y.size(), std::vector<std::optional<Complex>>(rows));
  const std::size_t total = rows * cfg.y.size();
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t idx = next.fetch_add(1); idx < total; idx = next.fetch_add(1)) {
      const std::size_t iy = idx / rows;
      const std::size_t row = idx % rows;
      const double a = table.axis[row];
      const double x = along_q ? fixed : a;
      const double q = along_q ? a : fixed;
      try {
        table.values[iy][row] = evaluate_model(cfg.model, x, cfg.y[iy], q, cfg.xp);
      } catch (const Error&) {
        table.values[iy][row].reset();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(total, 1))));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n);
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& column : table.values)
    table.skipped += static_cast<std::size_t>(std::count_if(column.begin(), column.end(), [](const auto& v) { return !v; }));
  return table;
}

}  // namespace qplasma::cli
