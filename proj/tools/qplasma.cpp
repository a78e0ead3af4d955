// qplasma: sweeps, model comparison, Kohn roots and oracle verification.
//
// Exit codes: 0 success, 1 evaluation failure, 2 usage or config error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qplasma/cli/config.hpp"
#include "qplasma/cli/output.hpp"
#include "qplasma/cli/reports.hpp"
#include "qplasma/cli/sweep.hpp"
#include "qplasma/kohn.hpp"

namespace {

using namespace qplasma;
using namespace qplasma::cli;

constexpr int kOk = 0;
constexpr int kEvaluationFailure = 1;
constexpr int kUsageError = 2;

struct SweepFlags {
  std::string config;
  std::optional<std::string> model, x, y, q, xp, output, format;
};

std::string strip_extension(const std::string& path) {
  for (const char* ext : {".csv", ".svg"}) {
    const std::string e(ext);
    if (path.size() > e.size() && path.compare(path.size() - e.size(), e.size(), e) == 0)
      return path.substr(0, path.size() - e.size());
  }
  return path;
}

int run_sweep(const SweepFlags& flags) {
  SweepConfig cfg;
  try {
    KeyValues kv;
    if (!flags.config.empty()) kv = load_key_values(flags.config);
    const auto set = [&](const char* key, const std::optional<std::string>& v) {
      if (v) kv[key] = *v;
    };
    set("model", flags.model);
    set("x", flags.x);
    set("y", flags.y);
    set("q", flags.q);
    set("xp", flags.xp);
    set("output", flags.output);
    set("format", flags.format);
    cfg = build_sweep_config(kv);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kUsageError;
  }

  const SweepTable table = run_sweep_table(cfg, threads_from_environment());
  for (const auto& w : table.warnings) std::cerr << "warning: " << w << '\n';

  const std::string stem = strip_extension(cfg.output);
  const auto write_file = [&](const std::string& path, auto&& writer) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write '" << path << "'\n";
      return false;
    }
    writer(out, table);
    return true;
  };
  if (cfg.format != OutputFormat::svg) {
    if (stem.empty()) {
      write_csv(std::cout, table);
    } else if (!write_file(stem + ".csv", [](std::ostream& o, const SweepTable& t) { write_csv(o, t); })) {
      return kEvaluationFailure;
    }
  }
  if (cfg.format != OutputFormat::csv &&
      !write_file(stem + ".svg", [](std::ostream& o, const SweepTable& t) { write_svg(o, t); }))
    return kEvaluationFailure;

  if (table.skipped > 0) {
    std::cerr << "skipped " << table.skipped << " of " << table.cells() << " points (pole or evaluation error)\n";
    if (100 * table.skipped >= table.cells()) return kEvaluationFailure;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Longitudinal permittivity of a degenerate collisional quantum plasma"};
  app.require_subcommand(1);

  SweepFlags sweep_flags;
  auto* sweep = app.add_subcommand("sweep", "Evaluate eps along q (or x) for several y; write CSV and/or SVG");
  sweep->add_option("--config", sweep_flags.config, "key = value config file (flags override it)");
  sweep->add_option("--model", sweep_flags.model, "bgk | bgk-b | lindhard | mermin");
  sweep->add_option("--x", sweep_flags.x, "scalar or min:max:steps");
  sweep->add_option("--y", sweep_flags.y, "comma-separated collision frequencies");
  sweep->add_option("--q", sweep_flags.q, "min:max:steps or scalar");
  sweep->add_option("--xp", sweep_flags.xp, "plasma coupling");
  sweep->add_option("--output", sweep_flags.output, "output path stem (stdout CSV when omitted)");
  sweep->add_option("--format", sweep_flags.format, "csv | svg | both");

  DimensionlessPointA cmp{0.0, 0.0, 1.0, 1.0};
  bool json = false;
  auto* compare = app.add_subcommand("compare", "BGK, Mermin and Lindhard permittivity at one point");
  compare->add_option("--x", cmp.x)->required();
  compare->add_option("--y", cmp.y)->required();
  compare->add_option("--q", cmp.q)->required();
  compare->add_option("--xp", cmp.xp);
  compare->add_flag("--json", json, "JSON-lines output");

  std::optional<double> kohn_x, omega, kF, vF;
  auto* kohn = app.add_subcommand("kohn", "Kohn singularity positions");
  kohn->add_option("--x", kohn_x, "omega/(kF vF)");
  kohn->add_option("--omega", omega, "frequency, rad/s");
  kohn->add_option("--kf", kF, "Fermi wavenumber, 1/m");
  kohn->add_option("--vf", vF, "Fermi velocity, m/s");

  std::size_t verify_points = 200;
  std::uint64_t verify_seed = 20240601;
  auto* verify = app.add_subcommand("verify", "Closed forms against the quadrature oracle");
  verify->add_option("--points", verify_points);
  verify->add_option("--seed", verify_seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*sweep) return run_sweep(sweep_flags);

    if (*compare) {
      if (cmp.q == 0.0 || cmp.y < 0.0 || cmp.xp < 0.0) {
        std::cerr << "usage error: need q != 0, y >= 0, xp >= 0\n";
        return kUsageError;
      }
      const auto report = run_compare(cmp);
      json ? print_compare_json(std::cout, report) : print_compare_text(std::cout, report);
      return kOk;
    }

    if (*kohn) {
      const bool physical = omega || kF || vF;
      if (physical == kohn_x.has_value() || (physical && !(omega && kF && vF))) {
        std::cerr << "usage error: give either --x, or all of --omega --kf --vf\n";
        return kUsageError;
      }
      if (kohn_x) {
        print_kohn_roots(std::cout, kohn_roots_dimless(*kohn_x));
      } else {
        const double x = *omega / (*kF * *vF);
        print_kohn_roots(std::cout, kohn_roots_dimless(x));
        print_kohn_physical(std::cout, kohn_wavenumbers_physical(*omega, *kF, *vF), *kF);
      }
      return kOk;
    }

    if (*verify) {
      const auto report = run_verify(verify_points, verify_seed);
      print_verify(std::cout, report);
      return report.passed() ? kOk : kEvaluationFailure;
    }
  } catch (const Error& e) {
    std::cerr << "evaluation error: " << e.what() << '\n';
    return kEvaluationFailure;
  }
  return kUsageError;
}
