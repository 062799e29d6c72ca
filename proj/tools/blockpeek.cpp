// Copyright 2026 The blockpeek Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: pattern / payoff / solve / sweep.
//
// Exit codes: 0 success, 2 parse error (command line, config, or input
// files), 3 domain error (invalid parameter values, solver failures),
// 4 I/O error.

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <functional>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "blockpeek/blockpeek.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUnexpected = 1;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitIo = 4;

struct GlobalOpts {
  std::string config_path;
  std::string out_dir = ".";
  std::uint64_t seed = 0;
  bool seed_given = false;
  bool quiet = false;
};

blockpeek::SweepConfig load_config(const GlobalOpts& g) {
  blockpeek::SweepConfig cfg;
  if (!g.config_path.empty()) cfg = blockpeek::load_config_file(g.config_path);
  if (g.seed_given) cfg.master_seed = g.seed;
  return cfg;
}

// Worker count for the sweep: hardware concurrency, capped by the
// BLOCKPEEK_THREADS environment variable when it parses as a positive
// integer (an explicit value is honored even above the detected count).
unsigned worker_threads() {
  unsigned threads = std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  if (const char* env = std::getenv("BLOCKPEEK_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 4096)
      threads = static_cast<unsigned>(v);
  }
  return threads;
}

void ensure_out_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw blockpeek::IoError("cannot create output directory '" + dir +
                                   "': " + ec.message());
}

std::string out_path(const GlobalOpts& g, const char* name) {
  return (fs::path(g.out_dir) / name).string();
}

blockpeek::RunManifest start_manifest(const char* command,
                                      const blockpeek::SweepConfig& cfg) {
  blockpeek::RunManifest m;
  m.command = command;
  m.seed = cfg.master_seed;
  m.created_utc = blockpeek::iso8601_utc_now();
  m.config_echo = blockpeek::config_echo_json(cfg);
  return m;
}

void emit(const GlobalOpts& g, blockpeek::RunManifest& m, const char* name,
          const std::string& content) {
  blockpeek::write_file(out_path(g, name), content);
  m.add_file(name, content);
  if (!g.quiet)
    std::cout << "wrote " << out_path(g, name) << " (" << content.size()
              << " bytes)\n";
}

void finish_manifest(const GlobalOpts& g, const blockpeek::RunManifest& m) {
  const std::string text = blockpeek::manifest_to_json(m).dump(2) + "\n";
  blockpeek::write_file(out_path(g, "manifest.json"), text);
  if (!g.quiet) std::cout << "wrote " << out_path(g, "manifest.json") << "\n";
}

blockpeek::Matrix matrix_from_config(const blockpeek::SweepConfig& cfg) {
  blockpeek::Rng rng(cfg.master_seed);
  const blockpeek::FadingField field = blockpeek::fading_field(cfg.scenario, rng);
  return blockpeek::build_payoff_matrix(cfg.scenario, field);
}

void cmd_pattern(const GlobalOpts& g, double resolution_deg) {
  const blockpeek::SweepConfig cfg = load_config(g);
  cfg.scenario.validate();
  const std::string csv = blockpeek::pattern_csv(cfg.scenario, resolution_deg);
  ensure_out_dir(g.out_dir);
  blockpeek::RunManifest m = start_manifest("pattern", cfg);
  emit(g, m, "pattern.csv", csv);
  finish_manifest(g, m);
}

void cmd_payoff(const GlobalOpts& g, int precision) {
  const blockpeek::SweepConfig cfg = load_config(g);
  const blockpeek::Matrix M = matrix_from_config(cfg);
  const std::string csv =
      blockpeek::payoff_csv(M, blockpeek::action_grid(), precision);
  ensure_out_dir(g.out_dir);
  blockpeek::RunManifest m = start_manifest("payoff", cfg);
  emit(g, m, "payoff.csv", csv);
  finish_manifest(g, m);
}

void cmd_solve(const GlobalOpts& g, const std::string& matrix_path) {
  const blockpeek::SweepConfig cfg = load_config(g);
  blockpeek::Matrix M(1, 1);
  if (!matrix_path.empty()) {
    M = blockpeek::read_matrix_csv(blockpeek::read_file(matrix_path));
  } else {
    M = matrix_from_config(cfg);
  }
  const blockpeek::Equilibrium eq = blockpeek::solve_zero_sum_lp(M);
  const std::string text = blockpeek::equilibrium_to_json(M, eq).dump(2) + "\n";
  ensure_out_dir(g.out_dir);
  blockpeek::RunManifest m = start_manifest("solve", cfg);
  emit(g, m, "equilibrium.json", text);
  finish_manifest(g, m);
  if (!g.quiet) {
    std::cout << "value: " << eq.value << "\n";
    std::cout << "support sizes: receiver " << blockpeek::support(eq.x_r).size()
              << ", adversary " << blockpeek::support(eq.x_a).size() << "\n";
  }
}

void cmd_sweep(const GlobalOpts& g, bool dump_realizations) {
  const blockpeek::SweepConfig cfg = load_config(g);
  const unsigned threads = worker_threads();
  const blockpeek::SweepResult result =
      blockpeek::sweep_detailed(cfg, threads, dump_realizations);
  const blockpeek::ActionGrid grid = blockpeek::action_grid();
  ensure_out_dir(g.out_dir);
  blockpeek::RunManifest m = start_manifest("sweep", cfg);
  emit(g, m, "heatmap_r.csv", blockpeek::heatmap_csv(result.aggregates, grid, true));
  emit(g, m, "heatmap_a.csv", blockpeek::heatmap_csv(result.aggregates, grid, false));
  emit(g, m, "summary.csv", blockpeek::summary_csv(result.aggregates));
  if (dump_realizations)
    emit(g, m, "realizations.csv",
         blockpeek::realizations_csv(result.realizations, grid));
  finish_manifest(g, m);
  if (!g.quiet) {
    std::cout << "distances: " << result.aggregates.size()
              << ", realizations each: " << cfg.realizations
              << ", threads: " << threads << "\n";
    for (const blockpeek::DistanceAggregate& a : result.aggregates) {
      std::cout << "  rho_a " << blockpeek::format_fixed(a.rho_a_m, 2)
                << "  mean angle R " << blockpeek::format_fixed(a.mean_angle_r_deg, 2)
                << "  mean angle A " << blockpeek::format_fixed(a.mean_angle_a_deg, 2)
                << "  value " << blockpeek::format_fixed(a.mean_value, 3) << " +/- "
                << blockpeek::format_fixed(a.std_value, 3) << "\n";
    }
  }
}

int run_guarded(const std::function<void()>& fn) {
  try {
    fn();
    return kExitOk;
  } catch (const blockpeek::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const blockpeek::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const blockpeek::SolverError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnexpected;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"desk-scale blockage game toolkit"};
  app.set_version_flag("--version", std::string(blockpeek::kVersion));
  app.fallthrough();
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--config", g.config_path, "JSON configuration file");
  auto* seed_opt =
      app.add_option("--seed", g.seed, "master seed (overrides the config)");
  app.add_option("--out", g.out_dir, "output directory")->capture_default_str();
  app.add_flag("--quiet", g.quiet, "suppress progress output");

  double resolution_deg = 0.25;
  auto* pattern =
      app.add_subcommand("pattern", "export the transmit antenna pattern");
  pattern->add_option("--resolution", resolution_deg, "angular step in degrees")
      ->capture_default_str();

  int precision = 4;
  auto* payoff = app.add_subcommand("payoff", "export one payoff matrix");
  payoff->add_option("--precision", precision, "CSV decimals for payoffs")
      ->check(CLI::Range(1, 12))
      ->capture_default_str();

  std::string matrix_path;
  auto* solve = app.add_subcommand("solve", "solve a zero-sum matrix game");
  solve->add_option("--matrix", matrix_path,
                    "CSV matrix to solve (default: build from config)");

  bool dump_realizations = false;
  auto* sweep = app.add_subcommand("sweep", "run the distance sweep campaign");
  sweep->add_flag("--dump-realizations", dump_realizations,
                  "also export per-realization equilibria");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }
  g.seed_given = seed_opt->count() > 0;

  if (*pattern) return run_guarded([&] { cmd_pattern(g, resolution_deg); });
  if (*payoff) return run_guarded([&] { cmd_payoff(g, precision); });
  if (*solve) return run_guarded([&] { cmd_solve(g, matrix_path); });
  if (*sweep) return run_guarded([&] { cmd_sweep(g, dump_realizations); });
  return kExitParse;
}
