// transco: build coherence-optimal field states, simulate resonant
// Jaynes-Cummings dynamics, and reproduce the library's reference figures
// as CSV/JSON data files.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "transco/analysis.hpp"
#include "transco/catalysis.hpp"
#include "transco/io.hpp"
#include "transco/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;

struct RunConfig {
  double omega_ratio = 0.0;
  double tol = 1e-10;
  std::string out_dir = ".";
  std::string format = "csv";

  transco::JcmParams params() const { return {1.0, omega_ratio}; }
};

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write " + path.string());
  os << text;
}

void emit_table(const RunConfig& cfg, const std::string& stem,
                const transco::SweepTable& table) {
  const fs::path dir(cfg.out_dir);
  fs::create_directories(dir);
  if (cfg.format == "json") {
    write_text(dir / (stem + ".json"), transco::table_to_json(table).dump(2) + "\n");
  } else {
    std::ostringstream os;
    transco::write_table_csv(table, os);
    write_text(dir / (stem + ".csv"), os.str());
  }
  std::cout << "wrote " << (dir / (stem + "." + cfg.format)).string() << "\n";
}

void emit_trace(const RunConfig& cfg, const std::string& stem,
                const transco::CatalysisTrace& trace) {
  const fs::path dir(cfg.out_dir);
  fs::create_directories(dir);
  std::ostringstream os;
  transco::write_trace_csv(trace, os);
  write_text(dir / (stem + ".csv"), os.str());
  write_text(dir / (stem + ".json"), transco::trace_to_json(trace).dump(2) + "\n");
  std::cout << "wrote " << (dir / (stem + ".csv")).string() << " and .json\n";
}

transco::SweepTable distribution_table(const transco::FieldState& s,
                                       const std::string& builder) {
  transco::SweepTable table;
  table.x_label = "n";
  table.y_label = "probability";
  table.metadata["builder"] = builder;
  const std::vector<double> p = transco::probabilities(s);
  for (size_t n = 0; n < p.size(); ++n) {
    table.x.push_back(double(n));
    table.y.push_back(p[n]);
  }
  return table;
}

// distributions of recursion-built states next to the matched coherent states
void run_fig1(const RunConfig& cfg) {
  for (int n_max : {4, 16, 64, 256}) {
    const transco::PulseSpec spec =
        transco::ground_spec(0, 0, n_max, cfg.params());
    emit_table(cfg, "fig1_ground_nmax" + std::to_string(n_max),
               distribution_table(transco::build_ground(spec), "ground_k0"));
    const double alpha = kPi / (2.0 * spec.t);
    auto coh = transco::make_coherent(alpha, 0.0,
                                      transco::coherent_min_cutoff(alpha));
    emit_table(cfg, "fig1_coherent_nmax" + std::to_string(n_max),
               distribution_table(coh, "coherent_pi_half"));
  }
}

void run_fig2(const RunConfig& cfg) {
  const std::vector<std::pair<int, int>> bands = {{0, 3}, {3, 15}, {15, 63}};
  for (auto [n_min, n_max] : bands) {
    const transco::PulseSpec spec =
        transco::excited_spec(0, n_min, n_max, cfg.params());
    emit_table(cfg,
               "fig2_excited_" + std::to_string(n_min) + "_" +
                   std::to_string(n_max),
               distribution_table(transco::build_excited(spec), "excited_k0"));
    const double alpha = 3.0 * kPi / (2.0 * spec.t);
    auto coh = transco::make_coherent(alpha, 0.0,
                                      transco::coherent_min_cutoff(alpha));
    emit_table(cfg,
               "fig2_coherent_" + std::to_string(n_min) + "_" +
                   std::to_string(n_max),
               distribution_table(coh, "coherent_3pi_half"));
  }
}

std::vector<double> fig3_grid() {
  // log grid over (0, pi] merged with the exact pi/sqrt(n) times
  std::set<double> pts;
  for (double t : transco::geometric_grid(kPi / std::sqrt(200.0), kPi, 121))
    pts.insert(t);
  for (int n = 1; n <= 200; ++n) pts.insert(kPi / std::sqrt(double(n)));
  std::vector<double> grid(pts.begin(), pts.end());
  return grid;
}

void run_fig3(const RunConfig& cfg) {
  const std::vector<double> grid = fig3_grid();
  emit_table(cfg, "fig3_truncated",
             transco::coherence_sweep(grid, transco::SweepBuilder::truncated,
                                      cfg.params()));
  emit_table(cfg, "fig3_coherent",
             transco::coherence_sweep(grid, transco::SweepBuilder::coherent,
                                      cfg.params()));
}

transco::SweepTable event2_failure_table(const transco::JcmParams& p,
                                         int grid_points) {
  transco::SweepTable table;
  table.x_label = "omega0_t";
  table.y_label = "one_minus_p2";
  table.metadata["builder"] = "ground_k0_event2";
  transco::CatalysisOptions opts;
  opts.grid_points = grid_points;
  // descending n_max gives ascending omega0 t
  for (int n_max = 100; n_max >= 4; --n_max) {
    const transco::PulseSpec spec = transco::ground_spec(0, 0, n_max, p);
    const transco::CatalysisTrace trace =
        transco::run_catalysis(transco::build_ground(spec), 2, p, opts);
    table.x.push_back(p.omega0 * spec.t);
    table.y.push_back(1.0 - trace.events[1].p_event);
  }
  return table;
}

void run_fig4(const RunConfig& cfg, int grid_points) {
  const transco::SweepTable table =
      event2_failure_table(cfg.params(), grid_points);
  emit_table(cfg, "fig4_event2_failure", table);
  const transco::PowerLawFit fit = transco::power_law_fit(table);
  json j = {{"amplitude", fit.amplitude}, {"exponent", fit.exponent}};
  fs::create_directories(cfg.out_dir);
  write_text(fs::path(cfg.out_dir) / "fig4_powerlaw.json", j.dump(2) + "\n");
  std::cout << "wrote " << (fs::path(cfg.out_dir) / "fig4_powerlaw.json").string()
            << "\n";
}

void run_fig5(const RunConfig& cfg, int grid_points) {
  transco::CatalysisOptions opts;
  opts.grid_points = grid_points;
  for (int nbar : {25, 100}) {
    const transco::PulseSpec spec =
        transco::ground_spec(0, 0, 4 * nbar, cfg.params());
    const transco::FieldState ideal = transco::build_ground(spec);
    const double mean = transco::mean_photon(ideal);
    const transco::FieldState coh = transco::make_coherent(
        std::sqrt(mean), 0.0, transco::coherent_min_cutoff(std::sqrt(mean)));
    const auto [ideal_trace, coh_trace] = transco::compare_catalysts(
        ideal, coh, 2 * nbar, cfg.params(), opts);
    emit_trace(cfg, "fig5_transcoherent_nbar" + std::to_string(nbar),
               ideal_trace);
    emit_trace(cfg, "fig5_coherent_nbar" + std::to_string(nbar), coh_trace);
  }
}

int run_verify(const RunConfig& cfg) {
  const std::vector<transco::CheckResult> results =
      transco::run_verification(cfg.tol);
  json checks = json::array();
  bool all_pass = true;
  for (const transco::CheckResult& r : results) {
    checks.push_back({{"name", r.name},
                      {"deviation", r.deviation},
                      {"threshold", r.threshold},
                      {"pass", r.pass}});
    all_pass = all_pass && r.pass;
    std::cout << (r.pass ? "[pass] " : "[FAIL] ") << r.name
              << " (deviation " << transco::format_double(r.deviation)
              << ", threshold " << transco::format_double(r.threshold)
              << ")\n";
  }
  json report = {{"tolerance", cfg.tol},
                 {"checks", checks},
                 {"all_pass", all_pass}};
  fs::create_directories(cfg.out_dir);
  write_text(fs::path(cfg.out_dir) / "verify_report.json",
             report.dump(2) + "\n");
  std::cout << (all_pass ? "all checks passed" : "some checks FAILED") << " ("
            << results.size() << " checks, tolerance "
            << transco::format_double(cfg.tol) << ")\n";
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"transcoherent-state toolkit: state construction, "
               "Jaynes-Cummings simulation, catalysis experiments"};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--out", cfg.out_dir, "output directory")
      ->capture_default_str();
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--omega-ratio", cfg.omega_ratio,
                 "resonance frequency in units of omega0")
      ->capture_default_str();
  app.add_option("--tol", cfg.tol, "verification tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  // fig
  auto* fig = app.add_subcommand("fig", "emit data files for figure 1..5");
  int fig_id = 0;
  int fig_grid = 512;
  fig->add_option("id", fig_id, "figure number (1..5)")
      ->required()
      ->check(CLI::Range(1, 5));
  fig->add_option("--grid", fig_grid, "time-optimization grid points")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  // verify
  auto* verify = app.add_subcommand("verify", "run the invariant suite");

  // state
  auto* state = app.add_subcommand("state", "build a field state, dump JSON");
  bool st_ground = false, st_excited = false, st_truncated = false;
  int st_nmax = -1, st_nmin = 0, st_k = 0;
  double st_time = 0.0;
  state->add_flag("--ground", st_ground, "ground-start recursion state");
  state->add_flag("--excited", st_excited, "excited-start recursion state");
  state->add_flag("--truncated", st_truncated,
                  "near-optimal truncated state for --time");
  state->add_option("--nmax", st_nmax, "highest occupied photon number");
  state->add_option("--nmin", st_nmin, "lowest occupied photon number")
      ->capture_default_str();
  state->add_option("--k", st_k, "pulse-order index")->capture_default_str();
  state->add_option("--time", st_time, "interaction time (units 1/omega0)");

  // catalyze
  auto* catalyze = app.add_subcommand("catalyze", "run a catalysis trace");
  double ca_nbar = 25.0;
  int ca_events = 50;
  int ca_grid = 512;
  bool ca_coherent = false;
  bool ca_fixed_phase = false;
  catalyze->add_option("--nbar", ca_nbar, "target mean photon number")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  catalyze->add_option("--events", ca_events, "number of catalysis events")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  catalyze->add_option("--grid", ca_grid, "time-optimization grid points")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  catalyze->add_flag("--coherent", ca_coherent,
                     "catalyze a coherent state instead of the ideal state");
  catalyze->add_flag("--fixed-phase", ca_fixed_phase,
                     "measure at phi = 0 instead of the optimal phase");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (*fig) {
      switch (fig_id) {
        case 1: run_fig1(cfg); break;
        case 2: run_fig2(cfg); break;
        case 3: run_fig3(cfg); break;
        case 4: run_fig4(cfg, fig_grid); break;
        case 5: run_fig5(cfg, fig_grid); break;
      }
      return 0;
    }
    if (*verify) return run_verify(cfg);
    if (*state) {
      const int modes = int(st_ground) + int(st_excited) + int(st_truncated);
      if (modes != 1) {
        std::cerr << "state: pass exactly one of --ground/--excited/--truncated\n";
        return 2;
      }
      transco::FieldState built;
      json meta;
      try {
        if (st_ground) {
          const transco::PulseSpec spec =
              transco::ground_spec(st_k, st_nmin, st_nmax, cfg.params());
          built = transco::build_ground(spec);
          meta = {{"spec", "ground"}, {"t", spec.t},     {"k", spec.k},
                  {"n_min", spec.n_min}, {"n_max", spec.n_max}};
        } else if (st_excited) {
          const transco::PulseSpec spec =
              transco::excited_spec(st_k, st_nmin, st_nmax, cfg.params());
          built = transco::build_excited(spec);
          meta = {{"spec", "excited"}, {"t", spec.t},     {"k", spec.k},
                  {"n_min", spec.n_min}, {"n_max", spec.n_max}};
        } else {
          if (!(st_time > 0.0)) {
            std::cerr << "state --truncated requires --time > 0\n";
            return 2;
          }
          built = transco::build_truncated(st_time, cfg.params());
          meta = {{"spec", "truncated"},
                  {"t", st_time},
                  {"k", 0},
                  {"n_min", 0},
                  {"n_max", built.n_cut()}};
        }
      } catch (const std::invalid_argument& e) {
        std::cerr << "state: " << e.what() << "\n";
        return 2;
      }
      json j = transco::field_to_json(built);
      j["meta"] = meta;
      fs::create_directories(cfg.out_dir);
      const fs::path path = fs::path(cfg.out_dir) / "state.json";
      write_text(path, j.dump(2) + "\n");
      std::cout << "wrote " << path.string() << "\n";
      return 0;
    }
    if (*catalyze) {
      transco::FieldState field;
      if (ca_coherent) {
        const double alpha = std::sqrt(ca_nbar);
        field = transco::make_coherent(alpha, 0.0,
                                       transco::coherent_min_cutoff(alpha));
      } else {
        const int n_max = std::max(1, int(std::lround(4.0 * ca_nbar)));
        field = transco::build_ground(
            transco::ground_spec(0, 0, n_max, cfg.params()));
      }
      transco::CatalysisOptions opts;
      opts.grid_points = ca_grid;
      opts.optimize_phase = !ca_fixed_phase;
      const transco::CatalysisTrace trace =
          transco::run_catalysis(field, ca_events, cfg.params(), opts);
      emit_trace(cfg, "catalysis", trace);
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
