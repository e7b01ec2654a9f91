// Copyright 2026 The DSBM Change Point Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// dsbm: simulate dynamic SBM series, locate change points, run replicated
// experiments, bootstrap a fitted break and print signal diagnostics.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dsbm/bench/config.hpp"
#include "dsbm/bench/experiment.hpp"
#include "dsbm/bench/scenario.hpp"
#include "dsbm/cluster/misclassification.hpp"
#include "dsbm/error.hpp"
#include "dsbm/infer/bootstrap.hpp"
#include "dsbm/infer/regime.hpp"
#include "dsbm/infer/snr.hpp"
#include "dsbm/netcore/sampler.hpp"
#include "dsbm/netcore/series_io.hpp"
#include "dsbm/rng.hpp"
#include "fit_json.hpp"

namespace fs = std::filesystem;
using namespace dsbm;

namespace {

struct GlobalFlags {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<int> reps;
  std::optional<int> threads;
  std::optional<double> c_star;
};

struct ScenarioFlags {
  std::optional<std::string> name;
  std::optional<int> m;
  std::optional<int> n;
  std::optional<double> tau;
  std::optional<double> delta;
  std::optional<double> lambda;
  std::optional<double> shift_over_sqrt_n;
};

void add_scenario_flags(CLI::App* cmd, ScenarioFlags& s) {
  cmd->add_option("-s,--scenario", s.name, "Named scenario (I..V, G, reallocation, ...)");
  cmd->add_option("-m,--nodes", s.m, "Number of nodes");
  cmd->add_option("-n,--times", s.n, "Number of time points");
  cmd->add_option("--tau", s.tau, "Change fraction in (0, 1)");
  cmd->add_option("--delta", s.delta, "Exponent delta (models I, IV)");
  cmd->add_option("--lambda", s.lambda, "Exponent lambda (models IV, V)");
  cmd->add_option("--shift-over-sqrt-n", s.shift_over_sqrt_n,
                  "Extra shift c/sqrt(n) (connectivity, custom)");
}

// Config file first, flags on top.
RunConfig resolve(const GlobalFlags& g, const ScenarioFlags& s) {
  RunConfig config = g.config.empty() ? RunConfig{} : load_run_config(g.config);
  if (g.seed) config.seed = *g.seed;
  if (g.reps) config.reps = *g.reps;
  if (g.threads) config.threads = *g.threads;
  if (g.c_star) config.c_star = *g.c_star;
  auto& sc = config.scenario;
  if (s.name) sc.name = *s.name;
  if (s.m) sc.m = *s.m;
  if (s.n) sc.n = *s.n;
  if (s.tau) sc.tau = *s.tau;
  if (s.delta) sc.delta = *s.delta;
  if (s.lambda) sc.lambda = *s.lambda;
  if (s.shift_over_sqrt_n) sc.shift_over_sqrt_n = *s.shift_over_sqrt_n;
  return config;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<Method> parse_methods(const std::vector<std::string>& names) {
  std::vector<Method> out;
  for (const auto& n : names) out.push_back(parse_method(n));
  return out;
}

SearchGrid grid_for(int n, const std::optional<double>& c_star) {
  return c_star ? SearchGrid::with_boundary(n, *c_star) : SearchGrid::full(n);
}

void print_snr(std::ostream& out, const SnrReport& r) {
  out.precision(10);
  out << "m," << r.num_nodes << "\nn," << r.num_times << "\nK," << r.num_communities
      << "\nF_n," << r.gap << "\nsnr_er," << r.snr_er << "\nsnr_dsbm," << r.snr_dsbm
      << "\nnu_m," << r.nu_m << "\nKm_over_nu2," << r.a1_first
      << "\nm_sqrt_n_over_nu2," << r.a1_second << "\nm_over_sqrt_n_nu2," << r.a1_star
      << "\nsnr_er_adap," << r.snr_er_adap << "\na1_adap," << r.a1_adap << '\n';
}

void print_regime(std::ostream& out, const RegimeDiagnostics& d) {
  out << "regime," << to_string(d.regime) << "\ntheta," << d.theta
      << "\ngap_offdiag," << d.gap << "\ngamma2," << d.gamma2 << "\nk_set_size,"
      << d.k_set_size << "\nc1_sq," << d.c1_sq << "\ngamma_tilde_sq,"
      << d.gamma_tilde_sq << "\nk0_atoms," << d.k0_atoms.size() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Change point estimation in dynamic stochastic block models"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags g;
  app.add_option("--config", g.config, "YAML run configuration")->check(CLI::ExistingFile);
  app.add_option("--seed", g.seed, "Master seed");
  app.add_option("--reps", g.reps, "Replicates");
  app.add_option("--threads", g.threads, "Worker threads");
  app.add_option("--grid-cstar", g.c_star, "Restrict breaks to [n c*, n (1 - c*)]")
      ->check(CLI::Range(0.0, 0.5));

  // simulate
  auto* sim = app.add_subcommand("simulate", "Sample series from a scenario");
  ScenarioFlags sim_s;
  add_scenario_flags(sim, sim_s);
  std::string sim_dir = ".";
  std::string sim_format = "text";
  sim->add_option("-o,--out-dir", sim_dir, "Output directory");
  sim->add_option("--format", sim_format, "text or binary")
      ->check(CLI::IsMember({"text", "binary"}));

  // detect
  auto* det = app.add_subcommand("detect", "Estimate the change point of a series");
  std::string det_series;
  std::vector<std::string> det_methods = {"2step"};
  int det_k = 2;
  std::string det_model;
  std::string det_prefix = "fit";
  std::string det_plot;
  std::string det_variant = "adjacency_sum";
  det->add_option("series", det_series, "Series file (text or binary)")
      ->required()->check(CLI::ExistingFile);
  det->add_option("--method", det_methods, "known, every_point, 2step, boundary");
  det->add_option("-k,--communities", det_k, "Number of communities");
  det->add_option("--model", det_model, "Model YAML (truth; required for 'known')")
      ->check(CLI::ExistingFile);
  det->add_option("-o,--prefix", det_prefix, "Output prefix");
  det->add_option("--plot", det_plot, "Write an SVG of the trajectories");
  det->add_option("--variant", det_variant, "Clustering operator");

  // bench
  auto* ben = app.add_subcommand("bench", "Replicated experiment -> report CSV");
  ScenarioFlags ben_s;
  add_scenario_flags(ben, ben_s);
  std::vector<std::string> ben_methods;
  std::string ben_out;
  bool ben_timing = false;
  ben->add_option("--method", ben_methods, "Methods (default from config)");
  ben->add_option("-o,--out", ben_out, "Report CSV (default stdout)");
  ben->add_flag("--timing", ben_timing, "Add wall-clock columns");

  // bootstrap
  auto* boot = app.add_subcommand("bootstrap", "Adaptive bootstrap of a fitted break");
  std::string boot_fit;
  std::vector<double> boot_levels = {0.5, 0.9, 0.95, 0.99};
  std::string boot_out;
  std::string boot_samples;
  boot->add_option("fit", boot_fit, "Fit JSON written by 'detect'")
      ->required()->check(CLI::ExistingFile);
  boot->add_option("--levels", boot_levels, "Quantile levels");
  boot->add_option("-o,--out", boot_out, "Quantile CSV (default stdout)");
  boot->add_option("--samples", boot_samples, "Also write the h samples");

  // diagnose
  auto* dia = app.add_subcommand("diagnose", "Signal and regime diagnostics of a model");
  ScenarioFlags dia_s;
  add_scenario_flags(dia, dia_s);
  std::string dia_model;
  std::string dia_fit;
  dia->add_option("--model", dia_model, "Model YAML instead of a scenario")
      ->check(CLI::ExistingFile);
  dia->add_option("--fit", dia_fit, "Fit JSON instead of a scenario")
      ->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sim) {
      const RunConfig config = resolve(g, sim_s);
      const DsbmSpec spec = build_scenario(config.scenario);
      fs::create_directories(sim_dir);
      {
        std::ofstream model(fs::path(sim_dir) / "model.yaml");
        model << to_yaml(spec);
      }
      const auto format =
          sim_format == "binary" ? SeriesFormat::kBinary : SeriesFormat::kText;
      const int reps = g.reps.value_or(1);
      for (int r = 0; r < reps; ++r) {
        const auto series = sample_dsbm(
            spec, derive_seed(config.seed, static_cast<std::uint64_t>(r)),
            config.threads);
        char name[32];
        std::snprintf(name, sizeof name, "series_%03d.%s", r,
                      format == SeriesFormat::kBinary ? "bin" : "txt");
        save_series(fs::path(sim_dir) / name, series, format);
      }
      for (const auto& note : scenario_notes(config.scenario)) {
        std::cerr << "note: " << note << '\n';
      }
      std::cerr << "wrote " << reps << " series to " << sim_dir << '\n';
      return 0;
    }

    if (*det) {
      const RunConfig config = resolve(g, {});
      const AdjacencySeries series = load_series(det_series);
      const SearchGrid grid = grid_for(series.num_times(), config.c_star);
      std::optional<DsbmSpec> truth;
      if (!det_model.empty()) truth = parse_dsbm_spec_yaml(slurp(det_model));
      EstimatorOptions options;
      options.threads = config.threads;
      options.variant = parse_cluster_variant(det_variant);
      const int k = truth ? truth->num_communities() : det_k;

      std::ofstream summary(det_prefix + "_summary.csv");
      write_fit_summary_header(summary);
      for (Method method : parse_methods(det_methods)) {
        const std::uint64_t seed = method_seed(config.seed, method);
        ChangePointFit fit;
        switch (method) {
          case Method::kKnown:
            if (!truth) throw std::invalid_argument("method 'known' needs --model");
            fit = estimate_known(series, truth->pre_assignment(),
                                 truth->post_assignment(), grid);
            break;
          case Method::kEveryPoint:
            fit = estimate_every_time_point(series, k, grid, seed, options);
            break;
          case Method::kTwoStep:
            fit = estimate_2step(series, k, grid, seed, options);
            break;
          case Method::kBoundary:
            fit = estimate_boundary_variant(series, k, grid, seed, options);
            break;
        }
        const std::string stem = det_prefix + "_" + std::string(to_string(method));
        std::ofstream traj(stem + "_trajectory.csv");
        write_trajectory_csv(traj, fit);
        cli::save_fit(stem + ".json", fit);
        std::optional<FitTruth> ft;
        if (truth) ft = FitTruth{truth->pre_assignment(), truth->post_assignment()};
        write_fit_summary_row(summary, fit, ft);
        for (const auto& w : fit.warnings) std::cerr << "warning: " << w << '\n';
        std::cout << to_string(method) << ": tau_index=" << fit.tau_index
                  << " tau_hat=" << fit.tau_hat << '\n';
      }
      if (!det_plot.empty()) {
        TrajectoryRequest request;
        request.methods = parse_methods(det_methods);
        request.k = k;
        request.seed = config.seed;
        request.c_star = config.c_star;
        if (truth) {
          request.z = truth->pre_assignment();
          request.w = truth->post_assignment();
        }
        std::ofstream csv(det_prefix + "_trajectories.csv");
        emit_trajectory(csv, series, request, fs::path(det_plot));
      }
      return 0;
    }

    if (*ben) {
      RunConfig config = resolve(g, ben_s);
      if (!ben_methods.empty()) config.methods = parse_methods(ben_methods);
      ExperimentOptions options;
      options.threads = config.threads;
      options.c_star = config.c_star;
      options.variant = config.variant;
      const auto report =
          run_experiment(config.scenario, config.methods, config.reps, config.seed, options);
      for (const auto& note : report.notes) std::cerr << "note: " << note << '\n';
      if (ben_out.empty()) {
        write_report_csv(std::cout, {report}, ben_timing);
      } else {
        std::ofstream out(ben_out);
        write_report_csv(out, {report}, ben_timing);
      }
      return 0;
    }

    if (*boot) {
      const ChangePointFit fit = cli::load_fit(boot_fit);
      const int reps = g.reps.value_or(500);
      const auto result = adaptive_bootstrap(fit, reps, g.seed.value_or(20240601),
                                             boot_levels, g.threads.value_or(1));
      if (boot_out.empty()) {
        write_bootstrap_quantiles_csv(std::cout, result);
      } else {
        std::ofstream out(boot_out);
        write_bootstrap_quantiles_csv(out, result);
      }
      if (!boot_samples.empty()) {
        std::ofstream out(boot_samples);
        write_bootstrap_samples_csv(out, result);
      }
      return 0;
    }

    if (*dia) {
      if (!dia_fit.empty()) {
        const ChangePointFit fit = cli::load_fit(dia_fit);
        print_snr(std::cout, snr_report(fit));
        print_regime(std::cout, regime_diagnostics(fit));
        return 0;
      }
      const DsbmSpec spec = dia_model.empty()
                                ? build_scenario(resolve(g, dia_s).scenario)
                                : parse_dsbm_spec_yaml(slurp(dia_model));
      print_snr(std::cout, snr_report(spec));
      try {
        print_regime(std::cout, regime_diagnostics(spec));
      } catch (const GammaUndefined& e) {
        std::cout << "regime,undefined\n";
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "dsbm: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
