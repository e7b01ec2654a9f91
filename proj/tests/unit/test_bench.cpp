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

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include "dsbm/bench/config.hpp"
#include "dsbm/bench/experiment.hpp"
#include "dsbm/bench/scenario.hpp"
#include "dsbm/cpd/estimators.hpp"
#include "dsbm/netcore/sampler.hpp"
#include "dsbm/rng.hpp"

namespace dsbm {
namespace {

ScenarioSpec named(const std::string& name, int m = 60, int n = 60) {
  ScenarioSpec s;
  s.name = name;
  s.m = m;
  s.n = n;
  return s;
}

TEST(Scenario, ModelOneUsesTheReallocationLayout) {
  auto s = named("I");
  s.delta = 0.05;
  const auto spec = build_scenario(s);
  EXPECT_DOUBLE_EQ(spec.pre_matrix()(0, 1), 0.6 - std::pow(60.0, -0.05));
  EXPECT_EQ(spec.pre_matrix(), spec.post_matrix());
  EXPECT_EQ(spec.pre_assignment()[29], 0);
  EXPECT_EQ(spec.pre_assignment()[30], 1);
  EXPECT_EQ(spec.post_assignment()[0], 0);   // node 1 -> community 1
  EXPECT_EQ(spec.post_assignment()[1], 1);   // node 2 -> community 2
  EXPECT_EQ(spec.change_index(), 30);
}

TEST(Scenario, ModelTwoShiftsEveryEntry) {
  const auto spec = build_scenario(named("II"));
  const Eigen::MatrixXd diff = spec.post_matrix().entries() - spec.pre_matrix().entries();
  EXPECT_TRUE(diff.isApproxToConstant(std::pow(60.0, -0.25), 1e-15));
  EXPECT_EQ(spec.pre_assignment(), spec.post_assignment());
}

TEST(Scenario, ModelThreeMergesOuterThirds) {
  const auto spec = build_scenario(named("III"));
  EXPECT_EQ(spec.num_communities(), 3);
  EXPECT_EQ(spec.pre_assignment().block_sizes(), (std::vector<int>{20, 20, 20}));
  EXPECT_EQ(spec.post_assignment().block_sizes(), (std::vector<int>{40, 20, 0}));
  EXPECT_DOUBLE_EQ(spec.pre_matrix()(0, 2), 0.6 - std::pow(60.0, -0.05));
  EXPECT_EQ(spec.post_matrix()(2, 2), 0.0);
  EXPECT_TRUE(scenario_notes(named("III")).size() == 1);  // nominal entry < 0

  const auto big = build_scenario(named("III", 500, 20));
  EXPECT_EQ(big.pre_assignment().block_sizes(), (std::vector<int>{167, 166, 167}));
  EXPECT_EQ(scenario_notes(named("III", 500, 20)).size(), 2u);
}

TEST(Scenario, SmallProbabilityModels) {
  auto iv = named("IV");
  iv.delta = 0.75;
  iv.lambda = 0.5;
  const auto a = build_scenario(iv);
  EXPECT_DOUBLE_EQ(a.pre_matrix()(0, 0), std::pow(60.0, -0.5));
  EXPECT_DOUBLE_EQ(a.pre_matrix()(0, 1), std::pow(60.0, -0.5) - std::pow(60.0, -0.75));
  auto v = named("V");
  v.lambda = 0.5;
  const auto b = build_scenario(v);
  EXPECT_DOUBLE_EQ(b.pre_matrix()(0, 0), 2 * std::pow(60.0, -0.5));
  EXPECT_DOUBLE_EQ(b.post_matrix()(0, 1), std::pow(60.0, -0.5) + std::pow(60.0, -0.25));
}

TEST(Scenario, SettingG) {
  const auto spec = build_scenario(named("G", 20, 20));
  EXPECT_EQ(spec.pre_assignment().block_sizes(), (std::vector<int>{9, 11}));
  EXPECT_DOUBLE_EQ(spec.pre_matrix()(0, 0), std::sqrt(0.8));
  EXPECT_DOUBLE_EQ(spec.pre_matrix()(0, 1), 0.0);
  EXPECT_DOUBLE_EQ(spec.post_matrix()(1, 1), std::sqrt(0.8) + 1.0 / std::sqrt(20.0));
  EXPECT_EQ(spec.change_index(), 10);
}

TEST(Scenario, GenericAndCustom) {
  auto c = named("connectivity", 10, 25);
  c.shift = 0.1;
  c.shift_over_sqrt_n = 0.5;
  const auto conn = build_scenario(c);
  EXPECT_DOUBLE_EQ(conn.post_matrix()(0, 1), 0.3 + 0.1 + 0.1);

  auto s = named("split", 12, 10);
  const auto split = build_scenario(s);
  EXPECT_EQ(split.pre_assignment().nonempty_blocks(), 2);
  EXPECT_EQ(split.post_assignment().nonempty_blocks(), 3);

  auto custom = named("custom", 4, 10);
  custom.pre_labels = {1, 1, 2, 2};
  Eigen::MatrixXd b(2, 2);
  b << 0.5, 0.2, 0.2, 0.5;
  custom.pre_matrix = b;
  custom.shift_over_sqrt_n = 1.0;
  const auto spec = build_scenario(custom);
  EXPECT_DOUBLE_EQ(spec.post_matrix()(0, 0), 0.5 + 1.0 / std::sqrt(10.0));
  EXPECT_EQ(spec.post_assignment(), spec.pre_assignment());
}

TEST(Scenario, RejectsBadParameters) {
  EXPECT_THROW(build_scenario(named("VI")), std::invalid_argument);
  auto s = named("I");
  s.delta = -1.0;
  EXPECT_THROW(build_scenario(s), std::invalid_argument);
  s = named("II");
  s.tau = 1.0;
  EXPECT_THROW(build_scenario(s), std::invalid_argument);
  EXPECT_THROW(build_scenario(named("custom")), std::invalid_argument);
}

TEST(Config, ScenariosRoundTripThroughYaml) {
  for (const auto& name : scenario_names()) {
    if (name == "custom") continue;
    auto s = named(name, 30, 40);
    s.delta = 0.1;
    s.lambda = 0.625;
    const auto back = parse_scenario_yaml(to_yaml(s));
    EXPECT_EQ(back, s) << name;
    EXPECT_EQ(build_scenario(back), build_scenario(s)) << name;
  }
  auto custom = named("custom", 3, 10);
  custom.pre_labels = {1, 2, 2};
  custom.post_labels = {2, 2, 1};
  Eigen::MatrixXd b(2, 2);
  b << 0.1 / 3.0, 0.2, 0.2, 0.7;
  custom.pre_matrix = b;
  custom.post_matrix = b;
  EXPECT_EQ(parse_scenario_yaml(to_yaml(custom)), custom);
}

TEST(Config, ModelsRoundTripExactly) {
  auto s = named("I", 12, 60);
  s.delta = 1.0 / 3.0;
  const auto spec = build_scenario(s);
  EXPECT_EQ(parse_dsbm_spec_yaml(to_yaml(spec)), spec);
  const auto g = build_scenario(named("G", 20, 20));
  EXPECT_EQ(parse_dsbm_spec_yaml(to_yaml(g)), g);
}

TEST(Config, RunConfigParsesAndRejectsUnknownKeys) {
  const auto cfg = parse_run_config(R"(
scenario: {name: IV, m: 60, n: 60, delta: 0.75, lambda: 0.5}
methods: [2step, every_point]
reps: 7
seed: 99
threads: 2
grid: {c_star: 0.1}
variant: II
)");
  EXPECT_EQ(cfg.scenario.name, "IV");
  EXPECT_DOUBLE_EQ(cfg.scenario.delta, 0.75);
  EXPECT_EQ(cfg.methods, (std::vector<Method>{Method::kTwoStep, Method::kEveryPoint}));
  EXPECT_EQ(cfg.reps, 7);
  EXPECT_EQ(cfg.seed, 99u);
  EXPECT_EQ(cfg.threads, 2);
  EXPECT_DOUBLE_EQ(*cfg.c_star, 0.1);
  EXPECT_EQ(cfg.variant, ClusterVariant::kLaplacianOfSum);
  const auto again = parse_run_config(to_yaml(cfg));
  EXPECT_EQ(again.scenario, cfg.scenario);
  EXPECT_EQ(again.methods, cfg.methods);
  EXPECT_EQ(again.c_star, cfg.c_star);
  EXPECT_THROW(parse_run_config("repz: 3\n"), std::invalid_argument);
  EXPECT_THROW(parse_run_config("scenario: {name: II, mm: 3}\n"), std::invalid_argument);
  EXPECT_THROW(parse_run_config("reps: [1\n"), std::invalid_argument);
  EXPECT_EQ(parse_run_config("").reps, 100);
}

TEST(Experiment, FrequenciesSumToReplicatesAndSeriesArePaired) {
  auto s = named("II", 20, 20);
  const std::vector<Method> methods = {Method::kKnown, Method::kTwoStep, Method::kEveryPoint};
  const auto report = run_experiment(s, methods, 6, 77);
  ASSERT_EQ(report.methods.size(), 3u);
  for (const auto& m : report.methods) {
    int total = 0;
    for (const auto& [index, count] : m.frequencies) total += count;
    EXPECT_EQ(total, 6);
  }
  const auto spec = build_scenario(s);
  ASSERT_EQ(report.series_digests.size(), 6u);
  for (std::uint64_t r = 0; r < 6; ++r) {
    EXPECT_EQ(report.series_digests[r], sample_dsbm(spec, derive_seed(77, r)).digest());
  }
  EXPECT_EQ(report.tau_index, 10);
  ASSERT_TRUE(report.snr.has_value());
  EXPECT_EQ(report.outcome(Method::kKnown).method, Method::kKnown);
  EXPECT_THROW(report.outcome(Method::kBoundary), std::out_of_range);
}

TEST(Experiment, ReportIsIndependentOfThreadsAndByteIdentical) {
  auto s = named("I", 16, 20);
  s.delta = 0.1;
  const std::vector<Method> methods = {Method::kTwoStep, Method::kEveryPoint};
  ExperimentOptions one;
  ExperimentOptions four;
  four.threads = 4;
  const auto a = run_experiment(s, methods, 5, 3, one);
  const auto b = run_experiment(s, methods, 5, 3, four);
  std::ostringstream ca, cb;
  write_report_csv(ca, {a});
  write_report_csv(cb, {b});
  EXPECT_EQ(ca.str(), cb.str());
  EXPECT_EQ(a.series_digests, b.series_digests);

  const auto c = run_experiment(s, methods, 1, 3);
  const auto d = run_experiment(s, methods, 1, 3);
  std::ostringstream cc, cd;
  write_report_csv(cc, {c});
  write_report_csv(cd, {d});
  EXPECT_EQ(cc.str(), cd.str());
}

TEST(Experiment, FrequencyStringsSortByCountThenIndex) {
  MethodOutcome m;
  m.frequencies = {{28, 10}, {30, 83}, {31, 7}, {29, 7}};
  EXPECT_EQ(m.frequency_string(), "30(83) 28(10) 29(7) 31(7)");
  EXPECT_EQ(m.count_at(30), 83);
  EXPECT_EQ(m.count_at(12), 0);
}

TEST(Experiment, EstimatorFailuresAreRecorded) {
  // Label 4 on three nodes: K = 4 exceeds the node count.
  auto s = named("custom", 3, 6);
  s.pre_labels = {1, 2, 4};
  s.pre_matrix = Eigen::MatrixXd::Constant(4, 4, 0.2);
  s.shift = 0.0;
  const auto report = run_experiment(s, {Method::kTwoStep}, 3, 1);
  const auto& out = report.outcome(Method::kTwoStep);
  EXPECT_EQ(out.failures, 3);
  EXPECT_EQ(out.count_at(0), 3);
}

TEST(Trajectory, EmptyMethodListGivesHeaderOnly) {
  const auto spec = build_scenario(named("II", 10, 10));
  const auto series = sample_dsbm(spec, 1);
  std::ostringstream csv;
  emit_trajectory(csv, series, TrajectoryRequest{});
  EXPECT_EQ(csv.str(), "method,t_break,b,criterion\n");
}

TEST(Trajectory, DeterministicTwoRegimeSeriesIsVShaped) {
  // Empty graphs, then complete graphs: the criterion is 0 at the break and
  // grows on both sides.
  const int m = 6;
  const int n = 12;
  std::vector<AdjacencyMatrix> snaps;
  for (int t = 1; t <= n; ++t) {
    AdjacencyMatrix a(m);
    if (t > 5) {
      for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) a.set(i, j, true);
      }
    }
    snaps.push_back(std::move(a));
  }
  const AdjacencySeries series(std::move(snaps), 5);
  TrajectoryRequest req;
  req.methods = {Method::kTwoStep};
  const auto svg = std::filesystem::temp_directory_path() / "dsbm_traj.svg";
  std::ostringstream csv;
  emit_trajectory(csv, series, req, svg);
  std::istringstream in(csv.str());
  std::string line;
  std::getline(in, line);
  std::vector<double> values;
  while (std::getline(in, line)) values.push_back(std::stod(line.substr(line.rfind(',') + 1)));
  ASSERT_EQ(values.size(), 11u);
  EXPECT_EQ(values[4], 0.0);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_GT(values[i], values[i + 1]);
  for (std::size_t i = 4; i + 1 < values.size(); ++i) EXPECT_LT(values[i], values[i + 1]);
  std::ifstream plot(svg);
  std::string first;
  std::getline(plot, first);
  EXPECT_EQ(first.rfind("<svg", 0), 0u);
  std::filesystem::remove(svg);
}

TEST(Trajectory, ModelTwoTwoStepMinimumIsAtTheBreak) {
  const auto spec = build_scenario(named("II"));
  const auto series = sample_dsbm(spec, 20240601);
  const auto fit = estimate_2step(series, 2, SearchGrid::full(60), 1);
  EXPECT_NEAR(fit.tau_index, 30, 1);
}

}  // namespace
}  // namespace dsbm
