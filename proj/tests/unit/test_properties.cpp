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
#include <random>

#include "dsbm/bench/scenario.hpp"
#include "dsbm/cluster/misclassification.hpp"
#include "dsbm/cpd/criterion.hpp"
#include "dsbm/cpd/estimators.hpp"
#include "dsbm/netcore/sampler.hpp"
#include "support/oracles.hpp"

namespace dsbm {
namespace {

TEST(Property, SampledSnapshotsAreSymmetricLoopFreeAndBinary) {
  std::mt19937_64 rng(5);
  for (int draw = 0; draw < 1000; ++draw) {
    const int m = 2 + static_cast<int>(rng() % 9);
    const int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(m));
    const auto z = oracle::random_assignment(rng, m, k);
    const auto a = sample_sbm(z, BlockMatrix(oracle::random_block(rng, k)), rng()).dense();
    ASSERT_TRUE(a == a.transpose());
    ASSERT_TRUE((a.diagonal().array() == 0).all());
    ASSERT_TRUE(((a.array() == 0) || (a.array() == 1)).all());
  }
}

TEST(Property, MisclassificationVanishesOnRelabeledTruth) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 4 + static_cast<int>(rng() % 10);
    const int k = 2 + static_cast<int>(rng() % 3);
    const auto truth = oracle::random_assignment(rng, m, k);
    const auto pi = oracle::random_permutation(rng, k);
    EXPECT_EQ(misclassification(truth, truth.relabeled(pi)).rate, 0.0);
  }
}

TEST(Property, MisclassificationIsScaleFreeInTheNodeCount) {
  // The divisor is the size of the matched true block, so the rate is not
  // invariant to renaming estimated labels when block sizes differ; it is
  // invariant to duplicating every node.
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 3 + static_cast<int>(rng() % 8);
    const int k = 2 + static_cast<int>(rng() % 3);
    const auto truth = oracle::random_assignment(rng, m, k);
    const auto est = oracle::random_assignment(rng, m, k);
    std::vector<int> t2(truth.labels()), e2(est.labels());
    t2.insert(t2.end(), truth.labels().begin(), truth.labels().end());
    e2.insert(e2.end(), est.labels().begin(), est.labels().end());
    const double base = misclassification(truth, est).rate;
    const double doubled =
        misclassification(CommunityAssignment(t2, k), CommunityAssignment(e2, k)).rate;
    if (std::isinf(base)) {
      EXPECT_TRUE(std::isinf(doubled));
    } else {
      EXPECT_NEAR(doubled, base, 1e-12);
    }
  }
  EXPECT_DOUBLE_EQ(misclassification(CommunityAssignment::parse("1 1 2 2"),
                                     CommunityAssignment::parse("1 2 2 2")).rate,
                   0.5);
}

TEST(Property, SingletonBlocksReduceToTheEdgewiseCriterion) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto series = oracle::random_series(rng, 6, 9);
    const auto ones = CommunityAssignment::singletons(6);
    for (int t = 1; t < 9; ++t) {
      EXPECT_NEAR(dsbm_criterion(series, t, ones, ones), er_criterion(series, t),
                  1e-9 * (1.0 + er_criterion(series, t)));
    }
  }
}

class Equivariance : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(Equivariance, RelabelingNodesLeavesTheBreakUnchanged) {
  std::mt19937_64 rng(GetParam());
  ScenarioSpec s;
  s.name = "connectivity";
  s.m = 10;
  s.n = 30;
  s.within = 0.7;
  s.between = 0.1;
  s.shift = 0.25;
  const auto spec = build_scenario(s);
  const auto series = sample_dsbm(spec, GetParam());
  const auto sigma = oracle::random_permutation(rng, 10);
  const auto moved = series.permuted_nodes(sigma);
  const auto grid = SearchGrid::full(30);

  const auto er = er_criterion_scan(series, grid);
  const auto er_moved = er_criterion_scan(moved, grid);
  for (std::size_t i = 0; i < er.size(); ++i) EXPECT_NEAR(er[i], er_moved[i], 1e-9);

  const auto known = estimate_known(series, spec.pre_assignment(), spec.post_assignment(), grid);
  const auto known_moved =
      estimate_known(moved, spec.pre_assignment().permuted_nodes(sigma),
                     spec.post_assignment().permuted_nodes(sigma), grid);
  EXPECT_EQ(known.tau_index, known_moved.tau_index);
  for (std::size_t i = 0; i < known.trajectory.size(); ++i) {
    EXPECT_NEAR(known.trajectory[i], known_moved.trajectory[i], 1e-9);
  }

  // Clustering sees the same graph up to node names, so the recovered
  // partitions agree after undoing the relabeling.
  const auto fit = estimate_2step(series, 2, grid, 1);
  const auto fit_moved = estimate_2step(moved, 2, grid, 1);
  EXPECT_EQ(fit.tau_index, fit_moved.tau_index);
  EXPECT_EQ(misclassification(fit.z_hat.permuted_nodes(sigma), fit_moved.z_hat).rate, 0.0);
}

INSTANTIATE_TEST_SUITE_P(Seeds, Equivariance, ::testing::Values(1u, 2u, 3u, 4u, 5u));

TEST(Property, ReversingTimeMirrorsTheEdgewiseScan) {
  std::mt19937_64 rng(8);
  const auto series = oracle::random_series(rng, 7, 12);
  const auto back = series.reversed();
  for (int t = 1; t < 12; ++t) {
    EXPECT_NEAR(er_criterion(series, t), er_criterion(back, 12 - t), 1e-9);
  }
}

}  // namespace
}  // namespace dsbm
