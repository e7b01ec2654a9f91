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
#include <set>
#include <sstream>

#include "dsbm/netcore/sampler.hpp"
#include "dsbm/netcore/series.hpp"
#include "dsbm/netcore/series_io.hpp"
#include "dsbm/netcore/types.hpp"
#include "dsbm/rng.hpp"
#include "support/oracles.hpp"

namespace dsbm {
namespace {

DsbmSpec two_block_spec(int m, int n, double tau, double shift) {
  std::vector<int> half(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) half[static_cast<std::size_t>(i)] = i < m / 2 ? 1 : 2;
  Eigen::MatrixXd lam(2, 2);
  lam << 0.6, 0.3, 0.3, 0.6;
  Eigen::MatrixXd del = lam.array() + shift;
  return {CommunityAssignment::from_one_based(half, 2), BlockMatrix(lam),
          CommunityAssignment::from_one_based(half, 2), BlockMatrix(del), tau, n};
}

TEST(PairIndex, EnumeratesUpperTriangleInRowOrder) {
  for (int m : {2, 3, 7, 12}) {
    std::size_t expected = 0;
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) EXPECT_EQ(pair_index(i, j, m), expected++);
    }
    EXPECT_EQ(pair_count(m), expected);
  }
}

TEST(CommunityAssignment, RejectsOutOfRangeLabels) {
  EXPECT_THROW(CommunityAssignment({0, 2}, 2), std::invalid_argument);
  EXPECT_THROW(CommunityAssignment({-1, 0}, 2), std::invalid_argument);
  EXPECT_THROW(CommunityAssignment::parse("1 0 2"), std::invalid_argument);
}

TEST(CommunityAssignment, ParseAndPrintAreInverse) {
  const auto a = CommunityAssignment::parse("1 2 2 3 1");
  EXPECT_EQ(a.num_communities(), 3);
  EXPECT_EQ(a.block_size(1), 2);
  EXPECT_EQ(a.to_string(), "1 2 2 3 1");
}

TEST(CommunityAssignment, PermutationsMoveLabelsAndNodes) {
  const auto a = CommunityAssignment::parse("1 1 2");
  const std::vector<int> sigma = {2, 0, 1};
  const auto moved = a.permuted_nodes(sigma);
  EXPECT_EQ(moved.to_string(), "1 2 1");
  const std::vector<int> pi = {1, 0};
  EXPECT_EQ(a.relabeled(pi).to_string(), "2 2 1");
}

TEST(BlockMatrix, ValidatesSymmetryAndRange) {
  Eigen::MatrixXd asym(2, 2);
  asym << 0.1, 0.2, 0.3, 0.1;
  EXPECT_THROW(BlockMatrix{asym}, std::invalid_argument);
  Eigen::MatrixXd neg(2, 2);
  neg << 0.5, -0.1, -0.1, 0.5;
  EXPECT_THROW(BlockMatrix{neg}, std::invalid_argument);
  const auto nominal = BlockMatrix::nominal(neg);
  EXPECT_FALSE(nominal.is_probability());
  EXPECT_TRUE(nominal.clipped().is_probability());
}

TEST(EdgeProbMatrix, ExpandsBlocksWithZeroDiagonal) {
  const auto z = CommunityAssignment::parse("1 1 2");
  Eigen::MatrixXd b(2, 2);
  b << 0.6, 0.3, 0.3, 0.9;
  const EdgeProbMatrix p(z, BlockMatrix(b));
  EXPECT_DOUBLE_EQ(p.entries()(0, 1), 0.6);
  EXPECT_DOUBLE_EQ(p.entries()(0, 2), 0.3);
  EXPECT_DOUBLE_EQ(p.entries()(2, 2), 0.0);
  EXPECT_DOUBLE_EQ(p.latent_diagonal()(2), 0.9);
}

TEST(EdgeProbMatrix, FrobeniusGapMatchesPairEnumeration) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto z = oracle::random_assignment(rng, 9, 3);
    const auto w = oracle::random_assignment(rng, 9, 3);
    const auto lam = oracle::random_block(rng, 3);
    const auto del = oracle::random_block(rng, 3);
    const EdgeProbMatrix p(z, BlockMatrix(lam));
    const EdgeProbMatrix q(w, BlockMatrix(del));
    EXPECT_NEAR(frobenius_gap(p, q, true), oracle::pair_gap(z, lam, w, del, true), 1e-12);
    EXPECT_NEAR(frobenius_gap(p, q, false), oracle::pair_gap(z, lam, w, del, false), 1e-12);
  }
}

TEST(DsbmSpec, ChangeIndexIsFloorOfNTau) {
  EXPECT_EQ(two_block_spec(10, 60, 0.5, 0.1).change_index(), 30);
  EXPECT_EQ(two_block_spec(10, 20, 0.33, 0.1).change_index(), 6);
  // 100 * 0.29 is 28.999999999999996 in binary; the intended break is 29.
  EXPECT_EQ(two_block_spec(10, 100, 0.29, 0.1).change_index(), 29);
  EXPECT_THROW(two_block_spec(10, 10, 0.05, 0.1), std::invalid_argument);
  EXPECT_THROW(two_block_spec(10, 10, 1.0, 0.1), std::invalid_argument);
}

TEST(DsbmSpec, PadsUnequalCommunityCounts) {
  const auto z = CommunityAssignment::parse("1 2 3 3");
  const auto w = CommunityAssignment::parse("1 2 2 1");
  const DsbmSpec spec(z, BlockMatrix::constant(3, 0.5), w, BlockMatrix::constant(2, 0.4),
                      0.5, 10);
  EXPECT_EQ(spec.num_communities(), 3);
  EXPECT_EQ(spec.post_matrix().size(), 3);
  EXPECT_EQ(spec.post_assignment().block_size(2), 0);
}

TEST(Sampler, IsDeterministicAndMatchesTheDocumentedStream) {
  const auto z = CommunityAssignment::parse("1 1 2 2 2");
  Eigen::MatrixXd b(2, 2);
  b << 0.7, 0.2, 0.2, 0.5;
  const auto a = sample_sbm(z, BlockMatrix(b), 99);
  EXPECT_EQ(a, sample_sbm(z, BlockMatrix(b), 99));
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      const bool edge = to_unit(stream_at(99, pair_index(i, j, 5))) < b(z[i], z[j]);
      EXPECT_EQ(a(i, j), edge ? 1 : 0);
    }
  }
}

TEST(Sampler, EdgeFrequenciesMatchBlockProbabilities) {
  const auto spec = two_block_spec(40, 400, 0.5, 0.2);
  const auto series = sample_dsbm(spec, 3);
  // Pair (0, 1): same block, 0.6 before, 0.8 after. Pair (0, 39): 0.3 -> 0.5.
  const double pre_within = series.prefix_count(200, 0, 1) / 200.0;
  const double post_between =
      (series.prefix_count(400, 0, 39) - series.prefix_count(200, 0, 39)) / 200.0;
  // Four binomial standard errors.
  EXPECT_NEAR(pre_within, 0.6, 4 * std::sqrt(0.24 / 200));
  EXPECT_NEAR(post_between, 0.5, 4 * std::sqrt(0.25 / 200));
  // Pooled over all within-block pairs the estimate is much tighter.
  double within = 0.0;
  int pairs = 0;
  for (int i = 0; i < 20; ++i) {
    for (int j = i + 1; j < 20; ++j, ++pairs) within += series.prefix_count(200, i, j);
  }
  EXPECT_NEAR(within / (pairs * 200.0), 0.6, 0.01);
}

TEST(Sampler, ClampsNominalProbabilities) {
  const auto z = CommunityAssignment::parse("1 1 2 2");
  Eigen::MatrixXd b(2, 2);
  b << 1.3, -0.2, -0.2, 1.0;
  const auto a = sample_sbm(z, BlockMatrix::nominal(b), 1);
  EXPECT_EQ(a(0, 1), 1);
  EXPECT_EQ(a(2, 3), 1);
  EXPECT_EQ(a(0, 2), 0);
  EXPECT_EQ(a(1, 3), 0);
}

TEST(Sampler, SeriesDoesNotDependOnThreads) {
  const auto spec = two_block_spec(12, 30, 0.4, 0.2);
  EXPECT_EQ(sample_dsbm(spec, 8, 1).digest(), sample_dsbm(spec, 8, 4).digest());
  EXPECT_NE(sample_dsbm(spec, 8).digest(), sample_dsbm(spec, 9).digest());
  EXPECT_EQ(sample_dsbm(spec, 8).change_index(), 12);
}

TEST(Series, PrefixAndSegmentSumsMatchDirectSums) {
  std::mt19937_64 rng(11);
  const auto series = oracle::random_series(rng, 7, 9);
  const auto dense = oracle::dense_snapshots(series);
  for (int lo = 1; lo <= 9; ++lo) {
    for (int hi = lo; hi <= 9; ++hi) {
      Eigen::MatrixXd direct = Eigen::MatrixXd::Zero(7, 7);
      for (int t = lo; t <= hi; ++t) direct += dense[static_cast<std::size_t>(t - 1)].cast<double>();
      EXPECT_EQ(series.segment_sum(lo, hi), direct);
    }
  }
  std::int64_t total = 0;
  for (const auto& a : dense) total += a.sum() / 2;
  EXPECT_EQ(series.total_edges(), total);
  EXPECT_THROW(series.segment_sum(0, 3), std::invalid_argument);
  EXPECT_THROW(series.segment_sum(4, 3), std::invalid_argument);
}

TEST(Series, RejectsMalformedSnapshots) {
  Eigen::MatrixXi bad = Eigen::MatrixXi::Zero(3, 3);
  bad(0, 1) = 1;
  EXPECT_THROW(AdjacencyMatrix::from_dense(bad), std::invalid_argument);
  bad(1, 0) = 1;
  bad(2, 2) = 1;
  EXPECT_THROW(AdjacencyMatrix::from_dense(bad), std::invalid_argument);
  std::vector<AdjacencyMatrix> mixed = {AdjacencyMatrix(3), AdjacencyMatrix(4)};
  EXPECT_THROW(AdjacencySeries(mixed, 0), std::invalid_argument);
}

TEST(Series, ReversalAndNodePermutation) {
  std::mt19937_64 rng(2);
  const auto base = oracle::random_series(rng, 6, 8);
  const AdjacencySeries series(base.snapshots(), 3);
  const auto rev = series.reversed();
  EXPECT_EQ(rev.change_index(), 5);
  EXPECT_EQ(rev.at(1), series.at(8));
  EXPECT_EQ(rev.reversed().digest(), series.digest());

  const std::vector<int> sigma = {3, 0, 5, 1, 4, 2};
  const auto moved = series.permuted_nodes(sigma);
  for (int t = 1; t <= 8; ++t) {
    for (int i = 0; i < 6; ++i) {
      for (int j = 0; j < 6; ++j) {
        EXPECT_EQ(moved.at(t)(sigma[static_cast<std::size_t>(i)],
                              sigma[static_cast<std::size_t>(j)]),
                  series.at(t)(i, j));
      }
    }
  }
}

class SeriesIo : public ::testing::TestWithParam<SeriesFormat> {};

TEST_P(SeriesIo, RoundTripsThroughFiles) {
  const auto spec = two_block_spec(11, 13, 0.5, 0.2);
  const auto series = sample_dsbm(spec, 21);
  const auto path = std::filesystem::temp_directory_path() /
                    (GetParam() == SeriesFormat::kBinary ? "dsbm_io.bin" : "dsbm_io.txt");
  save_series(path, series, GetParam());
  const auto back = load_series(path);
  EXPECT_EQ(back.digest(), series.digest());
  EXPECT_EQ(back.change_index(), series.change_index());
  std::filesystem::remove(path);
}

INSTANTIATE_TEST_SUITE_P(Formats, SeriesIo,
                         ::testing::Values(SeriesFormat::kText, SeriesFormat::kBinary));

TEST(SeriesIo, ReportsMalformedText) {
  std::istringstream short_row("3 1 0\n010\n10\n");
  EXPECT_THROW(read_series_text(short_row), std::runtime_error);
  std::istringstream bad_char("2 1 0\n0x\nx0\n");
  EXPECT_THROW(read_series_text(bad_char), std::runtime_error);
  std::istringstream truncated(std::string("DSBM1\x05\x00\x00\x00", 9));
  EXPECT_THROW(read_series_binary(truncated), std::runtime_error);
}

TEST(Rng, DerivedSeedsAreDistinctAndStreamsAreRandomAccess) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t r = 0; r < 1000; ++r) seen.insert(derive_seed(42, r));
  EXPECT_EQ(seen.size(), 1000u);
  CounterRng rng(7);
  for (std::uint64_t i = 0; i < 10; ++i) EXPECT_EQ(rng(), stream_at(7, i));
  double mean = 0.0;
  for (std::uint64_t i = 0; i < 100000; ++i) mean += to_unit(stream_at(3, i));
  EXPECT_NEAR(mean / 100000, 0.5, 0.005);
}

}  // namespace
}  // namespace dsbm
