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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "dsbm/cpd/estimators.hpp"
#include "dsbm/error.hpp"
#include "dsbm/infer/bootstrap.hpp"
#include "dsbm/infer/limit_law.hpp"
#include "dsbm/infer/regime.hpp"
#include "dsbm/infer/snr.hpp"
#include "dsbm/netcore/sampler.hpp"
#include "support/oracles.hpp"

namespace dsbm {
namespace {

DsbmSpec halves_spec(int m, int n, const Eigen::MatrixXd& lam, const Eigen::MatrixXd& del) {
  std::vector<int> sizes = {m / 2, m - m / 2};
  const auto z = CommunityAssignment::contiguous(sizes);
  return {z, BlockMatrix::nominal(lam), z, BlockMatrix::nominal(del), 0.5, n};
}

Eigen::MatrixXd two_by_two(double a, double b) {
  Eigen::MatrixXd m(2, 2);
  m << a, b, b, a;
  return m;
}

TEST(Snr, ChangeInConnectivityReproducesTheReportedRatios) {
  const double shift = std::pow(60.0, -0.25);
  const auto lam = two_by_two(0.6, 0.3);
  const auto spec = halves_spec(60, 60, lam, Eigen::MatrixXd(lam.array() + shift));
  const auto r = snr_report(spec);
  // Reference values.
  EXPECT_NEAR(r.gap, 464.758, 1e-3);
  EXPECT_NEAR(r.snr_er, 7.745967, 1e-3);
  EXPECT_NEAR(r.snr_dsbm, 6971.37, 1e-2);
  EXPECT_NEAR(r.a1_first, 1.48, 0.05 * 1.48);
  EXPECT_NEAR(r.a1_second, 5.738, 0.05 * 5.738);
  // Hand derivation: Ed_z(Lambda) with latent diagonal has eigenvalues
  // 30 (0.6 +- 0.3), so nu = 9.
  EXPECT_NEAR(r.nu_m, 9.0, 1e-10);
  EXPECT_NEAR(r.a1_star, 60.0 / (std::sqrt(60.0) * 81.0), 1e-12);
}

TEST(Snr, AgreesWithReducedOracles) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const int k = 1 + trial % 3;
    const auto z = oracle::random_assignment(rng, 12, k);
    const auto w = oracle::random_assignment(rng, 12, k);
    const auto lam = oracle::random_block(rng, k);
    const auto del = oracle::random_block(rng, k);
    const auto r = snr_report(z, BlockMatrix(lam), w, BlockMatrix(del), 30);
    const double gap = oracle::pair_gap(z, lam, w, del, true);
    EXPECT_NEAR(r.gap, gap, 1e-10);
    EXPECT_NEAR(r.snr_er, 30.0 / 144.0 * gap, 1e-10);
    EXPECT_NEAR(r.snr_dsbm, 30.0 / (k * k) * gap, 1e-9);
    const double nu = std::min(oracle::nu_reduced(z, lam), oracle::nu_reduced(w, del));
    EXPECT_NEAR(r.nu_m, nu, 1e-8 * std::max(1.0, nu));
  }
}

TEST(Snr, ZeroModelsHaveNoNu) {
  const auto zero = Eigen::MatrixXd::Zero(2, 2);
  EXPECT_THROW(snr_report(halves_spec(6, 10, zero, zero)), NuUndefined);
  EXPECT_EQ(smallest_nonzero_singular_value(Eigen::MatrixXd::Zero(3, 3)), 0.0);
}

TEST(LargeShiftPairs, CountsOrderedPairsWithALargeShift) {
  // Reallocation: halves -> alternating with equal matrices. Only pairs whose
  // block relation flips see a shift, |0.6 - 0.1| = 0.5.
  const int m = 8;
  std::vector<int> pre(m), post(m);
  for (int i = 0; i < m; ++i) {
    pre[static_cast<std::size_t>(i)] = i < m / 2 ? 1 : 2;
    post[static_cast<std::size_t>(i)] = i % 2 ? 2 : 1;
  }
  const auto b = two_by_two(0.6, 0.1);
  const DsbmSpec spec(CommunityAssignment::from_one_based(pre, 2), BlockMatrix(b),
                      CommunityAssignment::from_one_based(post, 2), BlockMatrix(b),
                      0.5, 16);
  std::int64_t flips = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i != j && (pre[static_cast<std::size_t>(i)] == pre[static_cast<std::size_t>(j)]) !=
                        (post[static_cast<std::size_t>(i)] == post[static_cast<std::size_t>(j)])) {
        ++flips;
      }
    }
  }
  // cutoff 0.5 * 16^-1/4 = 0.25, threshold 64 * 16^-1/4 = 32
  const auto r = large_shift_pair_check(spec, 0.5, 0.5, 0.25);
  EXPECT_EQ(r.count, flips);
  EXPECT_EQ(r.count, 32);
  EXPECT_NEAR(r.threshold, 32.0, 1e-12);
  EXPECT_TRUE(r.holds);
  EXPECT_FALSE(large_shift_pair_check(spec, 0.5, 0.5, 0.0).holds);  // threshold 64
  EXPECT_EQ(large_shift_pair_check(spec, 10.0, 0.5, 0.25).count, 0);
  EXPECT_THROW(large_shift_pair_check(spec, 1.0, 0.5, 0.6), std::invalid_argument);
}

TEST(Regime, DiagnosticsMatchPairEnumeration) {
  const auto lam = two_by_two(0.6, 0.3);
  Eigen::MatrixXd del = lam;
  del(0, 0) = 0.9;  // large shift inside block 1
  del(0, 1) = del(1, 0) = 0.32;  // small shift between blocks
  const auto spec = halves_spec(6, 100, lam, del);
  RegimeOptions opts;
  opts.theta = 0.1;
  const auto d = regime_diagnostics(spec, opts);
  // Ordered off-diagonal pairs: block 1 has 3*2 = 6, between blocks 2*9 = 18.
  EXPECT_NEAR(d.gap, 6 * 0.09 + 18 * 0.0004, 1e-12);
  // Small-shift set: 18 between-block pairs plus 6 unshifted pairs in block 2.
  EXPECT_EQ(d.k_set_size, 24);
  EXPECT_NEAR(d.c1_sq, 18 * 0.0004, 1e-12);
  EXPECT_NEAR(d.gamma_tilde_sq, 18 * 0.0004 * 0.21, 1e-12);
  EXPECT_NEAR(d.gamma2, (6 * 0.09 * 0.24 + 18 * 0.0004 * 0.21) / d.gap, 1e-12);
  ASSERT_EQ(d.k0_atoms.size(), 1u);
  EXPECT_EQ(d.k0_atoms[0].pairs, 3);  // unordered pairs within block 1
  EXPECT_DOUBLE_EQ(d.k0_atoms[0].weight, 2.0);
  EXPECT_DOUBLE_EQ(d.k0_atoms[0].a2, 0.9);
  EXPECT_EQ(d.regime, Regime::kIII);  // gap = 0.5472
}

TEST(Regime, ClassifiesByGapAndRejectsNoChange) {
  const auto lam = two_by_two(0.6, 0.3);
  EXPECT_THROW(regime_diagnostics(halves_spec(6, 10, lam, lam)), GammaUndefined);
  EXPECT_EQ(regime_diagnostics(halves_spec(60, 60, lam, Eigen::MatrixXd(lam.array() + 0.2)))
                .regime,
            Regime::kI);
  EXPECT_EQ(regime_diagnostics(halves_spec(6, 60, lam, Eigen::MatrixXd(lam.array() + 0.01)))
                .regime,
            Regime::kII);
}

ChangePointFit fitted(int m, int n, double shift, std::uint64_t seed) {
  const auto lam = two_by_two(0.6, 0.3);
  const auto spec = halves_spec(m, n, lam, Eigen::MatrixXd(lam.array() + shift));
  const auto series = sample_dsbm(spec, seed);
  return estimate_2step(series, 2, SearchGrid::full(n), seed);
}

TEST(Bootstrap, IsDeterministicAndThreadIndependent) {
  const auto fit = fitted(12, 30, 0.15, 3);
  const auto a = adaptive_bootstrap(fit, 40, 9, {0.5, 0.9}, 1);
  const auto b = adaptive_bootstrap(fit, 40, 9, {0.5, 0.9}, 4);
  EXPECT_EQ(a.h_samples, b.h_samples);
  EXPECT_EQ(a.h_samples.size(), 40u);
  EXPECT_EQ(a.h_min, 1 - fit.tau_index);
  EXPECT_EQ(a.h_max, 29 - fit.tau_index);
  for (int h : a.h_samples) {
    EXPECT_GE(h, a.h_min);
    EXPECT_LE(h, a.h_max);
  }
  EXPECT_NE(a.h_samples, adaptive_bootstrap(fit, 40, 10, {0.5}).h_samples);
}

TEST(Bootstrap, QuantilesAreType1AndIntervalsAreCentral) {
  BootstrapResult r;
  r.tau_index = 10;
  r.num_times = 20;
  r.h_samples = {3, -2, 0, 0, 1, -1, 0, 2, 0, -3};
  std::vector<int> sorted = r.h_samples;
  std::sort(sorted.begin(), sorted.end());
  for (double p : {0.0, 0.05, 0.1, 0.25, 0.5, 0.77, 0.9, 1.0}) {
    const auto idx = static_cast<std::size_t>(std::max(0.0, std::ceil(p * 10) - 1));
    EXPECT_EQ(r.quantile(p), sorted[idx]) << p;
  }
  const auto [lo, hi] = r.interval(0.2);
  EXPECT_DOUBLE_EQ(lo, 0.5 + r.quantile(0.1) / 20.0);
  EXPECT_DOUBLE_EQ(hi, 0.5 + r.quantile(0.9) / 20.0);
  EXPECT_THROW(r.quantile(1.5), std::invalid_argument);
}

TEST(Bootstrap, CsvRowsCarryTheCentralInterval) {
  const auto fit = fitted(10, 20, 0.2, 4);
  const auto r = adaptive_bootstrap(fit, 30, 2, {0.9});
  ASSERT_EQ(r.quantiles.size(), 1u);
  const auto& q = r.quantiles[0];
  EXPECT_EQ(q.h_quantile, r.quantile(0.9));
  EXPECT_DOUBLE_EQ(q.tau_lo, r.interval(0.1).first);
  EXPECT_DOUBLE_EQ(q.tau_hi, r.interval(0.1).second);
  std::ostringstream out;
  write_bootstrap_quantiles_csv(out, r);
  EXPECT_EQ(out.str().substr(0, 30), "level,h_quantile,tau_lo,tau_hi");
  std::ostringstream samples;
  write_bootstrap_samples_csv(samples, r);
  const std::string text = samples.str();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 31);
}

TEST(Bootstrap, RejectsBreaksOutsideTheGrid) {
  auto fit = fitted(10, 20, 0.2, 5);
  fit.grid = SearchGrid::range(20, 15, 18);
  fit.tau_index = 10;
  EXPECT_THROW(adaptive_bootstrap(fit, 5, 1, {0.5}), BoundaryError);
}

TEST(LimitLaw, RegimeIIIWithoutNoiseSitsAtZero) {
  LimitLawParams p;
  p.c1_sq = 1.0;
  p.gamma_tilde = 0.0;
  const auto draws = simulate_limit_law(LimitRegime::kIII, p, 20, 1);
  for (double h : draws) EXPECT_EQ(h, 0.0);
}

TEST(LimitLaw, RegimeIIIAtomsOnlyFavourZeroOnAverage) {
  // Only the atom term: a strongly shifted class of pairs.
  LimitLawParams p;
  p.c1_sq = 0.0;
  p.gamma_tilde = 0.0;
  p.atoms = {{0.2, 0.8, 5, 2.0}};
  p.walk_half_width = 30;
  const auto draws = simulate_limit_law(LimitRegime::kIII, p, 2000, 2);
  const auto zeros = std::count(draws.begin(), draws.end(), 0.0);
  EXPECT_GT(zeros, 1000);
}

TEST(LimitLaw, RegimeIIScalesAndIsThreadIndependent) {
  LimitLawParams p;
  p.half_width = 10;
  p.step = 0.05;
  const auto a = simulate_limit_law(LimitRegime::kII, p, 200, 3, 1);
  const auto b = simulate_limit_law(LimitRegime::kII, p, 200, 3, 4);
  EXPECT_EQ(a, b);
  p.gamma2 = 2.5;
  const auto c = simulate_limit_law(LimitRegime::kII, p, 200, 3, 1);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_DOUBLE_EQ(c[i], 2.5 * a[i]);
}

}  // namespace
}  // namespace dsbm
