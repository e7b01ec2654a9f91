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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dsbm/cluster/kmeans.hpp"
#include "dsbm/cluster/segment.hpp"
#include "dsbm/cpd/grid.hpp"
#include "dsbm/netcore/series.hpp"
#include "dsbm/netcore/types.hpp"

namespace dsbm {

enum class Method {
  kKnown,         // oracle communities
  kEveryPoint,    // re-cluster both sides at every candidate break
  kTwoStep,       // edge-wise scan, then cluster once
  kBoundary,      // cluster the outermost segments once
};

std::string_view to_string(Method method);
Method parse_method(std::string_view name);

struct ChangePointFit {
  Method method = Method::kTwoStep;
  int num_times = 0;
  int tau_index = 0;
  double tau_hat = 0.0;
  SearchGrid grid = SearchGrid::full(2);
  // Criterion per grid point t_min..t_max; NaN where it was not evaluated.
  std::vector<double> trajectory;
  CommunityAssignment z_hat;
  CommunityAssignment w_hat;
  BlockMatrix lambda_hat;
  BlockMatrix delta_hat;
  std::vector<std::string> warnings;

  int num_communities() const noexcept { return z_hat.num_communities(); }
};

struct EstimatorOptions {
  int threads = 1;
  ClusterVariant variant = ClusterVariant::kAdjacencySum;
  KMeansOptions kmeans;
};

// Smallest t attaining the minimum of the finite trajectory entries.
// Throws std::runtime_error when no entry is finite.
int argmin_index(const std::vector<double>& trajectory, int t_min);

ChangePointFit estimate_known(const AdjacencySeries& series,
                              const CommunityAssignment& z,
                              const CommunityAssignment& w,
                              const SearchGrid& grid);

ChangePointFit estimate_2step(const AdjacencySeries& series, int k,
                              const SearchGrid& grid, std::uint64_t seed,
                              const EstimatorOptions& options = {});

// Grid points where clustering degenerates are skipped with a warning.
ChangePointFit estimate_every_time_point(const AdjacencySeries& series, int k,
                                         const SearchGrid& grid,
                                         std::uint64_t seed,
                                         const EstimatorOptions& options = {});

// Communities from [1, ceil(n c*)] and [floor(n (1 - c*)) + 1, n], or from
// the first and last snapshot when the grid has no c*.
ChangePointFit estimate_boundary_variant(const AdjacencySeries& series, int k,
                                         const SearchGrid& grid,
                                         std::uint64_t seed,
                                         const EstimatorOptions& options = {});

// Segments used by estimate_boundary_variant: {pre_hi, post_lo}.
std::pair<int, int> boundary_segments(const SearchGrid& grid);

// CSV "t_break,b,criterion", one row per grid point.
void write_trajectory_csv(std::ostream& out, const ChangePointFit& fit);

struct FitTruth {
  CommunityAssignment z;
  CommunityAssignment w;
};

// CSV "method,tau_index,tau_hat,K,misclass_pre,misclass_post"; the
// misclassification columns are empty without truth.
void write_fit_summary_header(std::ostream& out);
void write_fit_summary_row(std::ostream& out, const ChangePointFit& fit,
                           const std::optional<FitTruth>& truth = std::nullopt);

}  // namespace dsbm
