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
#include <string>
#include <string_view>
#include <vector>

#include "dsbm/cluster/kmeans.hpp"
#include "dsbm/netcore/series.hpp"
#include "dsbm/netcore/types.hpp"

namespace dsbm {

enum class ClusterVariant {
  kAdjacencySum,     // I:   eigenvectors of sum_t A_t
  kLaplacianOfSum,   // II:  D^{-1/2} S D^{-1/2} with S = sum_t A_t
  kSumOfLaplacians,  // III: mean over t of D_t^{-1/2} A_t D_t^{-1/2}
};

std::string_view to_string(ClusterVariant variant);
ClusterVariant parse_cluster_variant(std::string_view name);

// Added to every degree before D^{-1/2} in variants II and III.
inline constexpr double kDegreeRegularization = 1e-6;

// Symmetric degree-normalized matrix D^{-1/2} M D^{-1/2} with degrees
// regularized by kDegreeRegularization. Sets *had_isolated when some row of
// M sums to zero.
Eigen::MatrixXd normalized_adjacency(const Eigen::MatrixXd& m,
                                     bool* had_isolated = nullptr);

// The matrix whose leading eigenvectors the given variant clusters.
Eigen::MatrixXd segment_operator(const AdjacencySeries& series, int t_lo,
                                 int t_hi, ClusterVariant variant,
                                 std::vector<std::string>* warnings = nullptr);

// Spectral clustering of the snapshots t_lo..t_hi (inclusive, 1-based) into
// K communities: top-K |eigenvalue| embedding of segment_operator, then
// K-means on the (unnormalized) rows.
CommunityAssignment cluster_segment(const AdjacencySeries& series, int t_lo,
                                    int t_hi, int k, ClusterVariant variant,
                                    std::uint64_t seed,
                                    std::vector<std::string>* warnings = nullptr,
                                    const KMeansOptions& options = {});

}  // namespace dsbm
