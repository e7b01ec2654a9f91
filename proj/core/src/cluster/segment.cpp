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

#include "dsbm/cluster/segment.hpp"

#include <cmath>
#include <stdexcept>

#include "dsbm/cluster/spectral.hpp"

namespace dsbm {

std::string_view to_string(ClusterVariant variant) {
  switch (variant) {
    case ClusterVariant::kAdjacencySum:
      return "adjacency_sum";
    case ClusterVariant::kLaplacianOfSum:
      return "laplacian_of_sum";
    case ClusterVariant::kSumOfLaplacians:
      return "sum_of_laplacians";
  }
  return "unknown";
}

ClusterVariant parse_cluster_variant(std::string_view name) {
  if (name == "adjacency_sum" || name == "I") return ClusterVariant::kAdjacencySum;
  if (name == "laplacian_of_sum" || name == "II") {
    return ClusterVariant::kLaplacianOfSum;
  }
  if (name == "sum_of_laplacians" || name == "III") {
    return ClusterVariant::kSumOfLaplacians;
  }
  throw std::invalid_argument("unknown cluster variant '" + std::string(name) + "'");
}

Eigen::MatrixXd normalized_adjacency(const Eigen::MatrixXd& m,
                                     bool* had_isolated) {
  const Eigen::VectorXd degrees = m.rowwise().sum();
  if (had_isolated) *had_isolated = (degrees.array() == 0.0).any();
  const Eigen::VectorXd scale =
      (degrees.array() + kDegreeRegularization).rsqrt().matrix();
  Eigen::MatrixXd out = scale.asDiagonal() * m * scale.asDiagonal();
  // Exact symmetry for the eigensolver.
  return (0.5 * (out + out.transpose())).eval();
}

Eigen::MatrixXd segment_operator(const AdjacencySeries& series, int t_lo,
                                 int t_hi, ClusterVariant variant,
                                 std::vector<std::string>* warnings) {
  if (t_lo < 1 || t_hi > series.num_times() || t_lo > t_hi) {
    throw std::invalid_argument("cluster_segment: segment [" +
                                std::to_string(t_lo) + ", " +
                                std::to_string(t_hi) + "] outside 1.." +
                                std::to_string(series.num_times()));
  }
  bool isolated = false;
  Eigen::MatrixXd out;
  switch (variant) {
    case ClusterVariant::kAdjacencySum:
      out = series.segment_sum(t_lo, t_hi);
      break;
    case ClusterVariant::kLaplacianOfSum:
      out = normalized_adjacency(series.segment_sum(t_lo, t_hi), &isolated);
      break;
    case ClusterVariant::kSumOfLaplacians: {
      const int m = series.num_nodes();
      out = Eigen::MatrixXd::Zero(m, m);
      for (int t = t_lo; t <= t_hi; ++t) {
        bool snapshot_isolated = false;
        out += normalized_adjacency(series.at(t).dense().cast<double>(),
                                    &snapshot_isolated);
        isolated = isolated || snapshot_isolated;
      }
      out /= static_cast<double>(t_hi - t_lo + 1);
      break;
    }
  }
  if (isolated && warnings) {
    warnings->push_back("zero-degree node in segment [" + std::to_string(t_lo) +
                        ", " + std::to_string(t_hi) +
                        "]; degrees regularized by 1e-6");
  }
  return out;
}

CommunityAssignment cluster_segment(const AdjacencySeries& series, int t_lo,
                                    int t_hi, int k, ClusterVariant variant,
                                    std::uint64_t seed,
                                    std::vector<std::string>* warnings,
                                    const KMeansOptions& options) {
  const Eigen::MatrixXd op = segment_operator(series, t_lo, t_hi, variant, warnings);
  const Embedding embedding = spectral_embed(op, k);
  return kmeans(embedding.rows, k, seed, options).assignment;
}

}  // namespace dsbm
