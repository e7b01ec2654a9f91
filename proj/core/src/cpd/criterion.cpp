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

#include "dsbm/cpd/criterion.hpp"

#include <stdexcept>
#include <string>

#include "dsbm/error.hpp"

namespace dsbm {
namespace {

void check_break(const AdjacencySeries& series, int t_break) {
  if (t_break < 1 || t_break > series.num_times() - 1) {
    throw std::invalid_argument("break " + std::to_string(t_break) +
                                " outside 1.." +
                                std::to_string(series.num_times() - 1));
  }
}

void check_assignment(const AdjacencySeries& series,
                      const CommunityAssignment& a) {
  if (a.size() != series.num_nodes()) {
    throw std::invalid_argument("assignment covers " + std::to_string(a.size()) +
                                " nodes, series has " +
                                std::to_string(series.num_nodes()));
  }
}

// Ordered-pair edge totals per block pair over times (t_lo, t_hi].
Eigen::MatrixXd block_sums(const AdjacencySeries& series,
                           const CommunityAssignment& a, int t_lo, int t_hi) {
  const int m = series.num_nodes();
  const int k = a.num_communities();
  const auto hi = series.prefix(t_hi);
  const auto lo = series.prefix(t_lo);
  Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(k, k);
  std::size_t p = 0;
  for (int i = 0; i < m; ++i) {
    const int u = a[i];
    for (int j = i + 1; j < m; ++j, ++p) {
      const double c = hi[p] - lo[p];
      sums(u, a[j]) += c;
      sums(a[j], u) += c;
    }
  }
  return sums;
}

// Ordered node pairs per block pair.
Eigen::MatrixXd block_pairs(const CommunityAssignment& a) {
  const int k = a.num_communities();
  Eigen::MatrixXd pairs(k, k);
  for (int u = 0; u < k; ++u) {
    for (int v = 0; v < k; ++v) {
      const double su = a.block_size(u);
      pairs(u, v) = u == v ? su * (su - 1) : su * a.block_size(v);
    }
  }
  return pairs;
}

BlockMatrix means(const Eigen::MatrixXd& sums, const Eigen::MatrixXd& pairs,
                  int length, const char* side, EmptyBlockPolicy policy) {
  const auto k = static_cast<int>(sums.rows());
  Eigen::MatrixXd out(k, k);
  for (int u = 0; u < k; ++u) {
    for (int v = 0; v < k; ++v) {
      if (pairs(u, v) == 0) {
        if (policy == EmptyBlockPolicy::kThrow) throw UndefinedMean(side, u, v);
        out(u, v) = 0.0;
      } else {
        out(u, v) = sums(u, v) / (pairs(u, v) * length);
      }
    }
  }
  return BlockMatrix(std::move(out));
}

// sum over block pairs of S^2 / N, skipping empty pair sets.
double explained(const Eigen::MatrixXd& sums, const Eigen::MatrixXd& pairs) {
  double total = 0.0;
  for (Eigen::Index u = 0; u < sums.rows(); ++u) {
    for (Eigen::Index v = 0; v < sums.cols(); ++v) {
      if (pairs(u, v) > 0) total += sums(u, v) * sums(u, v) / pairs(u, v);
    }
  }
  return total;
}

}  // namespace

BlockMeans block_means(const AdjacencySeries& series,
                       const CommunityAssignment& pre,
                       const CommunityAssignment& post, int t_break,
                       EmptyBlockPolicy policy) {
  check_break(series, t_break);
  check_assignment(series, pre);
  check_assignment(series, post);
  const int n = series.num_times();
  return {means(block_sums(series, pre, 0, t_break), block_pairs(pre), t_break,
                "pre-change", policy),
          means(block_sums(series, post, t_break, n), block_pairs(post),
                n - t_break, "post-change", policy)};
}

double er_criterion(const AdjacencySeries& series, int t_break) {
  check_break(series, t_break);
  const int n = series.num_times();
  const auto at_break = series.prefix(t_break);
  const auto at_end = series.prefix(n);
  std::int64_t pre_sq = 0;
  std::int64_t post_sq = 0;
  for (std::size_t p = 0; p < series.num_pairs(); ++p) {
    const std::int64_t c = at_break[p];
    const std::int64_t d = at_end[p] - c;
    pre_sq += c * c;
    post_sq += d * d;
  }
  // Ordered pairs: every unordered total counts twice.
  const double total = 2.0 * static_cast<double>(series.total_edges());
  const double pre = static_cast<double>(2 * pre_sq) / t_break;
  const double post = static_cast<double>(2 * post_sq) / (n - t_break);
  return (total - (pre + post)) / n;
}

std::vector<double> er_criterion_scan(const AdjacencySeries& series,
                                      const SearchGrid& grid) {
  if (grid.num_times() != series.num_times()) {
    throw std::invalid_argument("grid and series disagree on n");
  }
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(grid.size()));
  for (int t = grid.t_min(); t <= grid.t_max(); ++t) {
    out.push_back(er_criterion(series, t));
  }
  return out;
}

double dsbm_criterion(const AdjacencySeries& series, int t_break,
                      const CommunityAssignment& pre,
                      const CommunityAssignment& post) {
  check_break(series, t_break);
  check_assignment(series, pre);
  check_assignment(series, post);
  const int n = series.num_times();
  const double total = 2.0 * static_cast<double>(series.total_edges());
  const double pre_part =
      explained(block_sums(series, pre, 0, t_break), block_pairs(pre)) / t_break;
  const double post_part =
      explained(block_sums(series, post, t_break, n), block_pairs(post)) /
      (n - t_break);
  return (total - (pre_part + post_part)) / n;
}

std::vector<double> fixed_parameter_criterion(const AdjacencySeries& series,
                                              const CommunityAssignment& pre,
                                              const BlockMatrix& pre_matrix,
                                              const CommunityAssignment& post,
                                              const BlockMatrix& post_matrix) {
  check_assignment(series, pre);
  check_assignment(series, post);
  if (pre.num_communities() != pre_matrix.size() ||
      post.num_communities() != post_matrix.size()) {
    throw std::invalid_argument(
        "fixed_parameter_criterion: assignment K does not match block matrix");
  }
  const int m = series.num_nodes();
  const int n = series.num_times();
  const std::size_t pairs = series.num_pairs();
  // Per unordered pair: weight of an edge when moved from the post to the
  // pre segment, and the squared-mean offset.
  std::vector<double> edge_weight(pairs);
  double mean_shift = 0.0;  // sum (lambda^2 - delta^2)
  double base = 0.0;        // criterion * n at t = 0
  const auto totals = series.prefix(n);
  std::size_t p = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j, ++p) {
      const double lam = pre_matrix(pre[i], pre[j]);
      const double del = post_matrix(post[i], post[j]);
      edge_weight[p] = 2.0 * (del - lam);
      mean_shift += lam * lam - del * del;
      base += totals[p] * (1.0 - 2.0 * del) + n * del * del;
    }
  }
  std::vector<double> out(static_cast<std::size_t>(n) + 1);
  double running = base;
  out[0] = 2.0 * running / n;
  for (int t = 1; t <= n; ++t) {
    const auto edges = series.at(t).upper();
    double cost = mean_shift;
    for (std::size_t q = 0; q < pairs; ++q) {
      if (edges[q]) cost += edge_weight[q];
    }
    running += cost;
    out[static_cast<std::size_t>(t)] = 2.0 * running / n;
  }
  return out;
}

}  // namespace dsbm
