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

#include "dsbm/netcore/series.hpp"

#include <stdexcept>
#include <string>

#include "dsbm/rng.hpp"

namespace dsbm {

AdjacencyMatrix::AdjacencyMatrix(int m) : m_(m), upper_(pair_count(m), 0) {
  if (m < 1) throw std::invalid_argument("adjacency matrix needs m >= 1");
}

AdjacencyMatrix AdjacencyMatrix::from_dense(const Eigen::MatrixXi& dense) {
  if (dense.rows() != dense.cols()) {
    throw std::invalid_argument("adjacency matrix must be square");
  }
  const int m = static_cast<int>(dense.rows());
  AdjacencyMatrix out(m);
  for (int i = 0; i < m; ++i) {
    if (dense(i, i) != 0) {
      throw std::invalid_argument("adjacency matrix must have zero diagonal");
    }
    for (int j = i + 1; j < m; ++j) {
      const int a = dense(i, j);
      if ((a != 0 && a != 1) || a != dense(j, i)) {
        throw std::invalid_argument(
            "adjacency matrix must be symmetric and binary");
      }
      out.upper_[pair_index(i, j, m)] = static_cast<std::uint8_t>(a);
    }
  }
  return out;
}

void AdjacencyMatrix::set(int i, int j, bool edge) {
  if (i == j) throw std::invalid_argument("self-loops are not allowed");
  if (i > j) std::swap(i, j);
  upper_[pair_index(i, j, m_)] = edge ? 1 : 0;
}

std::int64_t AdjacencyMatrix::edge_count() const {
  std::int64_t total = 0;
  for (auto a : upper_) total += a;
  return total;
}

Eigen::MatrixXi AdjacencyMatrix::dense() const {
  Eigen::MatrixXi out = Eigen::MatrixXi::Zero(m_, m_);
  for (int i = 0; i < m_; ++i) {
    for (int j = i + 1; j < m_; ++j) {
      out(i, j) = out(j, i) = upper_[pair_index(i, j, m_)];
    }
  }
  return out;
}

AdjacencySeries::AdjacencySeries(std::vector<AdjacencyMatrix> snapshots,
                                 int change_index)
    : change_index_(change_index), snapshots_(std::move(snapshots)) {
  if (snapshots_.empty()) throw std::invalid_argument("empty series");
  m_ = snapshots_.front().size();
  for (const auto& a : snapshots_) {
    if (a.size() != m_) {
      throw std::invalid_argument("snapshots have different node counts");
    }
  }
  const int n = num_times();
  if (change_index_ < 0 || change_index_ > n) {
    throw std::invalid_argument("change index outside 0..n");
  }
  pairs_ = pair_count(m_);
  prefix_.assign((static_cast<std::size_t>(n) + 1) * pairs_, 0);
  for (int t = 1; t <= n; ++t) {
    const auto* prev = prefix_.data() + static_cast<std::size_t>(t - 1) * pairs_;
    auto* cur = prefix_.data() + static_cast<std::size_t>(t) * pairs_;
    const auto upper = snapshots_[static_cast<std::size_t>(t - 1)].upper();
    for (std::size_t p = 0; p < pairs_; ++p) cur[p] = prev[p] + upper[p];
  }
}

std::span<const std::int32_t> AdjacencySeries::prefix(int t) const {
  if (t < 0 || t > num_times()) throw std::out_of_range("prefix time");
  return {prefix_.data() + static_cast<std::size_t>(t) * pairs_, pairs_};
}

std::int32_t AdjacencySeries::prefix_count(int t, int i, int j) const {
  if (i == j) return 0;
  if (i > j) std::swap(i, j);
  return prefix(t)[pair_index(i, j, m_)];
}

std::int64_t AdjacencySeries::total_edges() const {
  std::int64_t total = 0;
  for (auto c : prefix(num_times())) total += c;
  return total;
}

std::vector<std::int32_t> AdjacencySeries::segment_counts(int t_lo,
                                                          int t_hi) const {
  if (t_lo < 1 || t_hi > num_times() || t_lo > t_hi) {
    throw std::invalid_argument("segment [" + std::to_string(t_lo) + ", " +
                                std::to_string(t_hi) + "] outside 1.." +
                                std::to_string(num_times()));
  }
  const auto hi = prefix(t_hi);
  const auto lo = prefix(t_lo - 1);
  std::vector<std::int32_t> out(pairs_);
  for (std::size_t p = 0; p < pairs_; ++p) out[p] = hi[p] - lo[p];
  return out;
}

Eigen::MatrixXd AdjacencySeries::segment_sum(int t_lo, int t_hi) const {
  const auto counts = segment_counts(t_lo, t_hi);
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(m_, m_);
  std::size_t p = 0;
  for (int i = 0; i < m_; ++i) {
    for (int j = i + 1; j < m_; ++j, ++p) {
      out(i, j) = out(j, i) = counts[p];
    }
  }
  return out;
}

AdjacencySeries AdjacencySeries::permuted_nodes(
    std::span<const int> sigma) const {
  if (static_cast<int>(sigma.size()) != m_) {
    throw std::invalid_argument("node permutation has wrong length");
  }
  std::vector<AdjacencyMatrix> out;
  out.reserve(snapshots_.size());
  for (const auto& a : snapshots_) {
    AdjacencyMatrix b(m_);
    for (int i = 0; i < m_; ++i) {
      for (int j = i + 1; j < m_; ++j) {
        if (a(i, j)) {
          b.set(sigma[static_cast<std::size_t>(i)],
                sigma[static_cast<std::size_t>(j)], true);
        }
      }
    }
    out.push_back(std::move(b));
  }
  return AdjacencySeries(std::move(out), change_index_);
}

AdjacencySeries AdjacencySeries::reversed() const {
  std::vector<AdjacencyMatrix> out(snapshots_.rbegin(), snapshots_.rend());
  const int n = num_times();
  return AdjacencySeries(std::move(out),
                         change_index_ == 0 ? 0 : n - change_index_);
}

std::uint64_t AdjacencySeries::digest() const {
  std::uint64_t h = mix64(static_cast<std::uint64_t>(m_) * 31 +
                          static_cast<std::uint64_t>(num_times()));
  for (const auto& a : snapshots_) {
    std::uint64_t word = 0;
    int filled = 0;
    for (auto bit : a.upper()) {
      word = (word << 1) | bit;
      if (++filled == 64) {
        h = mix64(h ^ word);
        word = 0;
        filled = 0;
      }
    }
    h = mix64(h ^ word ^ (static_cast<std::uint64_t>(filled) << 56));
  }
  return h;
}

}  // namespace dsbm
