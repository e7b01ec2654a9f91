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

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace dsbm {

// Index of the unordered pair {i, j}, i < j, in row-major upper-triangle
// order.
constexpr std::size_t pair_index(int i, int j, int m) noexcept {
  const auto ii = static_cast<std::size_t>(i);
  const auto mm = static_cast<std::size_t>(m);
  return ii * mm - ii * (ii + 1) / 2 + static_cast<std::size_t>(j - i - 1);
}

constexpr std::size_t pair_count(int m) noexcept {
  const auto mm = static_cast<std::size_t>(m);
  return mm * (mm - 1) / 2;
}

// Symmetric binary matrix with zero diagonal, stored as its packed upper
// triangle (one byte per pair).
class AdjacencyMatrix {
 public:
  AdjacencyMatrix() = default;
  explicit AdjacencyMatrix(int m);
  // Validates symmetry, binary entries and zero diagonal.
  static AdjacencyMatrix from_dense(const Eigen::MatrixXi& dense);

  int size() const noexcept { return m_; }
  std::uint8_t operator()(int i, int j) const {
    if (i == j) return 0;
    return i < j ? upper_[pair_index(i, j, m_)] : upper_[pair_index(j, i, m_)];
  }
  void set(int i, int j, bool edge);
  std::span<const std::uint8_t> upper() const noexcept { return upper_; }
  std::span<std::uint8_t> upper() noexcept { return upper_; }
  std::int64_t edge_count() const;
  Eigen::MatrixXi dense() const;

  friend bool operator==(const AdjacencyMatrix&,
                         const AdjacencyMatrix&) = default;

 private:
  int m_ = 0;
  std::vector<std::uint8_t> upper_;
};

// n snapshots A_1..A_n on a common node set, plus cumulative pair counts
// C_t = sum_{s <= t} A_s (C_0 = 0). Time indices are 1-based throughout:
// a break at t splits the series into [1, t] and [t + 1, n].
class AdjacencySeries {
 public:
  AdjacencySeries() = default;
  // change_index records the generating break when known (0 = unknown).
  explicit AdjacencySeries(std::vector<AdjacencyMatrix> snapshots,
                           int change_index = 0);

  int num_times() const noexcept { return static_cast<int>(snapshots_.size()); }
  int num_nodes() const noexcept { return m_; }
  int change_index() const noexcept { return change_index_; }
  std::size_t num_pairs() const noexcept { return pairs_; }

  const AdjacencyMatrix& at(int t) const {
    return snapshots_.at(static_cast<std::size_t>(t - 1));
  }
  const std::vector<AdjacencyMatrix>& snapshots() const noexcept {
    return snapshots_;
  }

  // Packed C_t, t in [0, n].
  std::span<const std::int32_t> prefix(int t) const;
  std::int32_t prefix_count(int t, int i, int j) const;
  // Edge indicators over all times and unordered pairs.
  std::int64_t total_edges() const;

  // Dense symmetric sum_{t = t_lo}^{t_hi} A_t (inclusive, 1-based).
  Eigen::MatrixXd segment_sum(int t_lo, int t_hi) const;
  // Packed sum_{t = t_lo}^{t_hi} A_t.
  std::vector<std::int32_t> segment_counts(int t_lo, int t_hi) const;

  // Node i becomes node sigma[i] in every snapshot.
  AdjacencySeries permuted_nodes(std::span<const int> sigma) const;
  // A_t becomes A_{n + 1 - t}.
  AdjacencySeries reversed() const;

  // 64-bit digest of the snapshot contents.
  std::uint64_t digest() const;

 private:
  int m_ = 0;
  int change_index_ = 0;
  std::size_t pairs_ = 0;
  std::vector<AdjacencyMatrix> snapshots_;
  std::vector<std::int32_t> prefix_;  // (n + 1) * pairs_
};

}  // namespace dsbm
