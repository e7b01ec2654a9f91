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

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dsbm {

// Node-to-community map. Labels are stored 0-based in [0, K); the text form
// (to_string / parse) is 1-based, matching the usual z(i) in {1..K}.
// Some labels may be unused (empty blocks), e.g. after padding to a common K.
class CommunityAssignment {
 public:
  CommunityAssignment() = default;
  CommunityAssignment(std::vector<int> labels, int num_communities);

  // K = 1 + largest label.
  static CommunityAssignment from_labels(std::vector<int> labels);
  // Labels in 1..K. K = 0 means "largest label".
  static CommunityAssignment from_one_based(std::span<const int> labels,
                                            int num_communities = 0);
  // Each node its own community (K = m).
  static CommunityAssignment singletons(int m);
  // Consecutive blocks of the given sizes.
  static CommunityAssignment contiguous(std::span<const int> sizes);
  // Parses a line of space separated 1-based labels.
  static CommunityAssignment parse(std::string_view text,
                                   int num_communities = 0);

  int size() const noexcept { return static_cast<int>(labels_.size()); }
  int num_communities() const noexcept { return num_communities_; }
  int operator[](int i) const { return labels_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& labels() const noexcept { return labels_; }

  int block_size(int u) const { return sizes_.at(static_cast<std::size_t>(u)); }
  const std::vector<int>& block_sizes() const noexcept { return sizes_; }
  std::vector<int> members(int u) const;
  int nonempty_blocks() const;

  // Same labels, K raised to `num_communities` (new blocks are empty).
  CommunityAssignment with_communities(int num_communities) const;
  // Node i of this assignment becomes node sigma[i].
  CommunityAssignment permuted_nodes(std::span<const int> sigma) const;
  // Label u becomes pi[u].
  CommunityAssignment relabeled(std::span<const int> pi) const;

  std::string to_string() const;

  friend bool operator==(const CommunityAssignment&,
                         const CommunityAssignment&) = default;

 private:
  std::vector<int> labels_;
  int num_communities_ = 0;
  std::vector<int> sizes_;
};

// Symmetric K x K matrix of community connection probabilities.
//
// The regular constructor enforces entries in [0, 1]. nominal() keeps the
// symmetric structure but allows entries outside [0, 1]: some literature
// parameterizations (e.g. 0.6 - n^{-1/20}) leave the unit interval while
// their signal arithmetic is still reported with the nominal values.
// Samplers always clamp to [0, 1].
class BlockMatrix {
 public:
  BlockMatrix() = default;
  explicit BlockMatrix(Eigen::MatrixXd entries);

  static BlockMatrix nominal(Eigen::MatrixXd entries);
  static BlockMatrix constant(int size, double value);

  int size() const noexcept { return static_cast<int>(entries_.rows()); }
  double operator()(int u, int v) const { return entries_(u, v); }
  const Eigen::MatrixXd& entries() const noexcept { return entries_; }

  bool is_probability() const;
  BlockMatrix clipped(double lo = 0.0, double hi = 1.0) const;
  // Zero-padded to `size` x `size`.
  BlockMatrix padded(int size) const;
  // Entry (u, v) moves to (pi[u], pi[v]).
  BlockMatrix relabeled(std::span<const int> pi) const;

  friend bool operator==(const BlockMatrix& a, const BlockMatrix& b) {
    return a.entries_.rows() == b.entries_.rows() &&
           a.entries_.cols() == b.entries_.cols() && a.entries_ == b.entries_;
  }

 private:
  struct NoRangeCheck {};
  BlockMatrix(Eigen::MatrixXd entries, NoRangeCheck);

  Eigen::MatrixXd entries_;
};

// m x m edge probability matrix Ed_z(B): entry (i, j) is B[z(i)][z(j)] for
// i != j and 0 on the diagonal. The block value B[z(i)][z(i)] that the
// diagonal would carry without the no-self-loop rule is kept separately as
// the latent diagonal; some reported signal figures include it.
class EdgeProbMatrix {
 public:
  EdgeProbMatrix() = default;
  EdgeProbMatrix(const CommunityAssignment& assign, const BlockMatrix& block);

  // Arbitrary symmetric matrix with zero diagonal; latent diagonal is zero.
  static EdgeProbMatrix from_dense(Eigen::MatrixXd entries);

  int size() const noexcept { return static_cast<int>(entries_.rows()); }
  double operator()(int i, int j) const { return entries_(i, j); }
  const Eigen::MatrixXd& entries() const noexcept { return entries_; }
  const Eigen::VectorXd& latent_diagonal() const noexcept { return latent_; }
  // entries() with the latent diagonal filled in.
  Eigen::MatrixXd with_latent_diagonal() const;

 private:
  Eigen::MatrixXd entries_;
  Eigen::VectorXd latent_;
};

EdgeProbMatrix edge_prob_matrix(const CommunityAssignment& assign,
                                const BlockMatrix& block);

// Squared Frobenius distance sum_{i,j} (P_ij - Q_ij)^2. With
// include_diagonal, diagonal terms use the latent diagonals.
double frobenius_gap(const EdgeProbMatrix& p, const EdgeProbMatrix& q,
                     bool include_diagonal = true);

// Generative model with a single change point: SBM(z, Lambda) for
// t <= floor(n * tau), SBM(w, Delta) afterwards.
class DsbmSpec {
 public:
  DsbmSpec(CommunityAssignment pre_assignment, BlockMatrix pre_matrix,
           CommunityAssignment post_assignment, BlockMatrix post_matrix,
           double tau, int num_times);

  // tau = change_index / num_times.
  static DsbmSpec with_change_index(CommunityAssignment pre_assignment,
                                    BlockMatrix pre_matrix,
                                    CommunityAssignment post_assignment,
                                    BlockMatrix post_matrix, int change_index,
                                    int num_times);

  const CommunityAssignment& pre_assignment() const noexcept { return z_; }
  const CommunityAssignment& post_assignment() const noexcept { return w_; }
  const BlockMatrix& pre_matrix() const noexcept { return lambda_; }
  const BlockMatrix& post_matrix() const noexcept { return delta_; }
  double tau() const noexcept { return tau_; }
  int num_times() const noexcept { return n_; }
  int num_nodes() const noexcept { return z_.size(); }
  int num_communities() const noexcept { return z_.num_communities(); }
  // floor(n * tau), in [1, n - 1].
  int change_index() const noexcept { return change_index_; }

  EdgeProbMatrix pre_edge_probs() const { return {z_, lambda_}; }
  EdgeProbMatrix post_edge_probs() const { return {w_, delta_}; }

  friend bool operator==(const DsbmSpec&, const DsbmSpec&) = default;

 private:
  CommunityAssignment z_;
  BlockMatrix lambda_;
  CommunityAssignment w_;
  BlockMatrix delta_;
  double tau_ = 0.5;
  int n_ = 0;
  int change_index_ = 0;
};

}  // namespace dsbm
