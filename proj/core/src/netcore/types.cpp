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

#include "dsbm/netcore/types.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dsbm {
namespace {

std::vector<int> count_blocks(const std::vector<int>& labels, int k) {
  std::vector<int> sizes(static_cast<std::size_t>(k), 0);
  for (int label : labels) ++sizes[static_cast<std::size_t>(label)];
  return sizes;
}

void require_symmetric(const Eigen::MatrixXd& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument(std::string(what) + " must be square");
  }
  for (Eigen::Index u = 0; u < m.rows(); ++u) {
    for (Eigen::Index v = 0; v < m.cols(); ++v) {
      if (!std::isfinite(m(u, v))) {
        throw std::invalid_argument(std::string(what) +
                                    " has a non-finite entry");
      }
      if (m(u, v) != m(v, u)) {
        throw std::invalid_argument(std::string(what) + " must be symmetric");
      }
    }
  }
}

}  // namespace

CommunityAssignment::CommunityAssignment(std::vector<int> labels,
                                         int num_communities)
    : labels_(std::move(labels)), num_communities_(num_communities) {
  if (num_communities_ < 1 && !labels_.empty()) {
    throw std::invalid_argument("community count must be positive");
  }
  for (int label : labels_) {
    if (label < 0 || label >= num_communities_) {
      throw std::invalid_argument("community label " + std::to_string(label + 1) +
                                  " outside 1.." +
                                  std::to_string(num_communities_));
    }
  }
  sizes_ = count_blocks(labels_, num_communities_);
}

CommunityAssignment CommunityAssignment::from_labels(std::vector<int> labels) {
  const int k = labels.empty()
                    ? 0
                    : *std::max_element(labels.begin(), labels.end()) + 1;
  return {std::move(labels), k};
}

CommunityAssignment CommunityAssignment::from_one_based(
    std::span<const int> labels, int num_communities) {
  std::vector<int> zero_based;
  zero_based.reserve(labels.size());
  int largest = 0;
  for (int label : labels) {
    zero_based.push_back(label - 1);
    largest = std::max(largest, label);
  }
  return {std::move(zero_based),
          num_communities > 0 ? num_communities : largest};
}

CommunityAssignment CommunityAssignment::singletons(int m) {
  std::vector<int> labels(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) labels[static_cast<std::size_t>(i)] = i;
  return {std::move(labels), m};
}

CommunityAssignment CommunityAssignment::contiguous(std::span<const int> sizes) {
  std::vector<int> labels;
  for (std::size_t u = 0; u < sizes.size(); ++u) {
    if (sizes[u] < 0) throw std::invalid_argument("negative block size");
    labels.insert(labels.end(), static_cast<std::size_t>(sizes[u]),
                  static_cast<int>(u));
  }
  return {std::move(labels), static_cast<int>(sizes.size())};
}

CommunityAssignment CommunityAssignment::parse(std::string_view text,
                                               int num_communities) {
  std::istringstream in{std::string(text)};
  std::vector<int> labels;
  int label = 0;
  while (in >> label) {
    if (label < 1) throw std::invalid_argument("labels must be >= 1");
    labels.push_back(label);
  }
  if (!in.eof()) throw std::invalid_argument("malformed assignment line");
  return from_one_based(labels, num_communities);
}

std::vector<int> CommunityAssignment::members(int u) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (labels_[static_cast<std::size_t>(i)] == u) out.push_back(i);
  }
  return out;
}

int CommunityAssignment::nonempty_blocks() const {
  return static_cast<int>(
      std::count_if(sizes_.begin(), sizes_.end(), [](int s) { return s > 0; }));
}

CommunityAssignment CommunityAssignment::with_communities(
    int num_communities) const {
  if (num_communities < num_communities_) {
    throw std::invalid_argument("cannot shrink community count");
  }
  return {labels_, num_communities};
}

CommunityAssignment CommunityAssignment::permuted_nodes(
    std::span<const int> sigma) const {
  if (static_cast<int>(sigma.size()) != size()) {
    throw std::invalid_argument("node permutation has wrong length");
  }
  std::vector<int> out(labels_.size(), -1);
  for (int i = 0; i < size(); ++i) {
    out.at(static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])) =
        labels_[static_cast<std::size_t>(i)];
  }
  return {std::move(out), num_communities_};
}

CommunityAssignment CommunityAssignment::relabeled(
    std::span<const int> pi) const {
  if (static_cast<int>(pi.size()) != num_communities_) {
    throw std::invalid_argument("label permutation has wrong length");
  }
  std::vector<int> out(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    out[i] = pi[static_cast<std::size_t>(labels_[i])];
  }
  return {std::move(out), num_communities_};
}

std::string CommunityAssignment::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(labels_[i] + 1);
  }
  return out;
}

BlockMatrix::BlockMatrix(Eigen::MatrixXd entries) : entries_(std::move(entries)) {
  require_symmetric(entries_, "block matrix");
  if (!is_probability()) {
    throw std::invalid_argument("block matrix entries must lie in [0, 1]");
  }
}

BlockMatrix::BlockMatrix(Eigen::MatrixXd entries, NoRangeCheck)
    : entries_(std::move(entries)) {
  require_symmetric(entries_, "block matrix");
}

BlockMatrix BlockMatrix::nominal(Eigen::MatrixXd entries) {
  return {std::move(entries), NoRangeCheck{}};
}

BlockMatrix BlockMatrix::constant(int size, double value) {
  return BlockMatrix(Eigen::MatrixXd::Constant(size, size, value));
}

bool BlockMatrix::is_probability() const {
  return (entries_.array() >= 0.0).all() && (entries_.array() <= 1.0).all();
}

BlockMatrix BlockMatrix::clipped(double lo, double hi) const {
  return BlockMatrix::nominal(entries_.cwiseMax(lo).cwiseMin(hi));
}

BlockMatrix BlockMatrix::padded(int size) const {
  if (size < this->size()) throw std::invalid_argument("cannot shrink block matrix");
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(size, size);
  out.topLeftCorner(entries_.rows(), entries_.cols()) = entries_;
  return {std::move(out), NoRangeCheck{}};
}

BlockMatrix BlockMatrix::relabeled(std::span<const int> pi) const {
  if (static_cast<int>(pi.size()) != size()) {
    throw std::invalid_argument("label permutation has wrong length");
  }
  Eigen::MatrixXd out(size(), size());
  for (int u = 0; u < size(); ++u) {
    for (int v = 0; v < size(); ++v) {
      out(pi[static_cast<std::size_t>(u)], pi[static_cast<std::size_t>(v)]) =
          entries_(u, v);
    }
  }
  return {std::move(out), NoRangeCheck{}};
}

EdgeProbMatrix::EdgeProbMatrix(const CommunityAssignment& assign,
                               const BlockMatrix& block) {
  if (assign.num_communities() != block.size()) {
    throw std::invalid_argument(
        "edge_prob_matrix: assignment has K=" +
        std::to_string(assign.num_communities()) + " but block matrix is " +
        std::to_string(block.size()) + "x" + std::to_string(block.size()));
  }
  const int m = assign.size();
  entries_.resize(m, m);
  latent_.resize(m);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < m; ++i) {
      entries_(i, j) = i == j ? 0.0 : block(assign[i], assign[j]);
    }
    latent_(j) = block(assign[j], assign[j]);
  }
}

EdgeProbMatrix EdgeProbMatrix::from_dense(Eigen::MatrixXd entries) {
  require_symmetric(entries, "edge probability matrix");
  if ((entries.diagonal().array() != 0.0).any()) {
    throw std::invalid_argument("edge probability matrix must have zero diagonal");
  }
  EdgeProbMatrix out;
  out.latent_ = Eigen::VectorXd::Zero(entries.rows());
  out.entries_ = std::move(entries);
  return out;
}

Eigen::MatrixXd EdgeProbMatrix::with_latent_diagonal() const {
  Eigen::MatrixXd out = entries_;
  out.diagonal() = latent_;
  return out;
}

EdgeProbMatrix edge_prob_matrix(const CommunityAssignment& assign,
                                const BlockMatrix& block) {
  return {assign, block};
}

double frobenius_gap(const EdgeProbMatrix& p, const EdgeProbMatrix& q,
                     bool include_diagonal) {
  if (p.size() != q.size()) {
    throw std::invalid_argument("frobenius_gap: dimension mismatch");
  }
  double gap = (p.entries() - q.entries()).squaredNorm();
  if (include_diagonal) {
    gap += (p.latent_diagonal() - q.latent_diagonal()).squaredNorm();
  }
  return gap;
}

DsbmSpec::DsbmSpec(CommunityAssignment pre_assignment, BlockMatrix pre_matrix,
                   CommunityAssignment post_assignment, BlockMatrix post_matrix,
                   double tau, int num_times)
    : z_(std::move(pre_assignment)),
      lambda_(std::move(pre_matrix)),
      w_(std::move(post_assignment)),
      delta_(std::move(post_matrix)),
      tau_(tau),
      n_(num_times) {
  if (z_.size() != w_.size()) {
    throw std::invalid_argument("pre and post assignments cover different node sets");
  }
  if (z_.size() < 2) throw std::invalid_argument("need at least two nodes");
  if (z_.num_communities() != lambda_.size() ||
      w_.num_communities() != delta_.size()) {
    throw std::invalid_argument("assignment K does not match block matrix size");
  }
  // Unequal community counts: use the larger one on both sides.
  const int k = std::max(z_.num_communities(), w_.num_communities());
  if (z_.num_communities() < k) {
    z_ = z_.with_communities(k);
    lambda_ = lambda_.padded(k);
  }
  if (w_.num_communities() < k) {
    w_ = w_.with_communities(k);
    delta_ = delta_.padded(k);
  }
  if (!(tau_ > 0.0 && tau_ < 1.0)) {
    throw std::invalid_argument("tau must lie in (0, 1)");
  }
  if (n_ < 2) throw std::invalid_argument("need at least two time points");
  // The epsilon absorbs representation error in tau = t / n.
  change_index_ = static_cast<int>(std::floor(n_ * tau_ + 1e-9));
  if (change_index_ < 1 || change_index_ > n_ - 1) {
    throw std::invalid_argument("floor(n * tau) must lie in 1..n-1");
  }
}

DsbmSpec DsbmSpec::with_change_index(CommunityAssignment pre_assignment,
                                     BlockMatrix pre_matrix,
                                     CommunityAssignment post_assignment,
                                     BlockMatrix post_matrix, int change_index,
                                     int num_times) {
  return {std::move(pre_assignment), std::move(pre_matrix),
          std::move(post_assignment), std::move(post_matrix),
          static_cast<double>(change_index) / num_times, num_times};
}

}  // namespace dsbm
