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

#include "dsbm/bench/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dsbm {
namespace {

bool same_matrix(const std::optional<Eigen::MatrixXd>& a,
                 const std::optional<Eigen::MatrixXd>& b) {
  if (a.has_value() != b.has_value()) return false;
  if (!a) return true;
  return a->rows() == b->rows() && a->cols() == b->cols() && *a == *b;
}

CommunityAssignment halves(int m) {
  const int first = m / 2;
  const std::vector<int> sizes = {first, m - first};
  return CommunityAssignment::contiguous(sizes);
}

CommunityAssignment alternating(int m) {
  std::vector<int> labels(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) labels[static_cast<std::size_t>(i)] = i % 2;
  return {std::move(labels), 2};
}

// Three blocks with boundaries at round(m/3) and round(2m/3).
CommunityAssignment thirds(int m) {
  const auto b1 = static_cast<int>(std::lround(m / 3.0));
  const auto b2 = static_cast<int>(std::lround(2.0 * m / 3.0));
  const std::vector<int> sizes = {b1, b2 - b1, m - b2};
  return CommunityAssignment::contiguous(sizes);
}

// Communities 1 and 3 of `thirds` share label 1; the middle block keeps 2.
CommunityAssignment merged_thirds(int m) {
  const CommunityAssignment t = thirds(m);
  std::vector<int> labels(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) labels[static_cast<std::size_t>(i)] = t[i] == 1 ? 1 : 0;
  return {std::move(labels), 2};
}

Eigen::MatrixXd two_by_two(double diag, double off) {
  Eigen::MatrixXd b(2, 2);
  b << diag, off, off, diag;
  return b;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("scenario: " + what);
}

DsbmSpec merge_model(const ScenarioSpec& s, double cross) {
  Eigen::MatrixXd pre(3, 3);
  pre << s.within, s.between, cross,  //
      s.between, s.within, s.between,  //
      cross, s.between, s.within;
  Eigen::MatrixXd post(2, 2);
  post << s.within, s.between, s.between, s.within;
  return {thirds(s.m), BlockMatrix::nominal(pre), merged_thirds(s.m),
          BlockMatrix::nominal(post), s.tau, s.n};
}

}  // namespace

bool operator==(const ScenarioSpec& a, const ScenarioSpec& b) {
  return a.name == b.name && a.m == b.m && a.n == b.n && a.tau == b.tau &&
         a.delta == b.delta && a.lambda == b.lambda && a.p1 == b.p1 &&
         a.within == b.within && a.between == b.between && a.shift == b.shift &&
         a.shift_over_sqrt_n == b.shift_over_sqrt_n &&
         a.pre_labels == b.pre_labels && a.post_labels == b.post_labels &&
         same_matrix(a.pre_matrix, b.pre_matrix) &&
         same_matrix(a.post_matrix, b.post_matrix);
}

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names = {
      "I",     "II",           "III",   "IV",    "V",     "G",
      "reallocation", "connectivity", "merge", "split", "custom"};
  return names;
}

DsbmSpec build_scenario(const ScenarioSpec& s) {
  require(s.m >= 2, "need m >= 2");
  require(s.n >= 2, "need n >= 2");
  require(s.tau > 0.0 && s.tau < 1.0, "tau must lie in (0, 1)");
  const double n = s.n;
  const std::string& name = s.name;

  if (name == "I") {
    require(s.delta > 0.0, "model I needs delta > 0");
    const auto b = BlockMatrix::nominal(two_by_two(0.6, 0.6 - std::pow(n, -s.delta)));
    return {halves(s.m), b, alternating(s.m), b, s.tau, s.n};
  }
  if (name == "II") {
    const Eigen::MatrixXd pre = two_by_two(0.6, 0.3);
    const Eigen::MatrixXd post = pre.array() + std::pow(n, -0.25);
    return {halves(s.m), BlockMatrix::nominal(pre), halves(s.m),
            BlockMatrix::nominal(post), s.tau, s.n};
  }
  if (name == "III") {
    ScenarioSpec base = s;
    base.within = 0.6;
    base.between = 0.3;
    DsbmSpec spec = merge_model(base, 0.6 - std::pow(n, -0.05));
    // The reference layout zeroes every post-change entry of community 3,
    // which is empty after the merge; keep K = 3 with a zero row/column.
    Eigen::MatrixXd post = Eigen::MatrixXd::Zero(3, 3);
    post.topLeftCorner(2, 2) = two_by_two(0.6, 0.3);
    return {spec.pre_assignment(), spec.pre_matrix(),
            spec.post_assignment().with_communities(3),
            BlockMatrix::nominal(post), s.tau, s.n};
  }
  if (name == "IV") {
    require(s.delta > 0.0 && s.lambda > 0.0, "model IV needs delta, lambda > 0");
    const double base = std::pow(n, -s.lambda);
    const auto b = BlockMatrix::nominal(two_by_two(base, base - std::pow(n, -s.delta)));
    return {halves(s.m), b, alternating(s.m), b, s.tau, s.n};
  }
  if (name == "V") {
    require(s.lambda > 0.0, "model V needs lambda > 0");
    const double base = std::pow(n, -s.lambda);
    const Eigen::MatrixXd pre = two_by_two(2.0 * base, base);
    const Eigen::MatrixXd post = pre.array() + std::pow(n, -0.25);
    return {halves(s.m), BlockMatrix::nominal(pre), halves(s.m),
            BlockMatrix::nominal(post), s.tau, s.n};
  }
  if (name == "G") {
    require(s.p1 > 0.0, "model G needs p1 > 0");
    const auto first = static_cast<int>(std::lround(9.0 * s.m / 20.0));
    require(first >= 1 && first < s.m, "model G needs both blocks non-empty");
    const std::vector<int> sizes = {first, s.m - first};
    const auto z = CommunityAssignment::contiguous(sizes);
    const double p2 = s.p1 + 1.0 / std::sqrt(n);
    return {z, BlockMatrix::nominal(two_by_two(s.p1, 0.0)), z,
            BlockMatrix::nominal(two_by_two(p2, 0.0)), s.tau, s.n};
  }
  const double offset = s.shift + s.shift_over_sqrt_n / std::sqrt(n);
  if (name == "reallocation") {
    const auto b = BlockMatrix::nominal(two_by_two(s.within, s.between));
    return {halves(s.m), b, alternating(s.m), b, s.tau, s.n};
  }
  if (name == "connectivity") {
    const Eigen::MatrixXd pre = two_by_two(s.within, s.between);
    const Eigen::MatrixXd post = pre.array() + offset;
    return {halves(s.m), BlockMatrix::nominal(pre), halves(s.m),
            BlockMatrix::nominal(post), s.tau, s.n};
  }
  if (name == "merge" || name == "split") {
    require(s.m >= 3, "merge/split need m >= 3");
    const DsbmSpec merge = merge_model(s, s.between);
    if (name == "merge") return merge;
    return {merge.post_assignment(), merge.post_matrix(), merge.pre_assignment(),
            merge.pre_matrix(), s.tau, s.n};
  }
  if (name == "custom") {
    require(!s.pre_labels.empty() && s.pre_matrix.has_value(),
            "custom needs pre_labels and pre_matrix");
    require(static_cast<int>(s.pre_labels.size()) == s.m,
            "custom pre_labels must have m entries");
    const std::vector<int>& post_labels =
        s.post_labels.empty() ? s.pre_labels : s.post_labels;
    require(static_cast<int>(post_labels.size()) == s.m,
            "custom post_labels must have m entries");
    const Eigen::MatrixXd pre = *s.pre_matrix;
    const Eigen::MatrixXd post =
        s.post_matrix ? *s.post_matrix : Eigen::MatrixXd(pre.array() + offset);
    return {CommunityAssignment::from_one_based(s.pre_labels,
                                                static_cast<int>(pre.rows())),
            BlockMatrix::nominal(pre),
            CommunityAssignment::from_one_based(post_labels,
                                                static_cast<int>(post.rows())),
            BlockMatrix::nominal(post), s.tau, s.n};
  }
  throw std::invalid_argument("unknown scenario '" + name + "'");
}

std::vector<std::string> scenario_notes(const ScenarioSpec& s) {
  std::vector<std::string> notes;
  if ((s.name == "III" || s.name == "merge" || s.name == "split") && s.m != 60) {
    notes.push_back("block boundaries scaled proportionally (1/3 each) from the "
                    "60-node layout");
  }
  const DsbmSpec spec = build_scenario(s);
  if (!spec.pre_matrix().is_probability() || !spec.post_matrix().is_probability()) {
    notes.push_back("nominal block probabilities leave [0, 1]; sampling clamps");
  }
  return notes;
}

}  // namespace dsbm
