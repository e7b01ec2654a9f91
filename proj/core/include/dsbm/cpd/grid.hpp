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

#include <optional>
#include <vector>

namespace dsbm {

// Candidate break indices t_min..t_max; a break at t splits the series into
// [1, t] and [t + 1, n].
class SearchGrid {
 public:
  // Every admissible break, 1..n-1.
  static SearchGrid full(int num_times);
  // ceil(n c*)..floor(n (1 - c*)), c* in (0, 1/2).
  static SearchGrid with_boundary(int num_times, double c_star);
  // Explicit range; validated against 1 <= t_min <= t_max <= n - 1.
  static SearchGrid range(int num_times, int t_min, int t_max);

  int num_times() const noexcept { return n_; }
  int t_min() const noexcept { return t_min_; }
  int t_max() const noexcept { return t_max_; }
  const std::optional<double>& c_star() const noexcept { return c_star_; }
  int size() const noexcept { return t_max_ - t_min_ + 1; }
  bool contains(int t) const noexcept { return t >= t_min_ && t <= t_max_; }
  std::vector<int> points() const;

  friend bool operator==(const SearchGrid&, const SearchGrid&) = default;

 private:
  SearchGrid(int n, int t_min, int t_max, std::optional<double> c_star);

  int n_ = 0;
  int t_min_ = 1;
  int t_max_ = 1;
  std::optional<double> c_star_;
};

}  // namespace dsbm
