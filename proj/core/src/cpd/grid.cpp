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

#include "dsbm/cpd/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dsbm {

SearchGrid::SearchGrid(int n, int t_min, int t_max, std::optional<double> c_star)
    : n_(n), t_min_(t_min), t_max_(t_max), c_star_(c_star) {
  if (n < 2) throw std::invalid_argument("search grid needs n >= 2");
  if (t_min < 1 || t_max > n - 1 || t_min > t_max) {
    throw std::invalid_argument("search grid [" + std::to_string(t_min) + ", " +
                                std::to_string(t_max) +
                                "] is empty or outside 1.." +
                                std::to_string(n - 1));
  }
}

SearchGrid SearchGrid::full(int num_times) {
  return {num_times, 1, num_times - 1, std::nullopt};
}

SearchGrid SearchGrid::with_boundary(int num_times, double c_star) {
  if (!(c_star > 0.0 && c_star < 0.5)) {
    throw std::invalid_argument("c* must lie in (0, 1/2)");
  }
  // The epsilons absorb representation error in products like 20 * 0.25.
  const int t_min = static_cast<int>(std::ceil(num_times * c_star - 1e-9));
  const int t_max = static_cast<int>(std::floor(num_times * (1.0 - c_star) + 1e-9));
  return {num_times, t_min, t_max, c_star};
}

SearchGrid SearchGrid::range(int num_times, int t_min, int t_max) {
  return {num_times, t_min, t_max, std::nullopt};
}

std::vector<int> SearchGrid::points() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int t = t_min_; t <= t_max_; ++t) out.push_back(t);
  return out;
}

}  // namespace dsbm
