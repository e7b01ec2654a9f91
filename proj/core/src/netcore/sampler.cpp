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

#include "dsbm/netcore/sampler.hpp"

#include <algorithm>
#include <vector>

#include "dsbm/parallel.hpp"
#include "dsbm/rng.hpp"

namespace dsbm {

AdjacencyMatrix sample_sbm(const CommunityAssignment& assign,
                           const BlockMatrix& block, std::uint64_t seed) {
  if (assign.num_communities() != block.size()) {
    throw std::invalid_argument("sample_sbm: assignment K does not match block matrix");
  }
  const int m = assign.size();
  const Eigen::MatrixXd probs = block.entries().cwiseMax(0.0).cwiseMin(1.0);
  AdjacencyMatrix out(m);
  auto upper = out.upper();
  std::size_t p = 0;
  for (int i = 0; i < m; ++i) {
    const int zi = assign[i];
    for (int j = i + 1; j < m; ++j, ++p) {
      const double prob = probs(zi, assign[j]);
      upper[p] = to_unit(stream_at(seed, p)) < prob ? 1 : 0;
    }
  }
  return out;
}

AdjacencySeries sample_dsbm(const DsbmSpec& spec, std::uint64_t seed,
                            int threads) {
  const int n = spec.num_times();
  std::vector<AdjacencyMatrix> snapshots(static_cast<std::size_t>(n));
  parallel_for(static_cast<std::size_t>(n), threads, [&](std::size_t idx) {
    const int t = static_cast<int>(idx) + 1;
    const bool pre = t <= spec.change_index();
    snapshots[idx] =
        sample_sbm(pre ? spec.pre_assignment() : spec.post_assignment(),
                   pre ? spec.pre_matrix() : spec.post_matrix(),
                   derive_seed(seed, static_cast<std::uint64_t>(t)));
  });
  return AdjacencySeries(std::move(snapshots), spec.change_index());
}

}  // namespace dsbm
