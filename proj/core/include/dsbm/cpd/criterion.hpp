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

#include <vector>

#include "dsbm/cpd/grid.hpp"
#include "dsbm/netcore/series.hpp"
#include "dsbm/netcore/types.hpp"

namespace dsbm {

// Criteria below sum squared residuals over ordered pairs i != j and all
// time points, divided by n. With binary data (A^2 = A) every criterion
// reduces to totals of prefix-sum counts, so each evaluation is O(m^2).

struct BlockMeans {
  BlockMatrix pre;
  BlockMatrix post;
};

enum class EmptyBlockPolicy {
  kThrow,  // UndefinedMean naming the block
  kZero,   // report 0 for blocks without node pairs
};

// Plug-in block means: pre averages A_t over t <= t_break and the node pairs
// of each block pair under `pre`; post analogously over t > t_break under
// `post`. Diagonal blocks use the s_u (s_u - 1) off-diagonal pairs.
BlockMeans block_means(const AdjacencySeries& series,
                       const CommunityAssignment& pre,
                       const CommunityAssignment& post, int t_break,
                       EmptyBlockPolicy policy = EmptyBlockPolicy::kThrow);

// Edge-wise criterion: every pair has its own mean on each side.
double er_criterion(const AdjacencySeries& series, int t_break);
std::vector<double> er_criterion_scan(const AdjacencySeries& series,
                                      const SearchGrid& grid);

// Block criterion with plug-in block means. Block pairs without node pairs
// contribute nothing, so the all-singletons partition reproduces
// er_criterion exactly.
double dsbm_criterion(const AdjacencySeries& series, int t_break,
                      const CommunityAssignment& pre,
                      const CommunityAssignment& post);

// Criterion with externally fixed parameters (no re-estimation), evaluated
// at every break t = 0..n. Entry t is
//   (1/n) sum_{i != j} [ sum_{s <= t} (A_ij,s - lambda_ij)^2
//                      + sum_{s > t} (A_ij,s - delta_ij)^2 ].
std::vector<double> fixed_parameter_criterion(const AdjacencySeries& series,
                                              const CommunityAssignment& pre,
                                              const BlockMatrix& pre_matrix,
                                              const CommunityAssignment& post,
                                              const BlockMatrix& post_matrix);

}  // namespace dsbm
