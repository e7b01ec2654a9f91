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

#include <cstdint>

#include "dsbm/netcore/series.hpp"
#include "dsbm/netcore/types.hpp"

namespace dsbm {

// One SBM draw. Pair {i, j} (i < j) is an edge iff
// to_unit(stream_at(seed, pair_index(i, j, m))) < clamp(B[z(i)][z(j)], 0, 1),
// so every pair has its own addressable uniform.
AdjacencyMatrix sample_sbm(const CommunityAssignment& assign,
                           const BlockMatrix& block, std::uint64_t seed);

// A DSBM series. Snapshot t is sample_sbm(..., derive_seed(seed, t)), which
// makes serial and parallel sampling identical.
AdjacencySeries sample_dsbm(const DsbmSpec& spec, std::uint64_t seed,
                            int threads = 1);

}  // namespace dsbm
