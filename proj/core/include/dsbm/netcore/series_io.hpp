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

#include <filesystem>
#include <iosfwd>

#include "dsbm/netcore/series.hpp"

namespace dsbm {

// Text layout: a header line "m n tau_index", then n blocks of m lines, each
// line m characters of '0'/'1'.
void write_series_text(std::ostream& out, const AdjacencySeries& series);
AdjacencySeries read_series_text(std::istream& in);

// Binary layout: magic "DSBM1", little-endian u32 m, n, tau_index, then per
// snapshot the upper triangle (pair_index order) bit-packed LSB first,
// padded to a whole byte.
void write_series_binary(std::ostream& out, const AdjacencySeries& series);
AdjacencySeries read_series_binary(std::istream& in);

enum class SeriesFormat { kText, kBinary };

void save_series(const std::filesystem::path& path,
                 const AdjacencySeries& series, SeriesFormat format);
// Detects the format from the magic bytes.
AdjacencySeries load_series(const std::filesystem::path& path);

}  // namespace dsbm
