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

#include "dsbm/netcore/series_io.hpp"

#include <array>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace dsbm {
namespace {

constexpr std::array<char, 5> kMagic = {'D', 'S', 'B', 'M', '1'};

void put_u32(std::ostream& out, std::uint32_t v) {
  const std::array<char, 4> bytes = {
      static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
      static_cast<char>((v >> 16) & 0xff), static_cast<char>((v >> 24) & 0xff)};
  out.write(bytes.data(), bytes.size());
}

std::uint32_t get_u32(std::istream& in) {
  std::array<unsigned char, 4> bytes{};
  in.read(reinterpret_cast<char*>(bytes.data()), bytes.size());
  if (!in) throw std::runtime_error("truncated binary series header");
  return bytes[0] | (bytes[1] << 8) | (bytes[2] << 16) |
         (static_cast<std::uint32_t>(bytes[3]) << 24);
}

}  // namespace

void write_series_text(std::ostream& out, const AdjacencySeries& series) {
  const int m = series.num_nodes();
  out << m << ' ' << series.num_times() << ' ' << series.change_index() << '\n';
  std::string line(static_cast<std::size_t>(m), '0');
  for (const auto& a : series.snapshots()) {
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        line[static_cast<std::size_t>(j)] = a(i, j) ? '1' : '0';
      }
      out << line << '\n';
    }
  }
}

AdjacencySeries read_series_text(std::istream& in) {
  int m = 0;
  int n = 0;
  int change_index = 0;
  if (!(in >> m >> n >> change_index) || m < 1 || n < 1) {
    throw std::runtime_error("bad series header (expected: m n tau_index)");
  }
  std::vector<AdjacencyMatrix> snapshots;
  snapshots.reserve(static_cast<std::size_t>(n));
  std::string line;
  for (int t = 1; t <= n; ++t) {
    Eigen::MatrixXi dense(m, m);
    for (int i = 0; i < m; ++i) {
      if (!(in >> line) || static_cast<int>(line.size()) != m) {
        throw std::runtime_error("snapshot " + std::to_string(t) + " row " +
                                 std::to_string(i + 1) + ": expected " +
                                 std::to_string(m) + " characters");
      }
      for (int j = 0; j < m; ++j) {
        const char c = line[static_cast<std::size_t>(j)];
        if (c != '0' && c != '1') {
          throw std::runtime_error("snapshot " + std::to_string(t) +
                                   ": entries must be 0 or 1");
        }
        dense(i, j) = c - '0';
      }
    }
    snapshots.push_back(AdjacencyMatrix::from_dense(dense));
  }
  return AdjacencySeries(std::move(snapshots), change_index);
}

void write_series_binary(std::ostream& out, const AdjacencySeries& series) {
  out.write(kMagic.data(), kMagic.size());
  put_u32(out, static_cast<std::uint32_t>(series.num_nodes()));
  put_u32(out, static_cast<std::uint32_t>(series.num_times()));
  put_u32(out, static_cast<std::uint32_t>(series.change_index()));
  const std::size_t pairs = series.num_pairs();
  std::vector<char> packed((pairs + 7) / 8);
  for (const auto& a : series.snapshots()) {
    std::fill(packed.begin(), packed.end(), 0);
    const auto upper = a.upper();
    for (std::size_t p = 0; p < pairs; ++p) {
      if (upper[p]) packed[p / 8] = static_cast<char>(packed[p / 8] | (1 << (p % 8)));
    }
    out.write(packed.data(), static_cast<std::streamsize>(packed.size()));
  }
}

AdjacencySeries read_series_binary(std::istream& in) {
  std::array<char, 5> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic) throw std::runtime_error("not a DSBM1 binary series");
  const auto m = static_cast<int>(get_u32(in));
  const auto n = static_cast<int>(get_u32(in));
  const auto change_index = static_cast<int>(get_u32(in));
  if (m < 1 || n < 1) throw std::runtime_error("bad binary series dimensions");
  const std::size_t pairs = pair_count(m);
  std::vector<unsigned char> packed((pairs + 7) / 8);
  std::vector<AdjacencyMatrix> snapshots;
  snapshots.reserve(static_cast<std::size_t>(n));
  for (int t = 1; t <= n; ++t) {
    in.read(reinterpret_cast<char*>(packed.data()),
            static_cast<std::streamsize>(packed.size()));
    if (!in) {
      throw std::runtime_error("truncated binary series at snapshot " +
                               std::to_string(t));
    }
    AdjacencyMatrix a(m);
    auto upper = a.upper();
    for (std::size_t p = 0; p < pairs; ++p) {
      upper[p] = (packed[p / 8] >> (p % 8)) & 1;
    }
    snapshots.push_back(std::move(a));
  }
  return AdjacencySeries(std::move(snapshots), change_index);
}

void save_series(const std::filesystem::path& path,
                 const AdjacencySeries& series, SeriesFormat format) {
  std::ofstream out(path, format == SeriesFormat::kBinary
                              ? std::ios::binary | std::ios::out
                              : std::ios::out);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  if (format == SeriesFormat::kBinary) {
    write_series_binary(out, series);
  } else {
    write_series_text(out, series);
  }
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

AdjacencySeries load_series(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::array<char, 5> head{};
  in.read(head.data(), head.size());
  const bool binary = in.gcount() == 5 && head == kMagic;
  in.clear();
  in.seekg(0);
  return binary ? read_series_binary(in) : read_series_text(in);
}

}  // namespace dsbm
