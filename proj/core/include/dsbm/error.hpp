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

#include <stdexcept>
#include <string>

namespace dsbm {

// Precondition violations (dimension mismatch, labels out of range, ...)
// are reported as std::invalid_argument. The types below mark failure modes
// callers are expected to catch and act on.

// Fewer distinct points than requested clusters.
class DegenerateClusters : public std::runtime_error {
 public:
  DegenerateClusters(int requested, int achieved)
      : std::runtime_error("degenerate clustering: requested " +
                           std::to_string(requested) + " clusters, data " +
                           "supports only " + std::to_string(achieved)),
        requested_(requested),
        achieved_(achieved) {}

  int requested() const noexcept { return requested_; }
  int achieved() const noexcept { return achieved_; }

 private:
  int requested_;
  int achieved_;
};

// A block mean over an empty set of node pairs.
class UndefinedMean : public std::runtime_error {
 public:
  UndefinedMean(const std::string& side, int u, int v)
      : std::runtime_error("undefined block mean on " + side + " segment " +
                           "for block pair (" + std::to_string(u + 1) + "," +
                           std::to_string(v + 1) + "): no node pairs"),
        u_(u),
        v_(v) {}

  int block_u() const noexcept { return u_; }
  int block_v() const noexcept { return v_; }

 private:
  int u_;
  int v_;
};

// Smallest nonzero singular value requested for zero matrices.
class NuUndefined : public std::runtime_error {
 public:
  NuUndefined()
      : std::runtime_error(
            "nu_m undefined: both edge probability matrices are zero") {}
};

// A finite-n variance ratio requested with zero total signal.
class GammaUndefined : public std::runtime_error {
 public:
  GammaUndefined()
      : std::runtime_error("gamma^2 undefined: Frobenius gap is zero") {}
};

// Bootstrap offset window contains no admissible break.
class BoundaryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dsbm
