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

#include "dsbm/cluster/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace dsbm {

Embedding spectral_embed(const Eigen::MatrixXd& matrix, int k) {
  if (matrix.rows() != matrix.cols()) {
    throw std::invalid_argument("spectral_embed: matrix must be square");
  }
  const auto m = static_cast<int>(matrix.rows());
  if (k < 1 || k > m) {
    throw std::invalid_argument("spectral_embed: need 1 <= K <= m, got K=" +
                                std::to_string(k) + ", m=" + std::to_string(m));
  }
  const double scale = std::max(1.0, matrix.cwiseAbs().maxCoeff());
  if ((matrix - matrix.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw std::invalid_argument("spectral_embed: matrix is not symmetric");
  }

  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(matrix);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("spectral_embed: eigensolver did not converge");
  }
  const Eigen::VectorXd& values = solver.eigenvalues();
  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const double ma = std::abs(values(a));
    const double mb = std::abs(values(b));
    if (ma != mb) return ma > mb;
    return values(a) > values(b);
  });

  Embedding out;
  out.rows.resize(m, k);
  out.eigenvalues.resize(k);
  for (int c = 0; c < k; ++c) {
    const int src = order[static_cast<std::size_t>(c)];
    Eigen::VectorXd v = solver.eigenvectors().col(src);
    for (int i = 0; i < m; ++i) {
      if (std::abs(v(i)) > 1e-12) {
        if (v(i) < 0) v = -v;
        break;
      }
    }
    out.rows.col(c) = v;
    out.eigenvalues(c) = values(src);
  }
  return out;
}

}  // namespace dsbm
