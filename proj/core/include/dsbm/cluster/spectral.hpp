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

#include <Eigen/Dense>

namespace dsbm {

// Leading eigenvectors of a symmetric matrix.
struct Embedding {
  Eigen::MatrixXd rows;         // m x K, column k is the k-th eigenvector
  Eigen::VectorXd eigenvalues;  // K retained eigenvalues
};

// The K eigenpairs of largest |eigenvalue|. Ordering is fully determined:
// |eigenvalue| descending, then signed value descending; each eigenvector
// is flipped so that its first nonzero coordinate is positive.
//
// Throws std::invalid_argument for non-square or non-symmetric input and
// for K outside [1, m].
Embedding spectral_embed(const Eigen::MatrixXd& matrix, int k);

}  // namespace dsbm
