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

#include "dsbm/infer/snr.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "dsbm/error.hpp"

namespace dsbm {

double smallest_nonzero_singular_value(const Eigen::MatrixXd& matrix) {
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      matrix, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd sv = solver.eigenvalues().cwiseAbs();
  const double largest = sv.size() ? sv.maxCoeff() : 0.0;
  if (largest == 0.0) return 0.0;
  double smallest = largest;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > 1e-8 * largest) smallest = std::min(smallest, sv(i));
  }
  return smallest;
}

SnrReport snr_report(const CommunityAssignment& z, const BlockMatrix& lambda,
                     const CommunityAssignment& w, const BlockMatrix& delta,
                     int num_times) {
  if (num_times < 1) throw std::invalid_argument("snr_report: n must be positive");
  const EdgeProbMatrix p = edge_prob_matrix(z, lambda);
  const EdgeProbMatrix q = edge_prob_matrix(w, delta);
  if (p.size() != q.size()) {
    throw std::invalid_argument("snr_report: node counts differ");
  }
  const double m = p.size();
  const double n = num_times;
  const double k = std::max(z.num_communities(), w.num_communities());

  SnrReport r;
  r.num_nodes = p.size();
  r.num_times = num_times;
  r.num_communities = static_cast<int>(k);
  r.gap = frobenius_gap(p, q, /*include_diagonal=*/true);
  r.snr_dsbm = n / (k * k) * r.gap;
  r.snr_er = n / (m * m) * r.gap;

  const Eigen::MatrixXd p_full = p.with_latent_diagonal();
  const Eigen::MatrixXd q_full = q.with_latent_diagonal();
  const double nu_p = smallest_nonzero_singular_value(p_full);
  const double nu_q = smallest_nonzero_singular_value(q_full);
  if (nu_p == 0.0 && nu_q == 0.0) throw NuUndefined();
  r.nu_m = nu_p == 0.0 ? nu_q : (nu_q == 0.0 ? nu_p : std::min(nu_p, nu_q));
  const double nu2 = r.nu_m * r.nu_m;
  r.a1_first = k * m / nu2;
  r.a1_second = m * std::sqrt(n) / nu2;
  r.a1_star = r.a1_second / n;
  r.snr_er_adap = m > 1 ? std::sqrt(n) / (m * m * std::sqrt(std::log(m))) * r.gap
                        : std::numeric_limits<double>::infinity();

  const Eigen::MatrixXd diff = p_full - q_full;
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      diff, Eigen::EigenvaluesOnly);
  const double spectral = solver.eigenvalues().cwiseAbs().maxCoeff();
  r.a1_adap = spectral > 0.0 ? k * m / (n * nu2) / spectral
                             : std::numeric_limits<double>::infinity();
  return r;
}

SnrReport snr_report(const DsbmSpec& spec) {
  return snr_report(spec.pre_assignment(), spec.pre_matrix(),
                    spec.post_assignment(), spec.post_matrix(),
                    spec.num_times());
}

SnrReport snr_report(const ChangePointFit& fit) {
  return snr_report(fit.z_hat, fit.lambda_hat, fit.w_hat, fit.delta_hat,
                    fit.num_times);
}

LargeShiftPairs large_shift_pair_check(const DsbmSpec& spec, double epsilon,
                                        double delta1, double delta2) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  if (!(delta1 + delta2 >= 0.0 && delta1 + delta2 < 1.0)) {
    throw std::invalid_argument("need 0 <= delta1 + delta2 < 1");
  }
  const double n = spec.num_times();
  const int m = spec.num_nodes();
  const double cutoff = epsilon * std::pow(n, -delta1 / 2.0);
  const auto& z = spec.pre_assignment();
  const auto& w = spec.post_assignment();
  LargeShiftPairs r;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      const double shift =
          spec.pre_matrix()(z[i], z[j]) - spec.post_matrix()(w[i], w[j]);
      if (std::abs(shift) > cutoff) ++r.count;
    }
  }
  r.threshold = static_cast<double>(m) * m * std::pow(n, -delta2);
  r.holds = static_cast<double>(r.count) >= r.threshold;
  return r;
}

}  // namespace dsbm
