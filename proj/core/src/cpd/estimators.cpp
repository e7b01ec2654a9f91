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

#include "dsbm/cpd/estimators.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "dsbm/cluster/misclassification.hpp"
#include "dsbm/cpd/criterion.hpp"
#include "dsbm/error.hpp"
#include "dsbm/parallel.hpp"
#include "dsbm/rng.hpp"

namespace dsbm {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Seed tags for the two clustered segments.
constexpr std::uint64_t kPreTag = 1;
constexpr std::uint64_t kPostTag = 2;

void check_grid(const AdjacencySeries& series, const SearchGrid& grid) {
  if (grid.num_times() != series.num_times()) {
    throw std::invalid_argument("grid built for n=" +
                                std::to_string(grid.num_times()) +
                                ", series has n=" +
                                std::to_string(series.num_times()));
  }
}

ChangePointFit finish(Method method, const AdjacencySeries& series,
                      const SearchGrid& grid, std::vector<double> trajectory,
                      CommunityAssignment z, CommunityAssignment w,
                      int tau_index, std::vector<std::string> warnings) {
  ChangePointFit fit;
  fit.method = method;
  fit.num_times = series.num_times();
  fit.grid = grid;
  fit.trajectory = std::move(trajectory);
  fit.tau_index = tau_index;
  fit.tau_hat = static_cast<double>(tau_index) / series.num_times();
  BlockMeans means =
      block_means(series, z, w, tau_index, EmptyBlockPolicy::kZero);
  fit.lambda_hat = std::move(means.pre);
  fit.delta_hat = std::move(means.post);
  fit.z_hat = std::move(z);
  fit.w_hat = std::move(w);
  fit.warnings = std::move(warnings);
  return fit;
}

std::vector<double> known_trajectory(const AdjacencySeries& series,
                                     const CommunityAssignment& z,
                                     const CommunityAssignment& w,
                                     const SearchGrid& grid) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(grid.size()));
  for (int t = grid.t_min(); t <= grid.t_max(); ++t) {
    out.push_back(dsbm_criterion(series, t, z, w));
  }
  return out;
}

}  // namespace

std::string_view to_string(Method method) {
  switch (method) {
    case Method::kKnown:
      return "known";
    case Method::kEveryPoint:
      return "every_point";
    case Method::kTwoStep:
      return "2step";
    case Method::kBoundary:
      return "boundary";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  if (name == "known") return Method::kKnown;
  if (name == "every_point" || name == "every") return Method::kEveryPoint;
  if (name == "2step" || name == "two_step") return Method::kTwoStep;
  if (name == "boundary") return Method::kBoundary;
  throw std::invalid_argument("unknown method '" + std::string(name) +
                              "' (expected known, every_point, 2step, boundary)");
}

int argmin_index(const std::vector<double>& trajectory, int t_min) {
  int best = -1;
  for (std::size_t i = 0; i < trajectory.size(); ++i) {
    const double v = trajectory[i];
    if (std::isnan(v)) continue;
    if (best < 0 || v < trajectory[static_cast<std::size_t>(best)]) {
      best = static_cast<int>(i);
    }
  }
  if (best < 0) throw std::runtime_error("no grid point has a valid criterion");
  return t_min + best;
}

ChangePointFit estimate_known(const AdjacencySeries& series,
                              const CommunityAssignment& z,
                              const CommunityAssignment& w,
                              const SearchGrid& grid) {
  check_grid(series, grid);
  auto trajectory = known_trajectory(series, z, w, grid);
  const int tau = argmin_index(trajectory, grid.t_min());
  return finish(Method::kKnown, series, grid, std::move(trajectory), z, w, tau,
                {});
}

ChangePointFit estimate_2step(const AdjacencySeries& series, int k,
                              const SearchGrid& grid, std::uint64_t seed,
                              const EstimatorOptions& options) {
  check_grid(series, grid);
  auto trajectory = er_criterion_scan(series, grid);
  const int tau = argmin_index(trajectory, grid.t_min());
  std::vector<std::string> warnings;
  auto z = cluster_segment(series, 1, tau, k, options.variant,
                           derive_seed(seed, kPreTag), &warnings, options.kmeans);
  auto w = cluster_segment(series, tau + 1, series.num_times(), k,
                           options.variant, derive_seed(seed, kPostTag),
                           &warnings, options.kmeans);
  return finish(Method::kTwoStep, series, grid, std::move(trajectory),
                std::move(z), std::move(w), tau, std::move(warnings));
}

ChangePointFit estimate_every_time_point(const AdjacencySeries& series, int k,
                                         const SearchGrid& grid,
                                         std::uint64_t seed,
                                         const EstimatorOptions& options) {
  check_grid(series, grid);
  const int n = series.num_times();
  const auto count = static_cast<std::size_t>(grid.size());
  struct Point {
    double value = kNaN;
    CommunityAssignment z;
    CommunityAssignment w;
    std::vector<std::string> warnings;
  };
  std::vector<Point> points(count);
  parallel_for(count, options.threads, [&](std::size_t idx) {
    const int t = grid.t_min() + static_cast<int>(idx);
    const std::uint64_t point_seed = derive_seed(seed, static_cast<std::uint64_t>(t));
    Point& pt = points[idx];
    try {
      pt.z = cluster_segment(series, 1, t, k, options.variant,
                             derive_seed(point_seed, kPreTag), &pt.warnings,
                             options.kmeans);
      pt.w = cluster_segment(series, t + 1, n, k, options.variant,
                             derive_seed(point_seed, kPostTag), &pt.warnings,
                             options.kmeans);
      pt.value = dsbm_criterion(series, t, pt.z, pt.w);
    } catch (const DegenerateClusters& e) {
      pt.warnings.push_back("break " + std::to_string(t) + " skipped: " + e.what());
      pt.value = kNaN;
    }
  });

  std::vector<double> trajectory(count);
  std::vector<std::string> warnings;
  for (std::size_t i = 0; i < count; ++i) {
    trajectory[i] = points[i].value;
    for (auto& msg : points[i].warnings) warnings.push_back(std::move(msg));
  }
  const int tau = argmin_index(trajectory, grid.t_min());
  auto& chosen = points[static_cast<std::size_t>(tau - grid.t_min())];
  return finish(Method::kEveryPoint, series, grid, std::move(trajectory),
                std::move(chosen.z), std::move(chosen.w), tau,
                std::move(warnings));
}

std::pair<int, int> boundary_segments(const SearchGrid& grid) {
  const int n = grid.num_times();
  if (!grid.c_star()) return {1, n};
  const double c = *grid.c_star();
  const int pre_hi = static_cast<int>(std::ceil(n * c - 1e-9));
  const int post_lo = static_cast<int>(std::floor(n * (1.0 - c) + 1e-9)) + 1;
  return {pre_hi, post_lo};
}

ChangePointFit estimate_boundary_variant(const AdjacencySeries& series, int k,
                                         const SearchGrid& grid,
                                         std::uint64_t seed,
                                         const EstimatorOptions& options) {
  check_grid(series, grid);
  const auto [pre_hi, post_lo] = boundary_segments(grid);
  std::vector<std::string> warnings;
  auto z = cluster_segment(series, 1, pre_hi, k, options.variant,
                           derive_seed(seed, kPreTag), &warnings, options.kmeans);
  auto w = cluster_segment(series, post_lo, series.num_times(), k,
                           options.variant, derive_seed(seed, kPostTag),
                           &warnings, options.kmeans);
  auto trajectory = known_trajectory(series, z, w, grid);
  const int tau = argmin_index(trajectory, grid.t_min());
  return finish(Method::kBoundary, series, grid, std::move(trajectory),
                std::move(z), std::move(w), tau, std::move(warnings));
}

void write_trajectory_csv(std::ostream& out, const ChangePointFit& fit) {
  out << "t_break,b,criterion\n";
  const auto precision = out.precision(17);
  for (std::size_t i = 0; i < fit.trajectory.size(); ++i) {
    const int t = fit.grid.t_min() + static_cast<int>(i);
    out << t << ',' << static_cast<double>(t) / fit.num_times << ',';
    if (!std::isnan(fit.trajectory[i])) out << fit.trajectory[i];
    out << '\n';
  }
  out.precision(precision);
}

void write_fit_summary_header(std::ostream& out) {
  out << "method,tau_index,tau_hat,K,misclass_pre,misclass_post\n";
}

void write_fit_summary_row(std::ostream& out, const ChangePointFit& fit,
                           const std::optional<FitTruth>& truth) {
  out << to_string(fit.method) << ',' << fit.tau_index << ',' << fit.tau_hat
      << ',' << fit.num_communities() << ',';
  if (truth) {
    out << misclassification(truth->z, fit.z_hat).rate << ','
        << misclassification(truth->w, fit.w_hat).rate;
  } else {
    out << ',';
  }
  out << '\n';
}

}  // namespace dsbm
