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

#include "dsbm/bench/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "dsbm/cluster/misclassification.hpp"
#include "dsbm/error.hpp"
#include "dsbm/netcore/sampler.hpp"
#include "dsbm/parallel.hpp"
#include "dsbm/rng.hpp"

namespace dsbm {
namespace {

std::uint64_t method_tag(Method method) {
  switch (method) {
    case Method::kKnown: return 11;
    case Method::kEveryPoint: return 12;
    case Method::kTwoStep: return 13;
    case Method::kBoundary: return 14;
  }
  return 0;
}

ChangePointFit run_method(Method method, const AdjacencySeries& series,
                          const DsbmSpec& spec, const SearchGrid& grid,
                          std::uint64_t seed, const EstimatorOptions& options) {
  const int k = spec.num_communities();
  switch (method) {
    case Method::kKnown:
      return estimate_known(series, spec.pre_assignment(),
                            spec.post_assignment(), grid);
    case Method::kEveryPoint:
      return estimate_every_time_point(series, k, grid, seed, options);
    case Method::kTwoStep:
      return estimate_2step(series, k, grid, seed, options);
    case Method::kBoundary:
      return estimate_boundary_variant(series, k, grid, seed, options);
  }
  throw std::invalid_argument("unknown method");
}

struct Trial {
  int tau_index = 0;  // 0 on failure
  double misclass_pre = 0.0;
  double misclass_post = 0.0;
  double seconds = 0.0;
};

SearchGrid make_grid(int n, const std::optional<double>& c_star) {
  return c_star ? SearchGrid::with_boundary(n, *c_star) : SearchGrid::full(n);
}

std::string exact(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

}  // namespace

int MethodOutcome::count_at(int tau_index) const {
  const auto it = frequencies.find(tau_index);
  return it == frequencies.end() ? 0 : it->second;
}

std::string MethodOutcome::frequency_string() const {
  std::vector<std::pair<int, int>> entries(frequencies.begin(), frequencies.end());
  std::stable_sort(entries.begin(), entries.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  std::string out;
  for (const auto& [index, count] : entries) {
    if (!out.empty()) out += ' ';
    out += (index == 0 ? std::string("fail") : std::to_string(index)) + "(" +
           std::to_string(count) + ")";
  }
  return out;
}

const MethodOutcome& ExperimentReport::outcome(Method method) const {
  for (const auto& m : methods) {
    if (m.method == method) return m;
  }
  throw std::out_of_range("method not part of this experiment");
}

std::uint64_t method_seed(std::uint64_t replicate_seed, Method method) {
  return derive_seed(replicate_seed, method_tag(method));
}

ExperimentReport run_experiment(const ScenarioSpec& scenario,
                                const std::vector<Method>& methods,
                                int replicates, std::uint64_t seed,
                                const ExperimentOptions& options) {
  if (replicates < 1) throw std::invalid_argument("need at least one replicate");
  if (methods.empty()) throw std::invalid_argument("no methods requested");
  const DsbmSpec spec = build_scenario(scenario);
  const SearchGrid grid = make_grid(spec.num_times(), options.c_star);

  ExperimentReport report;
  report.scenario = scenario;
  report.tau_index = spec.change_index();
  report.num_communities = spec.num_communities();
  report.replicates = replicates;
  report.seed = seed;
  report.notes = scenario_notes(scenario);
  try {
    report.snr = snr_report(spec);
  } catch (const NuUndefined& e) {
    report.notes.emplace_back(e.what());
  }

  EstimatorOptions est;
  est.threads = 1;
  est.variant = options.variant;

  const auto reps = static_cast<std::size_t>(replicates);
  std::vector<std::vector<Trial>> trials(reps, std::vector<Trial>(methods.size()));
  report.series_digests.assign(reps, 0);
  // One replicate per task; estimators run single-threaded inside, so the
  // outcome only depends on the seeds.
  parallel_for(reps, options.threads, [&](std::size_t r) {
    const std::uint64_t rep_seed = derive_seed(seed, r);
    const AdjacencySeries series = sample_dsbm(spec, rep_seed, 1);
    report.series_digests[r] = series.digest();
    for (std::size_t mi = 0; mi < methods.size(); ++mi) {
      Trial& trial = trials[r][mi];
      const auto start = std::chrono::steady_clock::now();
      try {
        const ChangePointFit fit = run_method(
            methods[mi], series, spec, grid, method_seed(rep_seed, methods[mi]), est);
        trial.tau_index = fit.tau_index;
        trial.misclass_pre = misclassification(spec.pre_assignment(), fit.z_hat).rate;
        trial.misclass_post =
            misclassification(spec.post_assignment(), fit.w_hat).rate;
      } catch (const std::exception&) {
        trial.tau_index = 0;
      }
      trial.seconds = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    }
  });

  for (std::size_t mi = 0; mi < methods.size(); ++mi) {
    MethodOutcome outcome;
    outcome.method = methods[mi];
    int ok = 0;
    for (std::size_t r = 0; r < reps; ++r) {
      const Trial& t = trials[r][mi];
      ++outcome.frequencies[t.tau_index];
      outcome.seconds += t.seconds;
      if (t.tau_index == 0) {
        ++outcome.failures;
        continue;
      }
      ++ok;
      outcome.mean_misclass_pre += t.misclass_pre;
      outcome.mean_misclass_post += t.misclass_post;
    }
    if (ok > 0) {
      outcome.mean_misclass_pre /= ok;
      outcome.mean_misclass_post /= ok;
    }
    report.methods.push_back(std::move(outcome));
  }
  return report;
}

void write_report_csv(std::ostream& out,
                      const std::vector<ExperimentReport>& reports,
                      bool include_timing) {
  out << "scenario,m,n,K,tau_index,F_n,snr_er,snr_dsbm,a1_first,a1_second";
  const std::vector<MethodOutcome> none;
  const auto& columns = reports.empty() ? none : reports.front().methods;
  for (const auto& m : columns) {
    const std::string name(to_string(m.method));
    out << ',' << name << "_freq," << name << "_exact," << name
        << "_misclass_pre," << name << "_misclass_post," << name << "_failures";
    if (include_timing) out << ',' << name << "_seconds";
  }
  out << '\n';
  const auto optional_field = [](const std::optional<SnrReport>& snr,
                                 double SnrReport::*field) {
    return snr ? exact((*snr).*field) : std::string();
  };
  for (const auto& r : reports) {
    out << r.scenario.name << ',' << r.scenario.m << ',' << r.scenario.n << ','
        << r.num_communities << ',' << r.tau_index << ','
        << optional_field(r.snr, &SnrReport::gap) << ','
        << optional_field(r.snr, &SnrReport::snr_er) << ','
        << optional_field(r.snr, &SnrReport::snr_dsbm) << ','
        << optional_field(r.snr, &SnrReport::a1_first) << ','
        << optional_field(r.snr, &SnrReport::a1_second);
    for (const auto& column : columns) {
      const MethodOutcome* m = nullptr;
      for (const auto& candidate : r.methods) {
        if (candidate.method == column.method) m = &candidate;
      }
      if (m == nullptr) {
        out << ",,,,,";
        if (include_timing) out << ',';
        continue;
      }
      out << ",\"" << m->frequency_string() << "\"," << m->count_at(r.tau_index)
          << ',' << exact(m->mean_misclass_pre) << ','
          << exact(m->mean_misclass_post) << ',' << m->failures;
      if (include_timing) out << ',' << exact(m->seconds);
    }
    out << '\n';
  }
}

namespace {

void write_svg(const std::filesystem::path& path,
               const std::vector<ChangePointFit>& fits) {
  constexpr double kWidth = 640;
  constexpr double kHeight = 400;
  constexpr double kMargin = 50;
  static const char* const kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};

  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& fit : fits) {
    for (double v : fit.trajectory) {
      if (std::isnan(v)) continue;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  if (!std::isfinite(lo)) lo = hi = 0.0;
  if (hi - lo < 1e-12) hi = lo + 1.0;

  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<line x1=\"" << kMargin << "\" y1=\"" << kHeight - kMargin << "\" x2=\""
      << kWidth - kMargin << "\" y2=\"" << kHeight - kMargin
      << "\" stroke=\"black\"/>\n"
      << "<line x1=\"" << kMargin << "\" y1=\"" << kMargin << "\" x2=\""
      << kMargin << "\" y2=\"" << kHeight - kMargin << "\" stroke=\"black\"/>\n"
      << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 12
      << "\" text-anchor=\"middle\">b = t / n</text>\n"
      << "<text x=\"" << kMargin << "\" y=\"" << kMargin - 8 << "\">" << hi
      << "</text>\n"
      << "<text x=\"" << kMargin << "\" y=\"" << kHeight - kMargin + 16 << "\">"
      << lo << "</text>\n";
  const double span_x = kWidth - 2 * kMargin;
  const double span_y = kHeight - 2 * kMargin;
  for (std::size_t f = 0; f < fits.size(); ++f) {
    const auto& fit = fits[f];
    const char* color = kColors[f % 4];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" points=\"";
    for (std::size_t i = 0; i < fit.trajectory.size(); ++i) {
      const double v = fit.trajectory[i];
      if (std::isnan(v)) continue;
      const double b = static_cast<double>(fit.grid.t_min() + static_cast<int>(i)) /
                       fit.num_times;
      out << kMargin + b * span_x << ',' << kHeight - kMargin - (v - lo) / (hi - lo) * span_y
          << ' ';
    }
    out << "\"/>\n<text x=\"" << kWidth - kMargin - 90 << "\" y=\""
        << kMargin + 16 * static_cast<double>(f) << "\" fill=\"" << color << "\">"
        << to_string(fit.method) << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace

void emit_trajectory(std::ostream& csv, const AdjacencySeries& series,
                     const TrajectoryRequest& request,
                     const std::optional<std::filesystem::path>& svg_path) {
  const SearchGrid grid = make_grid(series.num_times(), request.c_star);
  std::vector<ChangePointFit> fits;
  for (Method method : request.methods) {
    const std::uint64_t seed = method_seed(request.seed, method);
    switch (method) {
      case Method::kKnown:
        if (!request.z || !request.w) {
          throw std::invalid_argument("known-community trajectory needs z and w");
        }
        fits.push_back(estimate_known(series, *request.z, *request.w, grid));
        break;
      case Method::kEveryPoint:
        fits.push_back(estimate_every_time_point(series, request.k, grid, seed));
        break;
      case Method::kTwoStep:
        fits.push_back(estimate_2step(series, request.k, grid, seed));
        break;
      case Method::kBoundary:
        fits.push_back(estimate_boundary_variant(series, request.k, grid, seed));
        break;
    }
  }
  csv << "method,t_break,b,criterion\n";
  const auto precision = csv.precision(17);
  for (const auto& fit : fits) {
    for (std::size_t i = 0; i < fit.trajectory.size(); ++i) {
      const int t = fit.grid.t_min() + static_cast<int>(i);
      csv << to_string(fit.method) << ',' << t << ','
          << static_cast<double>(t) / fit.num_times << ',';
      if (!std::isnan(fit.trajectory[i])) csv << fit.trajectory[i];
      csv << '\n';
    }
  }
  csv.precision(precision);
  if (svg_path) write_svg(*svg_path, fits);
}

}  // namespace dsbm
