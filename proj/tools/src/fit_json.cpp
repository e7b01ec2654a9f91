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

#include "fit_json.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace dsbm::cli {
namespace {

nlohmann::json matrix_json(const BlockMatrix& b) {
  nlohmann::json rows = nlohmann::json::array();
  for (int u = 0; u < b.size(); ++u) {
    nlohmann::json row = nlohmann::json::array();
    for (int v = 0; v < b.size(); ++v) row.push_back(b(u, v));
    rows.push_back(std::move(row));
  }
  return rows;
}

BlockMatrix matrix_from_json(const nlohmann::json& rows) {
  const auto k = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd m(k, k);
  for (Eigen::Index u = 0; u < k; ++u) {
    const auto& row = rows.at(static_cast<std::size_t>(u));
    if (static_cast<Eigen::Index>(row.size()) != k) {
      throw std::invalid_argument("fit file: block matrix is not square");
    }
    for (Eigen::Index v = 0; v < k; ++v) {
      m(u, v) = row.at(static_cast<std::size_t>(v)).get<double>();
    }
  }
  return BlockMatrix::nominal(std::move(m));
}

nlohmann::json labels_json(const CommunityAssignment& a) {
  nlohmann::json out = nlohmann::json::array();
  for (int l : a.labels()) out.push_back(l + 1);
  return out;
}

}  // namespace

nlohmann::json fit_to_json(const ChangePointFit& fit) {
  nlohmann::json doc;
  doc["method"] = std::string(to_string(fit.method));
  doc["num_times"] = fit.num_times;
  doc["tau_index"] = fit.tau_index;
  doc["tau_hat"] = fit.tau_hat;
  doc["grid"] = {{"t_min", fit.grid.t_min()}, {"t_max", fit.grid.t_max()}};
  if (fit.grid.c_star()) doc["grid"]["c_star"] = *fit.grid.c_star();
  nlohmann::json trajectory = nlohmann::json::array();
  for (double v : fit.trajectory) {
    trajectory.push_back(std::isnan(v) ? nlohmann::json(nullptr) : nlohmann::json(v));
  }
  doc["trajectory"] = std::move(trajectory);
  doc["K"] = fit.num_communities();
  doc["z_hat"] = labels_json(fit.z_hat);
  doc["w_hat"] = labels_json(fit.w_hat);
  doc["lambda_hat"] = matrix_json(fit.lambda_hat);
  doc["delta_hat"] = matrix_json(fit.delta_hat);
  doc["warnings"] = fit.warnings;
  return doc;
}

ChangePointFit fit_from_json(const nlohmann::json& doc) {
  try {
    ChangePointFit fit;
    fit.method = parse_method(doc.at("method").get<std::string>());
    fit.num_times = doc.at("num_times").get<int>();
    fit.tau_index = doc.at("tau_index").get<int>();
    fit.tau_hat = doc.at("tau_hat").get<double>();
    const auto& grid = doc.at("grid");
    fit.grid = grid.contains("c_star")
                   ? SearchGrid::with_boundary(fit.num_times,
                                               grid["c_star"].get<double>())
                   : SearchGrid::range(fit.num_times, grid.at("t_min").get<int>(),
                                       grid.at("t_max").get<int>());
    for (const auto& v : doc.at("trajectory")) {
      fit.trajectory.push_back(v.is_null() ? std::numeric_limits<double>::quiet_NaN()
                                           : v.get<double>());
    }
    const int k = doc.at("K").get<int>();
    fit.z_hat = CommunityAssignment::from_one_based(
        doc.at("z_hat").get<std::vector<int>>(), k);
    fit.w_hat = CommunityAssignment::from_one_based(
        doc.at("w_hat").get<std::vector<int>>(), k);
    fit.lambda_hat = matrix_from_json(doc.at("lambda_hat"));
    fit.delta_hat = matrix_from_json(doc.at("delta_hat"));
    if (doc.contains("warnings")) {
      fit.warnings = doc["warnings"].get<std::vector<std::string>>();
    }
    return fit;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("fit file: ") + e.what());
  }
}

void save_fit(const std::filesystem::path& path, const ChangePointFit& fit) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << fit_to_json(fit).dump(2) << '\n';
}

ChangePointFit load_fit(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return fit_from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
}

}  // namespace dsbm::cli
