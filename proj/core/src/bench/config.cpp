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

#include "dsbm/bench/config.hpp"

#include <yaml-cpp/yaml.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dsbm {
namespace {

std::string exact(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

YAML::Node matrix_node(const Eigen::MatrixXd& m) {
  YAML::Node rows(YAML::NodeType::Sequence);
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    YAML::Node row(YAML::NodeType::Sequence);
    row.SetStyle(YAML::EmitterStyle::Flow);
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(exact(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Eigen::MatrixXd parse_matrix(const YAML::Node& node, const char* what) {
  if (!node.IsSequence() || node.size() == 0) {
    throw std::invalid_argument(std::string(what) + " must be a list of rows");
  }
  const auto rows = static_cast<Eigen::Index>(node.size());
  const auto cols = static_cast<Eigen::Index>(node[0].size());
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const YAML::Node row = node[static_cast<std::size_t>(r)];
    if (!row.IsSequence() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw std::invalid_argument(std::string(what) + " rows must have equal length");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      m(r, c) = row[static_cast<std::size_t>(c)].as<double>();
    }
  }
  return m;
}

YAML::Node labels_node(const std::vector<int>& labels) {
  YAML::Node node(YAML::NodeType::Sequence);
  node.SetStyle(YAML::EmitterStyle::Flow);
  for (int l : labels) node.push_back(l);
  return node;
}

std::vector<int> one_based(const CommunityAssignment& a) {
  std::vector<int> out;
  out.reserve(a.labels().size());
  for (int l : a.labels()) out.push_back(l + 1);
  return out;
}

template <typename T>
void read_if(const YAML::Node& node, const char* key, T& target) {
  if (node[key]) target = node[key].as<T>();
}

ScenarioSpec scenario_from_node(const YAML::Node& node) {
  if (!node.IsMap()) throw std::invalid_argument("scenario must be a mapping");
  static const char* const kKeys[] = {
      "name",   "m",     "n",     "tau",   "delta", "lambda",
      "p1",     "within", "between", "shift", "shift_over_sqrt_n",
      "pre_labels", "post_labels", "pre_matrix", "post_matrix"};
  for (const auto& kv : node) {
    const auto key = kv.first.as<std::string>();
    bool known = false;
    for (const char* k : kKeys) known = known || key == k;
    if (!known) throw std::invalid_argument("unknown scenario key '" + key + "'");
  }
  ScenarioSpec s;
  read_if(node, "name", s.name);
  read_if(node, "m", s.m);
  read_if(node, "n", s.n);
  read_if(node, "tau", s.tau);
  read_if(node, "delta", s.delta);
  read_if(node, "lambda", s.lambda);
  read_if(node, "p1", s.p1);
  read_if(node, "within", s.within);
  read_if(node, "between", s.between);
  read_if(node, "shift", s.shift);
  read_if(node, "shift_over_sqrt_n", s.shift_over_sqrt_n);
  read_if(node, "pre_labels", s.pre_labels);
  read_if(node, "post_labels", s.post_labels);
  if (node["pre_matrix"]) s.pre_matrix = parse_matrix(node["pre_matrix"], "pre_matrix");
  if (node["post_matrix"]) {
    s.post_matrix = parse_matrix(node["post_matrix"], "post_matrix");
  }
  return s;
}

YAML::Node scenario_node(const ScenarioSpec& s) {
  YAML::Node node;
  node["name"] = s.name;
  node["m"] = s.m;
  node["n"] = s.n;
  node["tau"] = exact(s.tau);
  node["delta"] = exact(s.delta);
  node["lambda"] = exact(s.lambda);
  node["p1"] = exact(s.p1);
  node["within"] = exact(s.within);
  node["between"] = exact(s.between);
  node["shift"] = exact(s.shift);
  node["shift_over_sqrt_n"] = exact(s.shift_over_sqrt_n);
  if (!s.pre_labels.empty()) node["pre_labels"] = labels_node(s.pre_labels);
  if (!s.post_labels.empty()) node["post_labels"] = labels_node(s.post_labels);
  if (s.pre_matrix) node["pre_matrix"] = matrix_node(*s.pre_matrix);
  if (s.post_matrix) node["post_matrix"] = matrix_node(*s.post_matrix);
  return node;
}

std::string emit(const YAML::Node& node) {
  YAML::Emitter out;
  out << node;
  return std::string(out.c_str()) + "\n";
}

YAML::Node load(const std::string& text) {
  try {
    return YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw std::invalid_argument(std::string("invalid YAML: ") + e.what());
  }
}

}  // namespace

ScenarioSpec parse_scenario_yaml(const std::string& yaml_text) {
  try {
    return scenario_from_node(load(yaml_text));
  } catch (const YAML::Exception& e) {
    throw std::invalid_argument(std::string("bad scenario: ") + e.what());
  }
}

std::string to_yaml(const ScenarioSpec& spec) { return emit(scenario_node(spec)); }

RunConfig parse_run_config(const std::string& yaml_text) {
  const YAML::Node root = load(yaml_text);
  RunConfig config;
  if (root.IsNull()) return config;
  if (!root.IsMap()) throw std::invalid_argument("config must be a mapping");
  try {
    for (const auto& kv : root) {
      const auto key = kv.first.as<std::string>();
      if (key == "scenario") {
        config.scenario = scenario_from_node(kv.second);
      } else if (key == "methods") {
        config.methods.clear();
        for (const auto& m : kv.second) {
          config.methods.push_back(parse_method(m.as<std::string>()));
        }
      } else if (key == "reps") {
        config.reps = kv.second.as<int>();
      } else if (key == "seed") {
        config.seed = kv.second.as<std::uint64_t>();
      } else if (key == "threads") {
        config.threads = kv.second.as<int>();
      } else if (key == "grid") {
        if (kv.second["c_star"]) config.c_star = kv.second["c_star"].as<double>();
      } else if (key == "variant") {
        config.variant = parse_cluster_variant(kv.second.as<std::string>());
      } else {
        throw std::invalid_argument("unknown config key '" + key + "'");
      }
    }
  } catch (const YAML::Exception& e) {
    throw std::invalid_argument(std::string("bad config: ") + e.what());
  }
  return config;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_run_config(buf.str());
}

std::string to_yaml(const RunConfig& config) {
  YAML::Node root;
  root["scenario"] = scenario_node(config.scenario);
  YAML::Node methods(YAML::NodeType::Sequence);
  methods.SetStyle(YAML::EmitterStyle::Flow);
  for (Method m : config.methods) methods.push_back(std::string(to_string(m)));
  root["methods"] = methods;
  root["reps"] = config.reps;
  root["seed"] = config.seed;
  root["threads"] = config.threads;
  if (config.c_star) root["grid"]["c_star"] = exact(*config.c_star);
  root["variant"] = std::string(to_string(config.variant));
  return emit(root);
}

std::string to_yaml(const DsbmSpec& spec) {
  YAML::Node root;
  root["m"] = spec.num_nodes();
  root["n"] = spec.num_times();
  root["tau"] = exact(spec.tau());
  root["K"] = spec.num_communities();
  root["z"] = labels_node(one_based(spec.pre_assignment()));
  root["w"] = labels_node(one_based(spec.post_assignment()));
  root["Lambda"] = matrix_node(spec.pre_matrix().entries());
  root["Delta"] = matrix_node(spec.post_matrix().entries());
  return emit(root);
}

DsbmSpec parse_dsbm_spec_yaml(const std::string& yaml_text) {
  try {
    const YAML::Node root = load(yaml_text);
    const int k = root["K"].as<int>();
    const auto z = root["z"].as<std::vector<int>>();
    const auto w = root["w"].as<std::vector<int>>();
    return {CommunityAssignment::from_one_based(z, k),
            BlockMatrix::nominal(parse_matrix(root["Lambda"], "Lambda")),
            CommunityAssignment::from_one_based(w, k),
            BlockMatrix::nominal(parse_matrix(root["Delta"], "Delta")),
            root["tau"].as<double>(), root["n"].as<int>()};
  } catch (const YAML::Exception& e) {
    throw std::invalid_argument(std::string("bad model file: ") + e.what());
  }
}

}  // namespace dsbm
