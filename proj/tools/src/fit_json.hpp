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
#include <string>

#include <json.hpp>

#include "dsbm/cpd/estimators.hpp"

namespace dsbm::cli {

// Fit files carry everything the bootstrap needs: the break, the grid,
// both community assignments (1-based) and both block-mean matrices.
nlohmann::json fit_to_json(const ChangePointFit& fit);
ChangePointFit fit_from_json(const nlohmann::json& doc);

void save_fit(const std::filesystem::path& path, const ChangePointFit& fit);
ChangePointFit load_fit(const std::filesystem::path& path);

}  // namespace dsbm::cli
