/*
 Copyright 2026 The seirs-control Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "seirs/model.hpp"

namespace seirs {

// Flat `key = value` config with keys mu, nu, gamma, epsilon, b0, b1, c1,
// phi, s. Every key is required exactly once; `#` starts a comment.
Params parse_params(std::string_view text);
Params load_params(const std::filesystem::path& path);

std::string format_params(const Params& params);
void save_params(const std::filesystem::path& path, const Params& params);

/// Full-precision decimal rendering used by every text output.
std::string format_double(double value);

}  // namespace seirs
