/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 The coopnc Authors. All rights reserved.
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// Run configuration stored as JSON.
//
//   {
//     "seed": 7,                          required, unsigned 64-bit
//     "snr_grid_db": [0, 10, 20],         required, strictly increasing
//     "n_trials": 10000,
//     "strategies": ["rdf", "pdf", "lnc-rdf", "dpc-nc-pdf"],
//     "fading": {
//       "variances": {"s1_s2": 1, "s2_s1": 1, "s1_d1": 1,
//                     "s1_d2": 1, "s2_d1": 1, "s2_d2": 1},
//       "noise_variance": 1
//     },
//     "optimizer": {"grid_points_per_axis": 25, "refine_rounds": 3,
//                   "tolerance": 1e-4, "norm_mode": "equality"},
//     "outage": {"target_rate": 1, "bandwidth": 1},
//     "output": {"csv": "out.csv", "svg": "out.svg"}
//   }
//
// Every key except seed and snr_grid_db is optional. Unknown keys are errors.

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "coopnc/model.hpp"
#include "coopnc/montecarlo.hpp"

namespace coopnc {

struct RunConfig {
  FadingProfile profile = FadingProfile::symmetric();
  MonteCarloPlan plan;
  std::optional<std::string> csv_path;
  std::optional<std::string> svg_path;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

enum class ConfigErrorKind : std::uint8_t {
  MissingFile,
  Syntax,
  MissingKey,
  UnknownKey,
  WrongType,
  InvalidValue,
};

class ConfigError : public std::runtime_error {
 public:
  ConfigError(ConfigErrorKind kind, std::string key, const std::string& message);

  ConfigErrorKind kind() const { return kind_; }
  /// Dotted path of the offending key, e.g. "fading.variances.s1_d1".
  const std::string& key() const { return key_; }

 private:
  ConfigErrorKind kind_;
  std::string key_;
};

RunConfig load_config(const std::filesystem::path& path);
RunConfig parse_config(std::string_view text);

/// Canonical JSON form with every field spelled out.
std::string serialize_config(const RunConfig& config);

}  // namespace coopnc
