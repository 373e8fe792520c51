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

// Standalone SVG line charts of sweep and CDF results.

#include <filesystem>
#include <map>
#include <string>

#include "coopnc/montecarlo.hpp"

namespace coopnc {

enum class SweepMetric : std::uint8_t { NetworkThroughput, UserThroughput, Outage };

/// Outage probabilities of zero are drawn at 1 / (10 n_trials) on the log axis.
constexpr double outage_floor(std::size_t n_trials) {
  return 1.0 / (10.0 * static_cast<double>(n_trials));
}

/// One polyline per strategy over SNR. Throws std::invalid_argument on an
/// empty result, or for SweepMetric::Outage when outage was not computed.
std::string render_svg(const SweepResult& result, SweepMetric metric);

/// One polyline per strategy, throughput vs empirical CDF.
std::string render_svg(const std::map<StrategyId, CdfResult>& cdfs);

void render_svg(const SweepResult& result, SweepMetric metric, const std::filesystem::path& path);
void render_svg(const std::map<StrategyId, CdfResult>& cdfs, const std::filesystem::path& path);

}  // namespace coopnc
