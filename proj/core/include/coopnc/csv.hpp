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

// CSV output. Numbers use 9 significant digits in the shortest of fixed or
// scientific notation ('.' decimal separator), fields are comma separated and
// lines end with LF. Output is byte-stable for identical inputs.

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "coopnc/montecarlo.hpp"

namespace coopnc {

inline constexpr std::string_view kSweepCsvHeader =
    "snr_db,strategy,mean_network_throughput,se_network_throughput,"
    "mean_user_throughput,se_user_throughput,outage_probability";

inline constexpr std::string_view kCdfCsvHeader = "strategy,throughput,cdf";

std::string format_number(double value);

/// Rows ordered by (snr_db, strategy); the user columns report User1 and the
/// outage column is empty when no outage spec was given.
std::string format_csv(const SweepResult& result);

/// One row per sample, strategies in enum order.
std::string format_csv(const std::map<StrategyId, CdfResult>& cdfs);

/// Throws std::runtime_error on I/O failure.
void write_csv(const SweepResult& result, const std::filesystem::path& path);
void write_csv(const std::map<StrategyId, CdfResult>& cdfs, const std::filesystem::path& path);

/// Parses a sweep CSV back. Only the User1 columns are recovered; the User2
/// outage entry is NaN and the User2 means and errors are zero.
std::vector<SweepRow> read_sweep_csv(const std::filesystem::path& path);
std::vector<SweepRow> parse_sweep_csv(std::string_view text);

/// Writes `content` to `path` byte for byte.
void write_text(const std::filesystem::path& path, std::string_view content);

}  // namespace coopnc
