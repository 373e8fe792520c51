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

#include "coopnc/csv.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace coopnc {

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = line.find(sep, start);
    fields.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return fields;
}

double parse_double(std::string_view field, std::size_t line_no) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw std::runtime_error("csv line " + std::to_string(line_no) + ": bad number '" +
                             std::string(field) + "'");
  }
  return value;
}

}  // namespace

std::string format_number(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 9);
  if (ec != std::errc()) throw std::runtime_error("number formatting failed");
  return std::string(buf.data(), ptr);
}

std::string format_csv(const SweepResult& result) {
  std::string out(kSweepCsvHeader);
  out += '\n';
  for (const SweepRow& row : result.rows) {
    out += format_number(row.snr_db);
    out += ',';
    out += to_string(row.strategy);
    out += ',';
    out += format_number(row.mean_network_throughput);
    out += ',';
    out += format_number(row.se_network_throughput);
    out += ',';
    out += format_number(row.mean_user_throughput[0]);
    out += ',';
    out += format_number(row.se_user_throughput[0]);
    out += ',';
    if (const auto p = row.outage()) out += format_number(*p);
    out += '\n';
  }
  return out;
}

std::string format_csv(const std::map<StrategyId, CdfResult>& cdfs) {
  std::string out(kCdfCsvHeader);
  out += '\n';
  for (const auto& [strategy, cdf] : cdfs) {
    for (std::size_t k = 0; k < cdf.values.size(); ++k) {
      out += to_string(strategy);
      out += ',';
      out += format_number(cdf.values[k]);
      out += ',';
      out += format_number(cdf.ordinates[k]);
      out += '\n';
    }
  }
  return out;
}

void write_text(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) throw std::runtime_error("write to " + path.string() + " failed");
}

void write_csv(const SweepResult& result, const std::filesystem::path& path) {
  write_text(path, format_csv(result));
}

void write_csv(const std::map<StrategyId, CdfResult>& cdfs, const std::filesystem::path& path) {
  write_text(path, format_csv(cdfs));
}

std::vector<SweepRow> parse_sweep_csv(std::string_view text) {
  std::vector<SweepRow> rows;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (line_no == 1) {
      if (line != kSweepCsvHeader) throw std::runtime_error("unexpected sweep csv header");
      continue;
    }
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 7) {
      throw std::runtime_error("csv line " + std::to_string(line_no) + ": expected 7 fields");
    }
    SweepRow row;
    row.snr_db = parse_double(f[0], line_no);
    const auto strategy = parse_strategy(f[1]);
    if (!strategy) {
      throw std::runtime_error("csv line " + std::to_string(line_no) + ": unknown strategy");
    }
    row.strategy = *strategy;
    row.mean_network_throughput = parse_double(f[2], line_no);
    row.se_network_throughput = parse_double(f[3], line_no);
    row.mean_user_throughput[0] = parse_double(f[4], line_no);
    row.se_user_throughput[0] = parse_double(f[5], line_no);
    if (!f[6].empty()) {
      const double p = parse_double(f[6], line_no);
      row.outage_probability = std::array<double, 2>{p, std::numeric_limits<double>::quiet_NaN()};
    }
    rows.push_back(row);
  }
  if (line_no == 0) throw std::runtime_error("empty sweep csv");
  return rows;
}

std::vector<SweepRow> read_sweep_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_sweep_csv(buffer.str());
}

}  // namespace coopnc
