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

#include "coopnc/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace coopnc {

namespace {

using nlohmann::json;

std::string join(const std::string& prefix, std::string_view key) {
  return prefix.empty() ? std::string(key) : prefix + "." + std::string(key);
}

[[noreturn]] void fail(ConfigErrorKind kind, const std::string& key, const std::string& what) {
  throw ConfigError(kind, key, key.empty() ? what : key + ": " + what);
}

void reject_unknown(const json& obj, const std::string& prefix,
                    std::initializer_list<std::string_view> allowed) {
  for (const auto& [k, _] : obj.items()) {
    bool known = false;
    for (std::string_view a : allowed) known = known || a == k;
    if (!known) fail(ConfigErrorKind::UnknownKey, join(prefix, k), "unknown key");
  }
}

const json& require_object(const json& value, const std::string& key) {
  if (!value.is_object()) fail(ConfigErrorKind::WrongType, key, "expected an object");
  return value;
}

double as_number(const json& value, const std::string& key) {
  if (!value.is_number()) fail(ConfigErrorKind::WrongType, key, "expected a number");
  return value.get<double>();
}

std::uint64_t as_unsigned(const json& value, const std::string& key) {
  if (!value.is_number_unsigned()) {
    fail(ConfigErrorKind::WrongType, key, "expected a nonnegative integer");
  }
  return value.get<std::uint64_t>();
}

std::string as_string(const json& value, const std::string& key) {
  if (!value.is_string()) fail(ConfigErrorKind::WrongType, key, "expected a string");
  return value.get<std::string>();
}

double positive(const json& value, const std::string& key) {
  const double x = as_number(value, key);
  if (!(x > 0.0) || !std::isfinite(x)) fail(ConfigErrorKind::InvalidValue, key, "must be > 0");
  return x;
}

FadingProfile parse_fading(const json& node) {
  const std::string prefix = "fading";
  require_object(node, prefix);
  reject_unknown(node, prefix, {"variances", "noise_variance"});

  std::array<double, kNumLinks> variances;
  variances.fill(1.0);
  if (node.contains("variances")) {
    const std::string vkey = join(prefix, "variances");
    const json& v = require_object(node.at("variances"), vkey);
    for (const auto& [name, value] : v.items()) {
      const auto link = parse_link(name);
      if (!link) fail(ConfigErrorKind::UnknownKey, join(vkey, name), "unknown link");
      variances[ordinal(*link)] = positive(value, join(vkey, name));
    }
  }
  double noise = 1.0;
  if (node.contains("noise_variance")) {
    noise = positive(node.at("noise_variance"), join(prefix, "noise_variance"));
  }
  return FadingProfile(variances, noise);
}

OptimizerSettings parse_optimizer(const json& node) {
  const std::string prefix = "optimizer";
  require_object(node, prefix);
  reject_unknown(node, prefix, {"grid_points_per_axis", "refine_rounds", "tolerance", "norm_mode"});

  OptimizerSettings s;
  if (node.contains("grid_points_per_axis")) {
    const std::string key = join(prefix, "grid_points_per_axis");
    const std::uint64_t n = as_unsigned(node.at("grid_points_per_axis"), key);
    if (n < 2 || n > 4096) fail(ConfigErrorKind::InvalidValue, key, "must be in [2, 4096]");
    s.grid_points_per_axis = static_cast<int>(n);
  }
  if (node.contains("refine_rounds")) {
    const std::string key = join(prefix, "refine_rounds");
    const std::uint64_t n = as_unsigned(node.at("refine_rounds"), key);
    if (n > 64) fail(ConfigErrorKind::InvalidValue, key, "must be in [0, 64]");
    s.refine_rounds = static_cast<int>(n);
  }
  if (node.contains("tolerance")) {
    s.tolerance = positive(node.at("tolerance"), join(prefix, "tolerance"));
  }
  if (node.contains("norm_mode")) {
    const std::string key = join(prefix, "norm_mode");
    const auto mode = parse_norm_mode(as_string(node.at("norm_mode"), key));
    if (!mode) fail(ConfigErrorKind::InvalidValue, key, "expected \"equality\" or \"inequality\"");
    s.norm_mode = *mode;
  }
  return s;
}

OutageSpec parse_outage(const json& node) {
  const std::string prefix = "outage";
  require_object(node, prefix);
  reject_unknown(node, prefix, {"target_rate", "bandwidth"});
  if (!node.contains("target_rate")) {
    fail(ConfigErrorKind::MissingKey, join(prefix, "target_rate"), "missing required key");
  }
  const double r = positive(node.at("target_rate"), join(prefix, "target_rate"));
  double w = 1.0;
  if (node.contains("bandwidth")) w = positive(node.at("bandwidth"), join(prefix, "bandwidth"));
  return OutageSpec(r, w);
}

RunConfig from_json(const json& root) {
  require_object(root, "");
  reject_unknown(root, "", {"seed", "snr_grid_db", "n_trials", "strategies", "fading", "optimizer",
                            "outage", "output"});

  RunConfig config;
  MonteCarloPlan& plan = config.plan;

  if (!root.contains("seed")) fail(ConfigErrorKind::MissingKey, "seed", "missing required key");
  plan.master_seed = as_unsigned(root.at("seed"), "seed");

  if (!root.contains("snr_grid_db")) {
    fail(ConfigErrorKind::MissingKey, "snr_grid_db", "missing required key");
  }
  const json& grid = root.at("snr_grid_db");
  if (!grid.is_array()) fail(ConfigErrorKind::WrongType, "snr_grid_db", "expected an array");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const std::string key = "snr_grid_db[" + std::to_string(i) + "]";
    const double db = as_number(grid[i], key);
    if (!std::isfinite(db)) fail(ConfigErrorKind::InvalidValue, key, "must be finite");
    if (!plan.snr_grid_db.empty() && !(db > plan.snr_grid_db.back())) {
      fail(ConfigErrorKind::InvalidValue, "snr_grid_db", "must be strictly increasing");
    }
    plan.snr_grid_db.push_back(db);
  }

  if (root.contains("n_trials")) {
    plan.n_trials = static_cast<std::size_t>(as_unsigned(root.at("n_trials"), "n_trials"));
    if (plan.n_trials == 0) fail(ConfigErrorKind::InvalidValue, "n_trials", "must be >= 1");
  }

  if (root.contains("strategies")) {
    const json& list = root.at("strategies");
    if (!list.is_array()) fail(ConfigErrorKind::WrongType, "strategies", "expected an array");
    plan.strategies.clear();
    std::set<StrategyId> seen;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string key = "strategies[" + std::to_string(i) + "]";
      const auto s = parse_strategy(as_string(list[i], key));
      if (!s) fail(ConfigErrorKind::InvalidValue, key, "unknown strategy");
      if (!seen.insert(*s).second) fail(ConfigErrorKind::InvalidValue, key, "duplicate strategy");
      plan.strategies.push_back(*s);
    }
    if (plan.strategies.empty()) {
      fail(ConfigErrorKind::InvalidValue, "strategies", "at least one strategy is required");
    }
  }

  if (root.contains("fading")) config.profile = parse_fading(root.at("fading"));
  if (root.contains("optimizer")) plan.optimizer = parse_optimizer(root.at("optimizer"));
  if (root.contains("outage")) plan.outage = parse_outage(root.at("outage"));

  if (root.contains("output")) {
    const json& out = require_object(root.at("output"), "output");
    reject_unknown(out, "output", {"csv", "svg"});
    if (out.contains("csv")) config.csv_path = as_string(out.at("csv"), "output.csv");
    if (out.contains("svg")) config.svg_path = as_string(out.at("svg"), "output.svg");
  }
  return config;
}

}  // namespace

ConfigError::ConfigError(ConfigErrorKind kind, std::string key, const std::string& message)
    : std::runtime_error(message), kind_(kind), key_(std::move(key)) {}

RunConfig parse_config(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ConfigErrorKind::Syntax, "", std::string("malformed JSON: ") + e.what());
  }
  return from_json(root);
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ConfigErrorKind::MissingFile, "", "cannot open config file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::string serialize_config(const RunConfig& config) {
  const MonteCarloPlan& plan = config.plan;
  json root = json::object();
  root["seed"] = plan.master_seed;
  root["snr_grid_db"] = plan.snr_grid_db;
  root["n_trials"] = plan.n_trials;
  json strategies = json::array();
  for (StrategyId s : plan.strategies) strategies.push_back(std::string(to_string(s)));
  root["strategies"] = strategies;

  json variances = json::object();
  for (LinkId link : kAllLinks) {
    variances[std::string(to_string(link))] = config.profile.variance(link);
  }
  root["fading"] = {{"variances", variances},
                    {"noise_variance", config.profile.noise_variance()}};

  root["optimizer"] = {{"grid_points_per_axis", plan.optimizer.grid_points_per_axis},
                       {"refine_rounds", plan.optimizer.refine_rounds},
                       {"tolerance", plan.optimizer.tolerance},
                       {"norm_mode", std::string(to_string(plan.optimizer.norm_mode))}};
  if (plan.outage) {
    root["outage"] = {{"target_rate", plan.outage->target_rate()},
                      {"bandwidth", plan.outage->bandwidth()}};
  }
  if (config.csv_path || config.svg_path) {
    json out = json::object();
    if (config.csv_path) out["csv"] = *config.csv_path;
    if (config.svg_path) out["svg"] = *config.svg_path;
    root["output"] = out;
  }
  return root.dump(2) + "\n";
}

}  // namespace coopnc
