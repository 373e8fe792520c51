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

// Monte Carlo estimation over Rayleigh fading.
//
// Each trial draws one channel realization which is shared by every strategy
// and every SNR point of the sweep (common random numbers). Trials are
// independent and may run on several threads; reductions always walk the
// trials in index order so results are bit-identical for any thread count.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "coopnc/allocator.hpp"
#include "coopnc/model.hpp"
#include "coopnc/rates.hpp"

namespace coopnc {

struct MonteCarloPlan {
  std::size_t n_trials = 10000;
  std::uint64_t master_seed = 0;
  std::vector<double> snr_grid_db;
  std::vector<StrategyId> strategies{kAllStrategies.begin(), kAllStrategies.end()};
  OptimizerSettings optimizer;
  std::optional<OutageSpec> outage;

  /// Throws std::invalid_argument if n_trials is 0, the SNR grid is not
  /// strictly increasing and finite, or the strategy list is empty or
  /// contains duplicates.
  void validate() const;

  friend bool operator==(const MonteCarloPlan&, const MonteCarloPlan&) = default;
};

/// Worker threads for trial evaluation; 0 selects the hardware concurrency.
struct ExecutionOptions {
  unsigned threads = 0;
};

struct SweepRow {
  double snr_db = 0.0;
  StrategyId strategy = StrategyId::Rdf;
  double mean_network_throughput = 0.0;
  double se_network_throughput = 0.0;
  std::array<double, 2> mean_user_throughput{};
  std::array<double, 2> se_user_throughput{};
  std::optional<std::array<double, 2>> outage_probability;  ///< per user
  std::size_t n_trials = 0;

  /// Outage of User1, the reported figure for symmetric networks.
  std::optional<double> outage() const {
    if (!outage_probability) return std::nullopt;
    return (*outage_probability)[0];
  }
  /// Binomial standard error of the User1 outage estimate.
  double outage_se() const;
};

struct SweepResult {
  /// Ordered by (snr_db ascending, strategy enum order).
  std::vector<SweepRow> rows;

  const SweepRow* find(double snr_db, StrategyId strategy) const;
};

struct CdfResult {
  std::vector<double> values;     ///< nondecreasing samples
  std::vector<double> ordinates;  ///< k / n, k = 1..n

  /// Fraction of samples <= x.
  double at(double x) const;
  /// Fraction of samples < x.
  double below(double x) const;
  double median() const;
};

/// Raw per-trial samples, indexed [trial][snr][strategy slot].
struct TrialSamples {
  struct Entry {
    std::array<double, 2> mutual_info{};
    std::array<double, 2> throughput{};
    double network_throughput = 0.0;
  };
  std::vector<double> snr_grid_db;
  std::vector<StrategyId> strategies;
  std::size_t n_trials = 0;
  std::vector<Entry> entries;

  const Entry& at(std::size_t trial, std::size_t snr, std::size_t strategy) const {
    return entries[(trial * snr_grid_db.size() + snr) * strategies.size() + strategy];
  }
};

/// Draws trial `trial_index`. Link gains come from independent substreams
/// keyed by (master_seed, trial_index, link ordinal).
ChannelRealization sample_channel(const FadingProfile& profile, std::uint64_t trial_index,
                                  std::uint64_t master_seed);

/// Evaluates the requested strategies on one channel. LNC and DPC use the
/// optimizer's allocation (and ordering) for this channel and SNR.
std::map<StrategyId, RateReport> run_trial(const ChannelRealization& ch, SnrPoint snr,
                                           const std::vector<StrategyId>& strategies,
                                           const OptimizerSettings& optimizer);

TrialSamples collect_samples(const MonteCarloPlan& plan, const FadingProfile& profile,
                             const ExecutionOptions& exec = {});

SweepResult summarize(const TrialSamples& samples, const std::optional<OutageSpec>& outage);

SweepResult sweep(const MonteCarloPlan& plan, const FadingProfile& profile,
                  const ExecutionOptions& exec = {});

/// CDF of User1's per-user throughput at one SNR, per strategy in the plan.
/// The plan's SNR grid is ignored.
std::map<StrategyId, CdfResult> empirical_cdf(const MonteCarloPlan& plan,
                                              const FadingProfile& profile, double snr_db,
                                              const ExecutionOptions& exec = {});

CdfResult make_cdf(std::vector<double> samples);

}  // namespace coopnc
