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

#include "coopnc/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "coopnc/rng.hpp"

namespace coopnc {

namespace {

// Trials handed to a worker at a time.
constexpr std::size_t kChunk = 16;

std::vector<StrategyId> enum_ordered(std::vector<StrategyId> strategies) {
  std::sort(strategies.begin(), strategies.end(),
            [](StrategyId a, StrategyId b) { return ordinal(a) < ordinal(b); });
  return strategies;
}

unsigned worker_count(const ExecutionOptions& exec, std::size_t n_trials) {
  unsigned threads = exec.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t chunks = (n_trials + kChunk - 1) / kChunk;
  return static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(chunks, 1)));
}

struct Moments {
  double mean = 0.0;
  double se = 0.0;
};

// Two-pass mean and standard error, summed in trial order.
template <typename Get>
Moments moments(std::size_t n, Get get) {
  double sum = 0.0;
  for (std::size_t t = 0; t < n; ++t) sum += get(t);
  const double mean = sum / static_cast<double>(n);
  if (n < 2) return {mean, 0.0};
  double ss = 0.0;
  for (std::size_t t = 0; t < n; ++t) {
    const double d = get(t) - mean;
    ss += d * d;
  }
  const double var = ss / static_cast<double>(n - 1);
  return {mean, std::sqrt(var / static_cast<double>(n))};
}

}  // namespace

void MonteCarloPlan::validate() const {
  if (n_trials == 0) throw std::invalid_argument("n_trials must be >= 1");
  for (std::size_t i = 0; i < snr_grid_db.size(); ++i) {
    if (!std::isfinite(snr_grid_db[i])) throw std::invalid_argument("snr_grid_db must be finite");
    if (i > 0 && !(snr_grid_db[i] > snr_grid_db[i - 1])) {
      throw std::invalid_argument("snr_grid_db must be strictly increasing");
    }
  }
  if (strategies.empty()) throw std::invalid_argument("at least one strategy is required");
  const auto sorted = enum_ordered(strategies);
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("duplicate strategy in plan");
  }
  optimizer.validate();
}

double SweepRow::outage_se() const {
  const auto p = outage();
  if (!p || n_trials == 0) return 0.0;
  return std::sqrt(*p * (1.0 - *p) / static_cast<double>(n_trials));
}

const SweepRow* SweepResult::find(double snr_db, StrategyId strategy) const {
  for (const SweepRow& row : rows) {
    if (row.snr_db == snr_db && row.strategy == strategy) return &row;
  }
  return nullptr;
}

double CdfResult::at(double x) const {
  if (values.empty()) return 0.0;
  const auto it = std::upper_bound(values.begin(), values.end(), x);
  return static_cast<double>(it - values.begin()) / static_cast<double>(values.size());
}

double CdfResult::below(double x) const {
  if (values.empty()) return 0.0;
  const auto it = std::lower_bound(values.begin(), values.end(), x);
  return static_cast<double>(it - values.begin()) / static_cast<double>(values.size());
}

double CdfResult::median() const {
  if (values.empty()) throw std::logic_error("median of an empty CDF");
  const std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

CdfResult make_cdf(std::vector<double> samples) {
  CdfResult cdf;
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  cdf.ordinates.reserve(samples.size());
  for (std::size_t k = 1; k <= samples.size(); ++k) {
    cdf.ordinates.push_back(static_cast<double>(k) / n);
  }
  cdf.values = std::move(samples);
  return cdf;
}

ChannelRealization sample_channel(const FadingProfile& profile, std::uint64_t trial_index,
                                  std::uint64_t master_seed) {
  std::array<std::complex<double>, kNumLinks> gains;
  for (LinkId link : kAllLinks) {
    CounterStream stream(substream_key(master_seed, trial_index, ordinal(link)));
    gains[ordinal(link)] = complex_gaussian(stream, profile.variance(link));
  }
  return ChannelRealization(gains);
}

std::map<StrategyId, RateReport> run_trial(const ChannelRealization& ch, SnrPoint snr,
                                           const std::vector<StrategyId>& strategies,
                                           const OptimizerSettings& optimizer) {
  std::map<StrategyId, RateReport> reports;
  for (StrategyId s : strategies) {
    switch (s) {
      case StrategyId::Rdf:
      case StrategyId::Pdf:
        reports[s] = rate_report(s, ch, snr);
        break;
      case StrategyId::LncRdf: {
        const AllocationResult r = optimize_lnc(ch, snr, optimizer);
        reports[s] = rate_report(s, ch, snr, r.best_alloc);
        break;
      }
      case StrategyId::DpcNcPdf: {
        const AllocationResult r = optimize_dpc(ch, snr, optimizer);
        reports[s] = rate_report(s, ch, snr, r.best_alloc, r.best_ordering);
        break;
      }
    }
  }
  return reports;
}

TrialSamples collect_samples(const MonteCarloPlan& plan, const FadingProfile& profile,
                             const ExecutionOptions& exec) {
  plan.validate();

  TrialSamples samples;
  samples.snr_grid_db = plan.snr_grid_db;
  samples.strategies = enum_ordered(plan.strategies);
  samples.n_trials = plan.n_trials;
  samples.entries.resize(plan.n_trials * plan.snr_grid_db.size() * samples.strategies.size());

  std::vector<SnrPoint> snrs;
  for (double db : plan.snr_grid_db) snrs.push_back(db_to_linear(db));

  const std::size_t per_trial = snrs.size() * samples.strategies.size();
  auto run_one = [&](std::size_t trial) {
    const ChannelRealization ch = sample_channel(profile, trial, plan.master_seed);
    TrialSamples::Entry* out = samples.entries.data() + trial * per_trial;
    for (const SnrPoint& snr : snrs) {
      const auto reports = run_trial(ch, snr, samples.strategies, plan.optimizer);
      for (StrategyId s : samples.strategies) {
        const RateReport& r = reports.at(s);
        *out++ = {r.mutual_info, r.throughput, r.network_throughput};
      }
    }
  };

  const unsigned workers = worker_count(exec, plan.n_trials);
  if (workers <= 1) {
    for (std::size_t t = 0; t < plan.n_trials; ++t) run_one(t);
    return samples;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        try {
          for (;;) {
            const std::size_t begin = next.fetch_add(kChunk);
            if (begin >= plan.n_trials) break;
            const std::size_t end = std::min(begin + kChunk, plan.n_trials);
            for (std::size_t t = begin; t < end; ++t) run_one(t);
          }
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return samples;
}

SweepResult summarize(const TrialSamples& samples, const std::optional<OutageSpec>& outage) {
  SweepResult result;
  const std::size_t n = samples.n_trials;
  for (std::size_t i = 0; i < samples.snr_grid_db.size(); ++i) {
    for (std::size_t j = 0; j < samples.strategies.size(); ++j) {
      const StrategyId strategy = samples.strategies[j];
      auto entry = [&](std::size_t t) -> const TrialSamples::Entry& {
        return samples.at(t, i, j);
      };

      SweepRow row;
      row.snr_db = samples.snr_grid_db[i];
      row.strategy = strategy;
      row.n_trials = n;
      const Moments net = moments(n, [&](std::size_t t) { return entry(t).network_throughput; });
      row.mean_network_throughput = net.mean;
      row.se_network_throughput = net.se;
      for (std::size_t u = 0; u < 2; ++u) {
        const Moments m = moments(n, [&](std::size_t t) { return entry(t).throughput[u]; });
        row.mean_user_throughput[u] = m.mean;
        row.se_user_throughput[u] = m.se;
      }
      if (outage) {
        const double threshold = outage->threshold(strategy);
        std::array<double, 2> p{};
        for (std::size_t u = 0; u < 2; ++u) {
          std::size_t count = 0;
          for (std::size_t t = 0; t < n; ++t) {
            if (entry(t).mutual_info[u] < threshold) ++count;
          }
          p[u] = static_cast<double>(count) / static_cast<double>(n);
        }
        row.outage_probability = p;
      }
      result.rows.push_back(row);
    }
  }
  return result;
}

SweepResult sweep(const MonteCarloPlan& plan, const FadingProfile& profile,
                  const ExecutionOptions& exec) {
  return summarize(collect_samples(plan, profile, exec), plan.outage);
}

std::map<StrategyId, CdfResult> empirical_cdf(const MonteCarloPlan& plan,
                                              const FadingProfile& profile, double snr_db,
                                              const ExecutionOptions& exec) {
  if (!std::isfinite(snr_db)) throw std::invalid_argument("snr_db must be finite");
  MonteCarloPlan single = plan;
  single.snr_grid_db = {snr_db};
  const TrialSamples samples = collect_samples(single, profile, exec);

  std::map<StrategyId, CdfResult> cdfs;
  for (std::size_t j = 0; j < samples.strategies.size(); ++j) {
    std::vector<double> values;
    values.reserve(samples.n_trials);
    for (std::size_t t = 0; t < samples.n_trials; ++t) {
      values.push_back(samples.at(t, 0, j).throughput[ordinal(UserId::User1)]);
    }
    cdfs.emplace(samples.strategies[j], make_cdf(std::move(values)));
  }
  return cdfs;
}

}  // namespace coopnc
