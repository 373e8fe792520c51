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

#include <benchmark/benchmark.h>

#include "coopnc/coopnc.hpp"

namespace {

using namespace coopnc;

ChannelRealization channel(std::uint64_t trial) {
  return sample_channel(FadingProfile::symmetric(), trial, 1234);
}

void BM_SampleChannel(benchmark::State& state) {
  const auto profile = FadingProfile::symmetric();
  std::uint64_t t = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample_channel(profile, t++, 1234));
}
BENCHMARK(BM_SampleChannel);

void BM_RateReport(benchmark::State& state) {
  const auto strategy = static_cast<StrategyId>(state.range(0));
  const auto ch = channel(0);
  const SnrPoint snr = SnrPoint::from_db(10.0);
  std::optional<PowerAllocation> alloc;
  std::optional<DpcOrderingPair> ordering;
  if (!is_orthogonal(strategy)) alloc = PowerAllocation::from_angles(0.4, 1.1);
  if (strategy == StrategyId::DpcNcPdf) ordering = DpcOrderingPair{};
  for (auto _ : state) benchmark::DoNotOptimize(rate_report(strategy, ch, snr, alloc, ordering));
  state.SetLabel(std::string(to_string(strategy)));
}
BENCHMARK(BM_RateReport)->DenseRange(0, 3);

void BM_OptimizeLnc(benchmark::State& state) {
  const SnrPoint snr = SnrPoint::from_db(static_cast<double>(state.range(0)));
  std::uint64_t t = 0;
  for (auto _ : state) benchmark::DoNotOptimize(optimize_lnc(channel(t++ % 64), snr));
}
BENCHMARK(BM_OptimizeLnc)->Arg(0)->Arg(10)->Arg(20)->Unit(benchmark::kMicrosecond);

void BM_OptimizeDpc(benchmark::State& state) {
  const SnrPoint snr = SnrPoint::from_db(static_cast<double>(state.range(0)));
  std::uint64_t t = 0;
  for (auto _ : state) benchmark::DoNotOptimize(optimize_dpc(channel(t++ % 64), snr));
}
BENCHMARK(BM_OptimizeDpc)->Arg(0)->Arg(10)->Arg(20)->Unit(benchmark::kMicrosecond);

void BM_OptimizeDpcInequality(benchmark::State& state) {
  OptimizerSettings s;
  s.norm_mode = NormMode::Inequality;
  s.grid_points_per_axis = static_cast<int>(state.range(0));
  const SnrPoint snr = SnrPoint::from_db(10.0);
  std::uint64_t t = 0;
  for (auto _ : state) benchmark::DoNotOptimize(optimize_dpc(channel(t++ % 64), snr, s));
}
BENCHMARK(BM_OptimizeDpcInequality)->Arg(9)->Arg(25)->Unit(benchmark::kMillisecond);

void BM_OracleDpc(benchmark::State& state) {
  const auto ch = channel(0);
  const SnrPoint snr = SnrPoint::from_db(10.0);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_grid(ch, snr, 0.005, NcStrategy::Dpc));
}
BENCHMARK(BM_OracleDpc)->Unit(benchmark::kMillisecond);

void BM_Sweep(benchmark::State& state) {
  MonteCarloPlan plan;
  plan.n_trials = static_cast<std::size_t>(state.range(0));
  plan.master_seed = 5;
  plan.snr_grid_db = {0, 10, 20};
  plan.outage = OutageSpec(1.0);
  for (auto _ : state) benchmark::DoNotOptimize(sweep(plan, FadingProfile::symmetric(), {1}));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sweep)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
