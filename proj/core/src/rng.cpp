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

#include "coopnc/rng.hpp"

#include <cmath>
#include <numbers>

namespace coopnc {

namespace {
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
constexpr double kTwoPow53Inv = 1.0 / 9007199254740992.0;
}  // namespace

std::uint64_t substream_key(std::uint64_t master_seed, std::uint64_t trial_index,
                            std::uint64_t stream_index) {
  std::uint64_t k = mix64(master_seed + kGolden);
  k = mix64(k ^ mix64(trial_index + 2 * kGolden));
  k = mix64(k ^ mix64(stream_index + 3 * kGolden));
  return k;
}

std::uint64_t CounterStream::next_u64() {
  ++counter_;
  return mix64(key_ + counter_ * kGolden);
}

double CounterStream::next_open_unit() {
  return static_cast<double>((next_u64() >> 11) + 1) * kTwoPow53Inv;
}

double CounterStream::next_unit() { return static_cast<double>(next_u64() >> 11) * kTwoPow53Inv; }

std::complex<double> complex_gaussian(CounterStream& stream, double variance) {
  // |h|^2 = -variance * ln(u) is exactly exponential with mean `variance`.
  const double u = stream.next_open_unit();
  const double phase = 2.0 * std::numbers::pi * stream.next_unit();
  const double radius = std::sqrt(-variance * std::log(u));
  return std::polar(radius, phase);
}

}  // namespace coopnc
