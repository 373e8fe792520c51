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

// Counter-based random streams. Every draw is a pure function of
// (master seed, trial index, stream index, counter), so results do not depend
// on the order in which trials are evaluated or on the number of workers.
//
// Gaussian variates use Box-Muller on top of the stream instead of
// std::normal_distribution, whose algorithm is implementation defined; this
// keeps golden outputs identical across standard libraries.

#include <complex>
#include <cstdint>

namespace coopnc {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Key of the substream (seed, trial, stream).
std::uint64_t substream_key(std::uint64_t master_seed, std::uint64_t trial_index,
                            std::uint64_t stream_index);

class CounterStream {
 public:
  explicit CounterStream(std::uint64_t key) : key_(key) {}

  std::uint64_t next_u64();
  /// Uniform on (0, 1] with 53-bit resolution.
  double next_open_unit();
  /// Uniform on [0, 1) with 53-bit resolution.
  double next_unit();

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Circularly-symmetric complex Gaussian with E|h|^2 = variance.
std::complex<double> complex_gaussian(CounterStream& stream, double variance);

}  // namespace coopnc
