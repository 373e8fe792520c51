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

// Power allocation for the network-coded strategies.
//
// The sum-throughput objective is a sum of min{.,.} terms and is not concave in
// the precoder magnitudes, so the optimizer is a deterministic derivative-free
// search: a coarse grid over an angle parameterization of the power
// constraint, followed by shrinking local refinement around the best grid
// local maxima. In equality mode the refinement follows the ridges of the
// objective (outer search over theta1, inner search over theta2); in
// inequality mode it is a compass search over (p1, theta1, p2, theta2) seeded
// with the equality optimum. `oracle_grid` is an exhaustive dense grid kept separate from the
// optimizer for verification.

#include <cstddef>
#include <optional>

#include "coopnc/model.hpp"
#include "coopnc/rates.hpp"

namespace coopnc {

struct OptimizerSettings {
  int grid_points_per_axis = 25;
  /// Minimum number of refinement rounds; each round halves the probe step.
  int refine_rounds = 3;
  /// b/s/Hz. After refine_rounds rounds, refinement continues while a round
  /// improves by at least this much or the step is still above 1/1024 of the
  /// angle range (bounded by 16 extra rounds).
  double tolerance = 1e-4;
  NormMode norm_mode = NormMode::Equality;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;

  friend bool operator==(const OptimizerSettings&, const OptimizerSettings&) = default;
};

struct AllocationResult {
  PowerAllocation best_alloc = PowerAllocation(1, 0, 0, 1);
  std::optional<DpcOrderingPair> best_ordering;  ///< set for DPC only
  double objective = 0.0;                        ///< network throughput at the argmax
  std::size_t evaluations = 0;
};

enum class NcStrategy : std::uint8_t { Lnc, Dpc };

/// I_LNC(s1; y_D1) + I_LNC(s2; y_D2).
double objective_lnc(const ChannelRealization& ch, SnrPoint snr, const PowerAllocation& alloc);

/// I_DPC(s1; y_D1) + I_DPC(s2; y_D2) for a fixed ordering pair.
double objective_dpc(const ChannelRealization& ch, SnrPoint snr, const PowerAllocation& alloc,
                     DpcOrderingPair ordering);

AllocationResult optimize_lnc(const ChannelRealization& ch, SnrPoint snr,
                              const OptimizerSettings& settings = {});

/// Searches each of the four ordering pairs and keeps the best; ties go to the
/// lower ordering index.
AllocationResult optimize_dpc(const ChannelRealization& ch, SnrPoint snr,
                              const OptimizerSettings& settings = {});

/// DPC power search with the ordering pair held fixed.
AllocationResult optimize_dpc_fixed(const ChannelRealization& ch, SnrPoint snr,
                                    DpcOrderingPair ordering,
                                    const OptimizerSettings& settings = {});

/// Exhaustive equality-mode grid with angles stepped by resolution * pi/2 over
/// [0, pi/2] (the endpoint is always included). Probe order is lexicographic
/// over (theta1 index, theta2 index, ordering index); the first maximum wins.
/// Throws std::invalid_argument unless 0 < resolution <= 0.1; `allow_coarse`
/// lifts the upper bound for small-scale enumeration checks.
AllocationResult oracle_grid(const ChannelRealization& ch, SnrPoint snr, double resolution,
                             NcStrategy strategy, bool allow_coarse = false);

}  // namespace coopnc
