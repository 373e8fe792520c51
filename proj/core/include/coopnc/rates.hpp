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

// Achievable-rate expressions for the four cooperative strategies.
//
// All values are in b/s/Hz with base-2 logarithms. The per-user mutual
// informations returned here already contain the 1/2 factor of the
// two-block schedule. User2 values are obtained by evaluating the User1
// expression on the mirrored channel/allocation/ordering.

#include <array>
#include <optional>

#include "coopnc/model.hpp"

namespace coopnc {

/// Which side of the min{relay decoding, destination decoding} binds.
enum class Binding : std::uint8_t { RelayLimited, DestinationLimited };

/// The two arguments of the min, each already scaled by 1/2.
struct RateTerms {
  double relay = 0.0;
  double destination = 0.0;

  double value() const { return relay < destination ? relay : destination; }
  Binding binding() const {
    return relay < destination ? Binding::RelayLimited : Binding::DestinationLimited;
  }
};

RateTerms rdf_terms(const ChannelRealization& ch, SnrPoint snr, UserId user);
RateTerms pdf_terms(const ChannelRealization& ch, SnrPoint snr, UserId user);
RateTerms lnc_terms(const ChannelRealization& ch, SnrPoint snr, const PowerAllocation& alloc,
                    UserId user);
RateTerms dpc_terms(const ChannelRealization& ch, SnrPoint snr, const PowerAllocation& alloc,
                    DpcOrderingPair ordering, UserId user);

/// Repetition decode-and-forward over orthogonal blocks.
double mutual_info_rdf(const ChannelRealization& ch, SnrPoint snr, UserId user);

/// Parallel-channel decode-and-forward over orthogonal blocks.
double mutual_info_pdf(const ChannelRealization& ch, SnrPoint snr, UserId user);

/// Linear network coding with repetition DF. The destination treats the
/// partner's codeword in each block as Gaussian noise.
double mutual_info_lnc(const ChannelRealization& ch, SnrPoint snr, const PowerAllocation& alloc,
                       UserId user);

/// Dirty-paper network coding with parallel DF under the given orderings.
double mutual_info_dpc(const ChannelRealization& ch, SnrPoint snr, const PowerAllocation& alloc,
                       DpcOrderingPair ordering, UserId user);

/// SINR of the codeword sent by `source` towards `destination` under DPC.
double dpc_sinr(const ChannelRealization& ch, SnrPoint snr, const PowerAllocation& alloc,
                DpcOrderingPair ordering, UserId source, UserId destination);

struct RateReport {
  StrategyId strategy = StrategyId::Rdf;
  std::array<double, 2> mutual_info{};   ///< indexed by ordinal(UserId)
  std::array<double, 2> throughput{};    ///< I/2 for RDF/PDF, I for LNC/DPC
  std::array<Binding, 2> binding{};
  double network_throughput = 0.0;

  double mutual_info_of(UserId u) const { return mutual_info[ordinal(u)]; }
  double throughput_of(UserId u) const { return throughput[ordinal(u)]; }
};

/// Per-user throughput factor applied to the mutual information.
constexpr double throughput_factor(StrategyId s) { return is_orthogonal(s) ? 0.5 : 1.0; }

/// Evaluates one strategy. `alloc` is required for LNC/DPC, `ordering` for
/// DPC only; supplying either where the strategy does not use it throws
/// std::invalid_argument, as does omitting a required one.
RateReport rate_report(StrategyId strategy, const ChannelRealization& ch, SnrPoint snr,
                       const std::optional<PowerAllocation>& alloc = std::nullopt,
                       const std::optional<DpcOrderingPair>& ordering = std::nullopt);

}  // namespace coopnc
