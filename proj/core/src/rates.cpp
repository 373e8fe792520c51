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

#include "coopnc/rates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace coopnc {

namespace {

double log2_1p(double x) { return std::log1p(x) * std::numbers::log2e; }

// Received SNR rho*|h|^2*f^2 on `link` for precoder amplitude f.
double snr_on(const ChannelRealization& ch, SnrPoint snr, LinkId link, double f) {
  return snr.rho() * ch.gain2(link) * f * f;
}

// Signal at amplitude `f_signal` against interference at amplitude `f_interf`
// from the same transmitter over the same link.
double sinr_on(const ChannelRealization& ch, SnrPoint snr, LinkId link, double f_signal,
               double f_interf) {
  return snr_on(ch, snr, link, f_signal) / (1.0 + snr_on(ch, snr, link, f_interf));
}

// The User1 expressions. User2 goes through the mirrored inputs.

RateTerms rdf_user1(const ChannelRealization& ch, SnrPoint snr) {
  const double rho = snr.rho();
  return {0.5 * log2_1p(rho * ch.gain2(LinkId::S1toS2)),
          0.5 * log2_1p(rho * ch.gain2(LinkId::S1toD1) + rho * ch.gain2(LinkId::S2toD1))};
}

RateTerms pdf_user1(const ChannelRealization& ch, SnrPoint snr) {
  const double rho = snr.rho();
  return {0.5 * log2_1p(rho * ch.gain2(LinkId::S1toS2)),
          0.5 * (log2_1p(rho * ch.gain2(LinkId::S1toD1)) +
                 log2_1p(rho * ch.gain2(LinkId::S2toD1)))};
}

RateTerms lnc_user1(const ChannelRealization& ch, SnrPoint snr, const PowerAllocation& a) {
  const double own = sinr_on(ch, snr, LinkId::S1toD1, a.f11(), a.f12());
  const double relayed = sinr_on(ch, snr, LinkId::S2toD1, a.f21(), a.f22());
  return {0.5 * log2_1p(snr_on(ch, snr, LinkId::S1toS2, a.f11())),
          0.5 * log2_1p(own + relayed)};
}

double dpc_sinr_to_d1(const ChannelRealization& ch, SnrPoint snr, const PowerAllocation& a,
                      DpcOrderingPair ordering, UserId source) {
  const bool from_s1 = source == UserId::User1;
  const LinkId link = from_s1 ? LinkId::S1toD1 : LinkId::S2toD1;
  const double f_signal = from_s1 ? a.f11() : a.f21();
  if (ordering.for_source(source) == DpcFavor::D1) return snr_on(ch, snr, link, f_signal);
  const double f_interf = from_s1 ? a.f12() : a.f22();
  return sinr_on(ch, snr, link, f_signal, f_interf);
}

RateTerms dpc_user1(const ChannelRealization& ch, SnrPoint snr, const PowerAllocation& a,
                    DpcOrderingPair ordering) {
  const double sinr11 = dpc_sinr_to_d1(ch, snr, a, ordering, UserId::User1);
  const double sinr21 = dpc_sinr_to_d1(ch, snr, a, ordering, UserId::User2);
  return {0.5 * log2_1p(snr_on(ch, snr, LinkId::S1toS2, a.f11())),
          0.5 * (log2_1p(sinr11) + log2_1p(sinr21))};
}

}  // namespace

RateTerms rdf_terms(const ChannelRealization& ch, SnrPoint snr, UserId user) {
  return user == UserId::User1 ? rdf_user1(ch, snr) : rdf_user1(ch.mirrored(), snr);
}

RateTerms pdf_terms(const ChannelRealization& ch, SnrPoint snr, UserId user) {
  return user == UserId::User1 ? pdf_user1(ch, snr) : pdf_user1(ch.mirrored(), snr);
}

RateTerms lnc_terms(const ChannelRealization& ch, SnrPoint snr, const PowerAllocation& alloc,
                    UserId user) {
  return user == UserId::User1 ? lnc_user1(ch, snr, alloc)
                               : lnc_user1(ch.mirrored(), snr, alloc.mirrored());
}

RateTerms dpc_terms(const ChannelRealization& ch, SnrPoint snr, const PowerAllocation& alloc,
                    DpcOrderingPair ordering, UserId user) {
  return user == UserId::User1
             ? dpc_user1(ch, snr, alloc, ordering)
             : dpc_user1(ch.mirrored(), snr, alloc.mirrored(), ordering.mirrored());
}

double mutual_info_rdf(const ChannelRealization& ch, SnrPoint snr, UserId user) {
  return rdf_terms(ch, snr, user).value();
}

double mutual_info_pdf(const ChannelRealization& ch, SnrPoint snr, UserId user) {
  return pdf_terms(ch, snr, user).value();
}

double mutual_info_lnc(const ChannelRealization& ch, SnrPoint snr, const PowerAllocation& alloc,
                       UserId user) {
  return lnc_terms(ch, snr, alloc, user).value();
}

double mutual_info_dpc(const ChannelRealization& ch, SnrPoint snr, const PowerAllocation& alloc,
                       DpcOrderingPair ordering, UserId user) {
  return dpc_terms(ch, snr, alloc, ordering, user).value();
}

double dpc_sinr(const ChannelRealization& ch, SnrPoint snr, const PowerAllocation& alloc,
                DpcOrderingPair ordering, UserId source, UserId destination) {
  if (destination == UserId::User1) return dpc_sinr_to_d1(ch, snr, alloc, ordering, source);
  return dpc_sinr_to_d1(ch.mirrored(), snr, alloc.mirrored(), ordering.mirrored(),
                        complement(source));
}

RateReport rate_report(StrategyId strategy, const ChannelRealization& ch, SnrPoint snr,
                       const std::optional<PowerAllocation>& alloc,
                       const std::optional<DpcOrderingPair>& ordering) {
  const bool needs_alloc = !is_orthogonal(strategy);
  const bool needs_ordering = strategy == StrategyId::DpcNcPdf;
  if (needs_alloc != alloc.has_value()) {
    throw std::invalid_argument(std::string(to_string(strategy)) +
                                (needs_alloc ? " requires a power allocation"
                                             : " does not take a power allocation"));
  }
  if (needs_ordering != ordering.has_value()) {
    throw std::invalid_argument(std::string(to_string(strategy)) +
                                (needs_ordering ? " requires a DPC ordering"
                                                : " does not take a DPC ordering"));
  }

  RateReport report;
  report.strategy = strategy;
  for (UserId user : {UserId::User1, UserId::User2}) {
    RateTerms terms;
    switch (strategy) {
      case StrategyId::Rdf: terms = rdf_terms(ch, snr, user); break;
      case StrategyId::Pdf: terms = pdf_terms(ch, snr, user); break;
      case StrategyId::LncRdf: terms = lnc_terms(ch, snr, *alloc, user); break;
      case StrategyId::DpcNcPdf: terms = dpc_terms(ch, snr, *alloc, *ordering, user); break;
    }
    const std::size_t u = ordinal(user);
    report.mutual_info[u] = terms.value();
    report.binding[u] = terms.binding();
    report.throughput[u] = throughput_factor(strategy) * report.mutual_info[u];
  }
  report.network_throughput = report.throughput[0] + report.throughput[1];
  return report;
}

}  // namespace coopnc
