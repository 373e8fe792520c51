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

// Domain types for the two-source / two-destination cooperative network.
//
// Sources S1, S2 alternate transmission blocks; each one relays its partner's
// previous message while sending its own. Destinations D1, D2 listen to both.
// Only squared link magnitudes and the input SNR enter the rate expressions,
// so everything here is a small immutable value type.

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace coopnc {

/// Directed links of the network. S1toS2 and S2toS1 are distinct channels.
enum class LinkId : std::uint8_t { S1toS2, S2toS1, S1toD1, S1toD2, S2toD1, S2toD2 };

inline constexpr std::size_t kNumLinks = 6;

inline constexpr std::array<LinkId, kNumLinks> kAllLinks = {
    LinkId::S1toS2, LinkId::S2toS1, LinkId::S1toD1,
    LinkId::S1toD2, LinkId::S2toD1, LinkId::S2toD2};

constexpr std::size_t ordinal(LinkId link) { return static_cast<std::size_t>(link); }

/// Config-file key for a link, e.g. "s1_d2".
std::string_view to_string(LinkId link);
std::optional<LinkId> parse_link(std::string_view name);

/// Image of a link under the relabeling S1<->S2, D1<->D2.
constexpr LinkId mirror(LinkId link) {
  switch (link) {
    case LinkId::S1toS2: return LinkId::S2toS1;
    case LinkId::S2toS1: return LinkId::S1toS2;
    case LinkId::S1toD1: return LinkId::S2toD2;
    case LinkId::S1toD2: return LinkId::S2toD1;
    case LinkId::S2toD1: return LinkId::S1toD2;
    case LinkId::S2toD2: return LinkId::S1toD1;
  }
  return link;
}

enum class UserId : std::uint8_t { User1, User2 };

constexpr UserId complement(UserId user) {
  return user == UserId::User1 ? UserId::User2 : UserId::User1;
}
constexpr std::size_t ordinal(UserId user) { return static_cast<std::size_t>(user); }

enum class StrategyId : std::uint8_t { Rdf, Pdf, LncRdf, DpcNcPdf };

inline constexpr std::array<StrategyId, 4> kAllStrategies = {
    StrategyId::Rdf, StrategyId::Pdf, StrategyId::LncRdf, StrategyId::DpcNcPdf};

constexpr std::size_t ordinal(StrategyId s) { return static_cast<std::size_t>(s); }

/// Machine-readable names: rdf, pdf, lnc-rdf, dpc-nc-pdf.
std::string_view to_string(StrategyId strategy);
std::optional<StrategyId> parse_strategy(std::string_view name);

/// True for the orthogonal schemes, which use half the degrees of freedom
/// per destination.
constexpr bool is_orthogonal(StrategyId s) {
  return s == StrategyId::Rdf || s == StrategyId::Pdf;
}

/// Per-link Rayleigh variances and receiver noise variance.
class FadingProfile {
 public:
  /// Throws std::invalid_argument if any variance is not finite and positive.
  FadingProfile(const std::array<double, kNumLinks>& variances, double noise_variance = 1.0);

  static FadingProfile symmetric(double variance = 1.0, double noise_variance = 1.0);

  double variance(LinkId link) const { return variances_[ordinal(link)]; }
  const std::array<double, kNumLinks>& variances() const { return variances_; }
  double noise_variance() const { return noise_variance_; }
  bool is_symmetric() const;

  friend bool operator==(const FadingProfile&, const FadingProfile&) = default;

 private:
  std::array<double, kNumLinks> variances_;
  double noise_variance_;
};

/// One draw of the six complex link gains.
class ChannelRealization {
 public:
  ChannelRealization() = default;
  explicit ChannelRealization(const std::array<std::complex<double>, kNumLinks>& gains);

  /// Builds a channel with real nonnegative gains sqrt(g) for given power gains g.
  /// Throws std::invalid_argument on negative or non-finite entries.
  static ChannelRealization from_power_gains(const std::array<double, kNumLinks>& power_gains);

  std::complex<double> gain(LinkId link) const { return gains_[ordinal(link)]; }
  double gain2(LinkId link) const { return std::norm(gains_[ordinal(link)]); }

  /// Channel seen after relabeling S1<->S2, D1<->D2.
  ChannelRealization mirrored() const;

  friend bool operator==(const ChannelRealization&, const ChannelRealization&) = default;

 private:
  std::array<std::complex<double>, kNumLinks> gains_{};
};

/// Linear input SNR rho = 2P / (W sigma^2).
class SnrPoint {
 public:
  /// Throws std::invalid_argument unless rho is finite and >= 0.
  static SnrPoint from_linear(double rho);
  /// Throws std::invalid_argument unless db is finite.
  static SnrPoint from_db(double db);

  double rho() const { return rho_; }
  double db() const;

  friend bool operator==(const SnrPoint&, const SnrPoint&) = default;

 private:
  explicit SnrPoint(double rho) : rho_(rho) {}
  double rho_ = 0.0;
};

SnrPoint db_to_linear(double snr_db);

enum class NormMode : std::uint8_t { Equality, Inequality };

std::string_view to_string(NormMode mode);
std::optional<NormMode> parse_norm_mode(std::string_view name);

/// Tolerance used when checking the per-source power constraint.
inline constexpr double kNormTolerance = 1e-9;

/// Precoder magnitudes. Row i is the precoder of source S_i, f_ij the share of
/// S_i's power (as amplitude) given to the codeword intended for D_j.
class PowerAllocation {
 public:
  /// Throws std::invalid_argument if an entry lies outside [0, 1] or a row
  /// violates the constraint of `mode`.
  PowerAllocation(double f11, double f12, double f21, double f22,
                  NormMode mode = NormMode::Equality);

  /// Equality-mode allocation on the unit circle: [cos t1, sin t1], [cos t2, sin t2].
  /// Endpoints 0 and pi/2 map to exact zeros and ones.
  static PowerAllocation from_angles(double theta1, double theta2);

  /// Inequality-mode allocation with row powers p1, p2 in [0, 1].
  static PowerAllocation from_polar(double p1, double theta1, double p2, double theta2);

  double f11() const { return f_[0]; }
  double f12() const { return f_[1]; }
  double f21() const { return f_[2]; }
  double f22() const { return f_[3]; }
  double row_power(UserId source) const;
  NormMode mode() const { return mode_; }

  /// f11<->f22, f12<->f21.
  PowerAllocation mirrored() const;

  /// The four [1,0]/[0,1] per-source combinations, lexicographic order.
  static std::array<PowerAllocation, 4> corners();

  friend bool operator==(const PowerAllocation&, const PowerAllocation&) = default;

 private:
  struct Unchecked {};
  PowerAllocation(const std::array<double, 4>& f, NormMode mode, Unchecked)
      : f_(f), mode_(mode) {}

  std::array<double, 4> f_;
  NormMode mode_;
};

/// Which destination a source encodes second (so it sees no interference
/// from that source's other codeword).
enum class DpcFavor : std::uint8_t { D1, D2 };

constexpr DpcFavor flip(DpcFavor f) { return f == DpcFavor::D1 ? DpcFavor::D2 : DpcFavor::D1; }

struct DpcOrderingPair {
  DpcFavor pi1 = DpcFavor::D1;
  DpcFavor pi2 = DpcFavor::D1;

  DpcFavor for_source(UserId source) const { return source == UserId::User1 ? pi1 : pi2; }

  DpcOrderingPair mirrored() const { return {flip(pi2), flip(pi1)}; }

  /// Index in enumeration order (D1,D1), (D1,D2), (D2,D1), (D2,D2).
  std::size_t index() const {
    return 2 * static_cast<std::size_t>(pi1) + static_cast<std::size_t>(pi2);
  }

  static constexpr std::array<DpcOrderingPair, 4> all() {
    return {{{DpcFavor::D1, DpcFavor::D1},
             {DpcFavor::D1, DpcFavor::D2},
             {DpcFavor::D2, DpcFavor::D1},
             {DpcFavor::D2, DpcFavor::D2}}};
  }

  friend bool operator==(const DpcOrderingPair&, const DpcOrderingPair&) = default;
};

/// "d1" / "d2".
std::string_view to_string(DpcFavor favor);
std::optional<DpcFavor> parse_favor(std::string_view name);

/// Target rate r (b/s) and bandwidth W (Hz) with the derived spectral
/// efficiency thresholds R = r/(W/2) for orthogonal schemes and R' = r/W for
/// network-coded schemes.
class OutageSpec {
 public:
  /// Throws std::invalid_argument unless both arguments are finite and > 0.
  explicit OutageSpec(double target_rate, double bandwidth = 1.0);

  double target_rate() const { return target_rate_; }
  double bandwidth() const { return bandwidth_; }
  double threshold_orthogonal() const { return 2.0 * threshold_nc(); }
  double threshold_nc() const { return target_rate_ / bandwidth_; }
  double threshold(StrategyId strategy) const {
    return is_orthogonal(strategy) ? threshold_orthogonal() : threshold_nc();
  }

  friend bool operator==(const OutageSpec&, const OutageSpec&) = default;

 private:
  double target_rate_;
  double bandwidth_;
};

}  // namespace coopnc
