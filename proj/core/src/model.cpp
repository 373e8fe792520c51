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

#include "coopnc/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace coopnc {

namespace {

constexpr std::array<std::string_view, kNumLinks> kLinkNames = {
    "s1_s2", "s2_s1", "s1_d1", "s1_d2", "s2_d1", "s2_d2"};

constexpr std::array<std::string_view, 4> kStrategyNames = {
    "rdf", "pdf", "lnc-rdf", "dpc-nc-pdf"};

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

// cos/sin on [0, pi/2] with exact values at the endpoints, so corner
// allocations reached through angles are bit-identical to the literal ones.
std::pair<double, double> unit_circle(double theta) {
  constexpr double kHalfPi = std::numbers::pi / 2.0;
  if (theta <= 0.0) return {1.0, 0.0};
  if (theta >= kHalfPi) return {0.0, 1.0};
  return {std::cos(theta), std::sin(theta)};
}

}  // namespace

std::string_view to_string(LinkId link) { return kLinkNames[ordinal(link)]; }

std::optional<LinkId> parse_link(std::string_view name) {
  for (LinkId link : kAllLinks) {
    if (kLinkNames[ordinal(link)] == name) return link;
  }
  return std::nullopt;
}

std::string_view to_string(StrategyId strategy) { return kStrategyNames[ordinal(strategy)]; }

std::optional<StrategyId> parse_strategy(std::string_view name) {
  for (StrategyId s : kAllStrategies) {
    if (kStrategyNames[ordinal(s)] == name) return s;
  }
  return std::nullopt;
}

std::string_view to_string(NormMode mode) {
  return mode == NormMode::Equality ? "equality" : "inequality";
}

std::optional<NormMode> parse_norm_mode(std::string_view name) {
  if (name == "equality") return NormMode::Equality;
  if (name == "inequality") return NormMode::Inequality;
  return std::nullopt;
}

std::string_view to_string(DpcFavor favor) { return favor == DpcFavor::D1 ? "d1" : "d2"; }

std::optional<DpcFavor> parse_favor(std::string_view name) {
  if (name == "d1") return DpcFavor::D1;
  if (name == "d2") return DpcFavor::D2;
  return std::nullopt;
}

// --- FadingProfile ---------------------------------------------------------

FadingProfile::FadingProfile(const std::array<double, kNumLinks>& variances,
                             double noise_variance)
    : variances_(variances), noise_variance_(noise_variance) {
  for (LinkId link : kAllLinks) {
    if (!positive_finite(variances_[ordinal(link)])) {
      throw std::invalid_argument("fading variance of link " + std::string(to_string(link)) +
                                  " must be finite and positive");
    }
  }
  if (!positive_finite(noise_variance_)) {
    throw std::invalid_argument("noise variance must be finite and positive");
  }
}

FadingProfile FadingProfile::symmetric(double variance, double noise_variance) {
  std::array<double, kNumLinks> v;
  v.fill(variance);
  return FadingProfile(v, noise_variance);
}

bool FadingProfile::is_symmetric() const {
  for (double v : variances_) {
    if (v != variances_[0]) return false;
  }
  return true;
}

// --- ChannelRealization ----------------------------------------------------

ChannelRealization::ChannelRealization(const std::array<std::complex<double>, kNumLinks>& gains)
    : gains_(gains) {}

ChannelRealization ChannelRealization::from_power_gains(
    const std::array<double, kNumLinks>& power_gains) {
  std::array<std::complex<double>, kNumLinks> gains;
  for (std::size_t i = 0; i < kNumLinks; ++i) {
    const double g = power_gains[i];
    if (!std::isfinite(g) || g < 0.0) {
      throw std::invalid_argument("power gain of link " + std::string(kLinkNames[i]) +
                                  " must be finite and nonnegative");
    }
    gains[i] = {std::sqrt(g), 0.0};
  }
  return ChannelRealization(gains);
}

ChannelRealization ChannelRealization::mirrored() const {
  std::array<std::complex<double>, kNumLinks> m;
  for (LinkId link : kAllLinks) m[ordinal(mirror(link))] = gains_[ordinal(link)];
  return ChannelRealization(m);
}

// --- SnrPoint --------------------------------------------------------------

SnrPoint SnrPoint::from_linear(double rho) {
  if (!std::isfinite(rho) || rho < 0.0) {
    throw std::invalid_argument("SNR must be finite and nonnegative");
  }
  return SnrPoint(rho);
}

SnrPoint SnrPoint::from_db(double db) {
  if (!std::isfinite(db)) throw std::invalid_argument("SNR in dB must be finite");
  return from_linear(std::pow(10.0, db / 10.0));
}

double SnrPoint::db() const { return 10.0 * std::log10(rho_); }

SnrPoint db_to_linear(double snr_db) { return SnrPoint::from_db(snr_db); }

// --- PowerAllocation -------------------------------------------------------

PowerAllocation::PowerAllocation(double f11, double f12, double f21, double f22, NormMode mode)
    : f_{f11, f12, f21, f22}, mode_(mode) {
  for (double f : f_) {
    if (!std::isfinite(f) || f < 0.0 || f > 1.0) {
      throw std::invalid_argument("precoder magnitudes must lie in [0, 1]");
    }
  }
  for (UserId source : {UserId::User1, UserId::User2}) {
    const double p = row_power(source);
    if (p > 1.0 + kNormTolerance) {
      throw std::invalid_argument("precoder row power exceeds 1");
    }
    if (mode_ == NormMode::Equality && std::abs(p - 1.0) > kNormTolerance) {
      throw std::invalid_argument("precoder row power must equal 1 in equality mode");
    }
  }
}

PowerAllocation PowerAllocation::from_angles(double theta1, double theta2) {
  const auto [c1, s1] = unit_circle(theta1);
  const auto [c2, s2] = unit_circle(theta2);
  return PowerAllocation(c1, s1, c2, s2, NormMode::Equality);
}

PowerAllocation PowerAllocation::from_polar(double p1, double theta1, double p2, double theta2) {
  const auto [c1, s1] = unit_circle(theta1);
  const auto [c2, s2] = unit_circle(theta2);
  const double r1 = std::sqrt(std::clamp(p1, 0.0, 1.0));
  const double r2 = std::sqrt(std::clamp(p2, 0.0, 1.0));
  return PowerAllocation(r1 * c1, r1 * s1, r2 * c2, r2 * s2, NormMode::Inequality);
}

double PowerAllocation::row_power(UserId source) const {
  const std::size_t base = 2 * ordinal(source);
  return f_[base] * f_[base] + f_[base + 1] * f_[base + 1];
}

PowerAllocation PowerAllocation::mirrored() const {
  return PowerAllocation({f_[3], f_[2], f_[1], f_[0]}, mode_, Unchecked{});
}

std::array<PowerAllocation, 4> PowerAllocation::corners() {
  return {PowerAllocation(1, 0, 1, 0), PowerAllocation(1, 0, 0, 1),
          PowerAllocation(0, 1, 1, 0), PowerAllocation(0, 1, 0, 1)};
}

// --- OutageSpec ------------------------------------------------------------

OutageSpec::OutageSpec(double target_rate, double bandwidth)
    : target_rate_(target_rate), bandwidth_(bandwidth) {
  if (!positive_finite(target_rate_)) throw std::invalid_argument("target rate must be > 0");
  if (!positive_finite(bandwidth_)) throw std::invalid_argument("bandwidth must be > 0");
}

}  // namespace coopnc
