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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "coopnc/model.hpp"

namespace coopnc {
namespace {

TEST(LinkId, SixDistinctLinksWithRoundTripNames) {
  std::set<std::string_view> names;
  for (LinkId link : kAllLinks) {
    names.insert(to_string(link));
    EXPECT_EQ(parse_link(to_string(link)), link);
    EXPECT_EQ(mirror(mirror(link)), link);
  }
  EXPECT_EQ(names.size(), 6u);
  EXPECT_NE(LinkId::S1toS2, LinkId::S2toS1);
  EXPECT_FALSE(parse_link("s1_s1").has_value());
}

TEST(UserId, ComplementIsAnInvolution) {
  EXPECT_EQ(complement(UserId::User1), UserId::User2);
  EXPECT_EQ(complement(complement(UserId::User1)), UserId::User1);
  EXPECT_EQ(complement(complement(UserId::User2)), UserId::User2);
}

TEST(StrategyId, FourStableNames) {
  EXPECT_EQ(to_string(StrategyId::Rdf), "rdf");
  EXPECT_EQ(to_string(StrategyId::Pdf), "pdf");
  EXPECT_EQ(to_string(StrategyId::LncRdf), "lnc-rdf");
  EXPECT_EQ(to_string(StrategyId::DpcNcPdf), "dpc-nc-pdf");
  for (StrategyId s : kAllStrategies) EXPECT_EQ(parse_strategy(to_string(s)), s);
  EXPECT_FALSE(parse_strategy("lnc").has_value());
}

TEST(FadingProfile, RejectsNonPositiveVariances) {
  std::array<double, kNumLinks> v;
  v.fill(1.0);
  v[ordinal(LinkId::S1toD1)] = -1.0;
  EXPECT_THROW(FadingProfile(v, 1.0), std::invalid_argument);
  v.fill(1.0);
  EXPECT_THROW(FadingProfile(v, 0.0), std::invalid_argument);
  v[2] = std::nan("");
  EXPECT_THROW(FadingProfile(v, 1.0), std::invalid_argument);
}

TEST(FadingProfile, SymmetryMeansAllVariancesEqual) {
  EXPECT_TRUE(FadingProfile::symmetric().is_symmetric());
  EXPECT_TRUE(FadingProfile::symmetric(2.5).is_symmetric());
  std::array<double, kNumLinks> v;
  v.fill(1.0);
  v[ordinal(LinkId::S2toS1)] = 1.5;
  EXPECT_FALSE(FadingProfile(v).is_symmetric());
}

TEST(ChannelRealization, Gain2IsSquaredModulus) {
  std::array<std::complex<double>, kNumLinks> g{{{0.3, -1.2}, {2.0, 0.0}, {0.0, -0.7},
                                                  {1e-3, 4.0}, {-2.5, 0.5}, {0.0, 0.0}}};
  const ChannelRealization ch(g);
  for (LinkId link : kAllLinks) {
    const auto h = g[ordinal(link)];
    EXPECT_DOUBLE_EQ(ch.gain2(link), h.real() * h.real() + h.imag() * h.imag());
  }
}

TEST(ChannelRealization, FromPowerGainsAndMirror) {
  const auto ch = ChannelRealization::from_power_gains({1, 2, 3, 4, 5, 6});
  for (LinkId link : kAllLinks) {
    EXPECT_NEAR(ch.gain2(link), static_cast<double>(ordinal(link) + 1), 1e-12);
    EXPECT_EQ(ch.mirrored().gain(mirror(link)), ch.gain(link));
  }
  EXPECT_THROW(ChannelRealization::from_power_gains({1, -2, 3, 4, 5, 6}), std::invalid_argument);
}

TEST(SnrPoint, DecibelExamples) {
  EXPECT_DOUBLE_EQ(db_to_linear(0.0).rho(), 1.0);
  EXPECT_NEAR(db_to_linear(10.0).rho(), 10.0, 1e-12);
  EXPECT_NEAR(db_to_linear(3.0).rho(), 1.9952623149688795, 1e-12);
  EXPECT_THROW(db_to_linear(std::numeric_limits<double>::infinity()), std::invalid_argument);
  EXPECT_THROW(db_to_linear(std::nan("")), std::invalid_argument);
  EXPECT_THROW(SnrPoint::from_linear(-1.0), std::invalid_argument);
}

TEST(SnrPoint, DecibelRoundTripWithin1e12Relative) {
  for (double db = -30.0; db <= 40.0; db += 0.37) {
    const SnrPoint s = SnrPoint::from_db(db);
    EXPECT_NEAR(s.db(), db, 1e-12 * std::max(1.0, std::abs(db)));
    const SnrPoint back = SnrPoint::from_db(s.db());
    EXPECT_NEAR(back.rho(), s.rho(), 1e-12 * s.rho());
  }
}

TEST(PowerAllocation, EqualityModeRequiresUnitRows) {
  const double h = std::numbers::sqrt2 / 2.0;
  EXPECT_NO_THROW(PowerAllocation(h, h, h, h));
  EXPECT_THROW(PowerAllocation(0.5, 0.5, 1.0, 0.0), std::invalid_argument);
  EXPECT_NO_THROW(PowerAllocation(0.5, 0.5, 1.0, 0.0, NormMode::Inequality));
  EXPECT_THROW(PowerAllocation(1.0, 0.5, 1.0, 0.0, NormMode::Inequality), std::invalid_argument);
  EXPECT_THROW(PowerAllocation(-0.1, 0.0, 1.0, 0.0, NormMode::Inequality), std::invalid_argument);
  EXPECT_THROW(PowerAllocation(1.1, 0.0, 1.0, 0.0, NormMode::Inequality), std::invalid_argument);
}

TEST(PowerAllocation, AnglesAndPolarStayFeasible) {
  for (int i = 0; i <= 40; ++i) {
    for (int j = 0; j <= 40; ++j) {
      const double t1 = i * std::numbers::pi / 80.0;
      const double t2 = j * std::numbers::pi / 80.0;
      const auto a = PowerAllocation::from_angles(t1, t2);
      EXPECT_NEAR(a.row_power(UserId::User1), 1.0, kNormTolerance);
      EXPECT_NEAR(a.row_power(UserId::User2), 1.0, kNormTolerance);
      const auto b = PowerAllocation::from_polar(i / 40.0, t1, j / 40.0, t2);
      EXPECT_LE(b.row_power(UserId::User1), 1.0 + kNormTolerance);
      EXPECT_LE(b.row_power(UserId::User2), 1.0 + kNormTolerance);
    }
  }
  const auto edge = PowerAllocation::from_angles(0.0, std::numbers::pi / 2.0);
  EXPECT_EQ(edge.f11(), 1.0);
  EXPECT_EQ(edge.f12(), 0.0);
  EXPECT_EQ(edge.f21(), 0.0);
  EXPECT_EQ(edge.f22(), 1.0);
}

TEST(PowerAllocation, MirrorSwapsRolesAndCornersAreFeasible) {
  const auto a = PowerAllocation(0.6, 0.8, 0.28, 0.96);
  const auto m = a.mirrored();
  EXPECT_EQ(m.f11(), a.f22());
  EXPECT_EQ(m.f12(), a.f21());
  EXPECT_EQ(m.f21(), a.f12());
  EXPECT_EQ(m.f22(), a.f11());
  EXPECT_EQ(m.mirrored(), a);
  for (const auto& c : PowerAllocation::corners()) {
    EXPECT_EQ(c.row_power(UserId::User1), 1.0);
    EXPECT_EQ(c.row_power(UserId::User2), 1.0);
  }
}

TEST(DpcOrderingPair, FourDistinctPairsInIndexOrder) {
  const auto all = DpcOrderingPair::all();
  for (std::size_t k = 0; k < all.size(); ++k) {
    EXPECT_EQ(all[k].index(), k);
    EXPECT_EQ(all[k].mirrored().mirrored(), all[k]);
    for (std::size_t j = 0; j < k; ++j) EXPECT_NE(all[j], all[k]);
  }
}

TEST(OutageSpec, OrthogonalThresholdIsTwiceTheNcThreshold) {
  for (double r : {0.1, 1.0, 2.5, 7.0}) {
    for (double w : {0.3, 1.0, 2.0, 1e3}) {
      const OutageSpec spec(r, w);
      EXPECT_EQ(spec.threshold_orthogonal(), 2.0 * spec.threshold_nc());
      EXPECT_EQ(spec.threshold_nc(), r / w);
      EXPECT_EQ(spec.threshold(StrategyId::Rdf), spec.threshold_orthogonal());
      EXPECT_EQ(spec.threshold(StrategyId::DpcNcPdf), spec.threshold_nc());
    }
  }
  EXPECT_THROW(OutageSpec(0.0), std::invalid_argument);
  EXPECT_THROW(OutageSpec(1.0, -1.0), std::invalid_argument);
}

}  // namespace
}  // namespace coopnc
