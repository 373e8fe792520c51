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

#include "coopnc/allocator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

namespace coopnc {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

// Grid local maxima (best first) used as refinement seeds.
constexpr std::size_t kRefineSeeds = 3;

// Upper bound on accepted moves at one step size.
constexpr int kMaxMovesPerRound = 64;

// Halvings allowed past refine_rounds while rounds still gain >= tolerance.
constexpr int kExtraRounds = 16;

// Refinement keeps halving until the step (normalized angle) falls below this,
// whatever the per-round gain: sharp peaks can show no gain for a few rounds.
constexpr double kMinStep = 1.0 / 1024.0;

// The inner ridge search stops below this fraction of the outer step.
constexpr double kInnerResolution = 1.0 / 1024.0;

// Per-user rate arguments (1 + SNR-like terms). The network throughput is
// 0.5 * log2(score) with score = min(relay1, dest1) * min(relay2, dest2), so
// comparing scores ranks allocations exactly as the throughput does while
// avoiding the logarithms in the inner loop.
class Kernel {
 public:
  Kernel(const ChannelRealization& ch, SnrPoint snr, std::optional<DpcOrderingPair> ordering)
      : ordering_(ordering) {
    for (LinkId link : kAllLinks) g_[ordinal(link)] = snr.rho() * ch.gain2(link);
  }

  // f = {f11, f12, f21, f22}.
  double score(const std::array<double, 4>& f) const {
    const double q11 = f[0] * f[0];
    const double q12 = f[1] * f[1];
    const double q21 = f[2] * f[2];
    const double q22 = f[3] * f[3];
    const double g12 = g_[ordinal(LinkId::S1toS2)];
    const double g21 = g_[ordinal(LinkId::S2toS1)];
    const double g11d = g_[ordinal(LinkId::S1toD1)];
    const double g12d = g_[ordinal(LinkId::S1toD2)];
    const double g21d = g_[ordinal(LinkId::S2toD1)];
    const double g22d = g_[ordinal(LinkId::S2toD2)];

    const double relay1 = 1.0 + g12 * q11;
    const double relay2 = 1.0 + g21 * q22;
    double dest1 = 0.0;
    double dest2 = 0.0;
    if (!ordering_) {
      dest1 = 1.0 + g11d * q11 / (1.0 + g11d * q12) + g21d * q21 / (1.0 + g21d * q22);
      dest2 = 1.0 + g22d * q22 / (1.0 + g22d * q21) + g12d * q12 / (1.0 + g12d * q11);
    } else {
      const bool s1_d1 = ordering_->pi1 == DpcFavor::D1;
      const bool s2_d1 = ordering_->pi2 == DpcFavor::D1;
      const double sinr11 = s1_d1 ? g11d * q11 : g11d * q11 / (1.0 + g11d * q12);
      const double sinr12 = s1_d1 ? g12d * q12 / (1.0 + g12d * q11) : g12d * q12;
      const double sinr21 = s2_d1 ? g21d * q21 : g21d * q21 / (1.0 + g21d * q22);
      const double sinr22 = s2_d1 ? g22d * q22 / (1.0 + g22d * q21) : g22d * q22;
      dest1 = (1.0 + sinr11) * (1.0 + sinr21);
      dest2 = (1.0 + sinr12) * (1.0 + sinr22);
    }
    return std::min(relay1, dest1) * std::min(relay2, dest2);
  }

 private:
  std::array<double, kNumLinks> g_{};
  std::optional<DpcOrderingPair> ordering_;
};

// Normalized search point. Equality mode uses (t1, t2), inequality mode
// (p1, t1, p2, t2); all coordinates live in [0, 1].
using Point = std::array<double, 4>;

std::pair<double, double> circle(double t) {
  if (t <= 0.0) return {1.0, 0.0};
  if (t >= 1.0) return {0.0, 1.0};
  return {std::cos(t * kHalfPi), std::sin(t * kHalfPi)};
}

struct Incumbent {
  Point point{};
  double score = -1.0;
};

// Keeps `best` unless `candidate` is strictly better.
void offer(Incumbent& best, const Incumbent& candidate) {
  if (candidate.score > best.score) best = candidate;
}

class Search {
 public:
  Search(const Kernel& kernel, const OptimizerSettings& settings)
      : kernel_(kernel),
        settings_(settings),
        dim_(settings.norm_mode == NormMode::Equality ? 2 : 4) {}

  std::size_t evaluations() const { return evaluations_; }

  PowerAllocation allocation(const Point& p) const {
    if (dim_ == 2) return PowerAllocation::from_angles(p[0] * kHalfPi, p[1] * kHalfPi);
    return PowerAllocation::from_polar(p[0], p[1] * kHalfPi, p[2], p[3] * kHalfPi);
  }

  Incumbent run(const std::optional<Point>& extra_seed) {
    Incumbent best;
    // Single-destination corners per source, probed ahead of the grid.
    for (double a : {0.0, 1.0}) {
      for (double b : {0.0, 1.0}) {
        offer(best, probe(dim_ == 2 ? Point{a, b, 0.0, 0.0} : Point{1.0, a, 1.0, b}));
      }
    }

    const std::size_t n = static_cast<std::size_t>(settings_.grid_points_per_axis);
    std::size_t total = 1;
    for (std::size_t d = 0; d < dim_; ++d) total *= n;

    std::vector<double> scores(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
      const Incumbent inc = probe(grid_point(idx, n));
      scores[idx] = inc.score;
      offer(best, inc);
    }

    // Refinement seeds: grid local maxima, best first, ties by grid index.
    std::vector<std::size_t> maxima;
    for (std::size_t idx = 0; idx < total; ++idx) {
      if (is_local_max(scores, idx, n)) maxima.push_back(idx);
    }
    std::stable_sort(maxima.begin(), maxima.end(),
                     [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
    if (maxima.size() > kRefineSeeds) maxima.resize(kRefineSeeds);

    const double grid_step = 1.0 / static_cast<double>(n - 1);
    for (std::size_t idx : maxima) {
      const Incumbent start{grid_point(idx, n), scores[idx]};
      offer(best, dim_ == 2 ? refine_ridge(start, grid_step) : refine_compass(start, grid_step));
    }
    if (extra_seed) offer(best, probe(*extra_seed));
    return best;
  }

 private:
  std::array<double, 4> magnitudes(const Point& p) const {
    if (dim_ == 2) {
      const auto [c1, s1] = circle(p[0]);
      const auto [c2, s2] = circle(p[1]);
      return {c1, s1, c2, s2};
    }
    const auto [c1, s1] = circle(p[1]);
    const auto [c2, s2] = circle(p[3]);
    const double r1 = std::sqrt(p[0]);
    const double r2 = std::sqrt(p[2]);
    return {r1 * c1, r1 * s1, r2 * c2, r2 * s2};
  }

  Incumbent probe(const Point& p) {
    ++evaluations_;
    return {p, kernel_.score(magnitudes(p))};
  }

  Point grid_point(std::size_t idx, std::size_t n) const {
    Point p{};
    const double denom = static_cast<double>(n - 1);
    for (std::size_t d = dim_; d-- > 0;) {
      p[d] = static_cast<double>(idx % n) / denom;
      idx /= n;
    }
    return p;
  }

  bool is_local_max(const std::vector<double>& scores, std::size_t idx, std::size_t n) const {
    std::array<long, 4> coord{};
    std::size_t rest = idx;
    for (std::size_t d = dim_; d-- > 0;) {
      coord[d] = static_cast<long>(rest % n);
      rest /= n;
    }
    std::size_t neighbours = 1;
    for (std::size_t d = 0; d < dim_; ++d) neighbours *= 3;
    for (std::size_t k = 0; k < neighbours; ++k) {
      std::size_t code = k;
      std::size_t other = 0;
      bool inside = true;
      bool self = true;
      for (std::size_t d = 0; d < dim_; ++d) {
        const long offset = static_cast<long>(code % 3) - 1;
        code /= 3;
        const long c = coord[d] + offset;
        if (c < 0 || c >= static_cast<long>(n)) inside = false;
        if (offset != 0) self = false;
        other = other * n + static_cast<std::size_t>(std::max(c, 0L));
      }
      if (inside && !self && scores[other] > scores[idx]) return false;
    }
    return true;
  }

  // Throughput gain in b/s/Hz between two scores.
  static double gain(double from, double to) {
    return to > from && from > 0.0 ? 0.5 * std::log2(to / from) : 0.0;
  }

  bool keep_refining(int round, double step, double round_gain) const {
    return round + 1 < settings_.refine_rounds || step >= kMinStep ||
           round_gain >= settings_.tolerance;
  }

  // Shrinking 1-D search along one coordinate.
  Incumbent climb_axis(Incumbent current, std::size_t axis, double step, double min_step) {
    while (step >= min_step) {
      bool moved = false;
      for (int move = 0; move < kMaxMovesPerRound; ++move) {
        Incumbent best = current;
        for (double dir : {-1.0, 1.0}) {
          Point p = current.point;
          p[axis] = std::clamp(p[axis] + dir * step, 0.0, 1.0);
          if (p[axis] != current.point[axis]) offer(best, probe(p));
        }
        if (!(best.score > current.score)) break;
        current = best;
        moved = true;
      }
      if (!moved) step /= 2.0;
    }
    return current;
  }

  // The max-min objective has sharp ridges on which fixed-direction probes
  // stall, so the two-angle refinement follows the ridge instead: an outer
  // shrinking search over t1 in which every probe is scored by the best t2
  // reachable by a local search from the incumbent's t2.
  Incumbent refine_ridge(Incumbent current, double step) {
    current = climb_axis(current, 1, step, step * kInnerResolution);
    for (int round = 0; round < settings_.refine_rounds + kExtraRounds; ++round) {
      step /= 2.0;
      const double round_start = current.score;
      for (int move = 0; move < kMaxMovesPerRound; ++move) {
        Incumbent best = current;
        for (double dir : {-1.0, 1.0}) {
          Point p = current.point;
          p[0] = std::clamp(p[0] + dir * step, 0.0, 1.0);
          if (p[0] == current.point[0]) continue;
          offer(best, climb_axis(probe(p), 1, step, step * kInnerResolution));
        }
        if (!(best.score > current.score)) break;
        current = best;
      }
      if (!keep_refining(round, step, gain(round_start, current.score))) break;
    }
    return current;
  }

  // Compass search over the 3^dim - 1 neighbourhood at a halving step.
  Incumbent refine_compass(Incumbent current, double step) {
    std::size_t neighbours = 1;
    for (std::size_t d = 0; d < dim_; ++d) neighbours *= 3;
    for (int round = 0; round < settings_.refine_rounds + kExtraRounds; ++round) {
      step /= 2.0;
      const double round_start = current.score;
      for (int move = 0; move < kMaxMovesPerRound; ++move) {
        Incumbent best = current;
        for (std::size_t k = 0; k < neighbours; ++k) {
          std::size_t code = k;
          Point p = current.point;
          bool self = true;
          for (std::size_t d = 0; d < dim_; ++d) {
            const int offset = static_cast<int>(code % 3) - 1;
            code /= 3;
            if (offset != 0) self = false;
            p[d] = std::clamp(p[d] + offset * step, 0.0, 1.0);
          }
          if (!self) offer(best, probe(p));
        }
        if (!(best.score > current.score)) break;
        current = best;
      }
      if (!keep_refining(round, step, gain(round_start, current.score))) break;
    }
    return current;
  }

  const Kernel& kernel_;
  const OptimizerSettings& settings_;
  std::size_t dim_;
  std::size_t evaluations_ = 0;
};

struct SearchOutcome {
  Point point{};
  PowerAllocation alloc = PowerAllocation(1, 0, 0, 1);
  std::size_t evaluations = 0;
};

SearchOutcome search(const Kernel& kernel, const OptimizerSettings& settings) {
  settings.validate();
  SearchOutcome outcome;

  std::optional<Point> equality_seed;
  if (settings.norm_mode == NormMode::Inequality) {
    // The unit circle lies inside the inequality box; seeding with its
    // optimum keeps the inequality result at least as good.
    OptimizerSettings eq = settings;
    eq.norm_mode = NormMode::Equality;
    const SearchOutcome inner = search(kernel, eq);
    outcome.evaluations += inner.evaluations;
    equality_seed = Point{1.0, inner.point[0], 1.0, inner.point[1]};
  }

  Search engine(kernel, settings);
  const Incumbent best = engine.run(equality_seed);
  outcome.point = best.point;
  outcome.alloc = engine.allocation(best.point);
  outcome.evaluations += engine.evaluations();
  return outcome;
}

std::vector<double> oracle_axis(double resolution) {
  std::vector<double> axis;
  const auto steps = static_cast<std::size_t>(std::floor(1.0 / resolution + 1e-9));
  for (std::size_t k = 0; k <= steps; ++k) {
    axis.push_back(std::min(1.0, static_cast<double>(k) * resolution) * kHalfPi);
  }
  if (axis.back() < kHalfPi) axis.push_back(kHalfPi);
  return axis;
}

}  // namespace

void OptimizerSettings::validate() const {
  if (grid_points_per_axis < 2) throw std::invalid_argument("grid_points_per_axis must be >= 2");
  if (refine_rounds < 0) throw std::invalid_argument("refine_rounds must be >= 0");
  if (!std::isfinite(tolerance) || tolerance <= 0.0) {
    throw std::invalid_argument("tolerance must be > 0");
  }
}

double objective_lnc(const ChannelRealization& ch, SnrPoint snr, const PowerAllocation& alloc) {
  return mutual_info_lnc(ch, snr, alloc, UserId::User1) +
         mutual_info_lnc(ch, snr, alloc, UserId::User2);
}

double objective_dpc(const ChannelRealization& ch, SnrPoint snr, const PowerAllocation& alloc,
                     DpcOrderingPair ordering) {
  return mutual_info_dpc(ch, snr, alloc, ordering, UserId::User1) +
         mutual_info_dpc(ch, snr, alloc, ordering, UserId::User2);
}

AllocationResult optimize_lnc(const ChannelRealization& ch, SnrPoint snr,
                              const OptimizerSettings& settings) {
  const SearchOutcome out = search(Kernel(ch, snr, std::nullopt), settings);
  return {out.alloc, std::nullopt, objective_lnc(ch, snr, out.alloc), out.evaluations};
}

AllocationResult optimize_dpc_fixed(const ChannelRealization& ch, SnrPoint snr,
                                    DpcOrderingPair ordering,
                                    const OptimizerSettings& settings) {
  const SearchOutcome out = search(Kernel(ch, snr, ordering), settings);
  return {out.alloc, ordering, objective_dpc(ch, snr, out.alloc, ordering), out.evaluations};
}

AllocationResult optimize_dpc(const ChannelRealization& ch, SnrPoint snr,
                              const OptimizerSettings& settings) {
  std::optional<AllocationResult> best;
  std::size_t evaluations = 0;
  for (DpcOrderingPair ordering : DpcOrderingPair::all()) {
    AllocationResult r = optimize_dpc_fixed(ch, snr, ordering, settings);
    evaluations += r.evaluations;
    if (!best || r.objective > best->objective) best = r;
  }
  best->evaluations = evaluations;
  return *best;
}

AllocationResult oracle_grid(const ChannelRealization& ch, SnrPoint snr, double resolution,
                             NcStrategy strategy, bool allow_coarse) {
  const double upper = allow_coarse ? 1.0 : 0.1;
  if (!(resolution > 0.0 && resolution <= upper)) {
    throw std::invalid_argument("oracle resolution out of range");
  }
  const std::vector<double> axis = oracle_axis(resolution);

  AllocationResult best;
  best.objective = -1.0;
  for (double t1 : axis) {
    for (double t2 : axis) {
      const PowerAllocation alloc = PowerAllocation::from_angles(t1, t2);
      if (strategy == NcStrategy::Lnc) {
        const double v = objective_lnc(ch, snr, alloc);
        ++best.evaluations;
        if (v > best.objective) {
          best.objective = v;
          best.best_alloc = alloc;
        }
        continue;
      }
      for (DpcOrderingPair ordering : DpcOrderingPair::all()) {
        const double v = objective_dpc(ch, snr, alloc, ordering);
        ++best.evaluations;
        if (v > best.objective) {
          best.objective = v;
          best.best_alloc = alloc;
          best.best_ordering = ordering;
        }
      }
    }
  }
  return best;
}

}  // namespace coopnc
