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

#include "coopnc/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "coopnc/csv.hpp"

namespace coopnc {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 440.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 150.0;
constexpr double kTop = 30.0;
constexpr double kBottom = 60.0;

constexpr std::array<std::string_view, 4> kColors = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728"};
constexpr std::array<std::string_view, 4> kLabels = {"RDF", "PDF", "Linear NC-RDF",
                                                     "DPC-NC-PDF"};

struct Series {
  StrategyId strategy;
  std::vector<std::pair<double, double>> points;
};

struct Axis {
  double lo = 0.0;
  double hi = 1.0;
  bool log = false;

  double map(double v) const {
    if (log) return (std::log10(v) - std::log10(lo)) / (std::log10(hi) - std::log10(lo));
    return (v - lo) / (hi - lo);
  }
};

std::string fmt(double v) { return format_number(v); }

std::string escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

Axis linear_axis(double lo, double hi) {
  if (!(hi > lo)) {
    lo -= 0.5;
    hi += 0.5;
  }
  return {lo, hi, false};
}

std::vector<double> linear_ticks(const Axis& axis) {
  const double span = axis.hi - axis.lo;
  const double raw = span / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    if (m * mag >= raw) {
      step = m * mag;
      break;
    }
  }
  std::vector<double> ticks;
  for (double t = std::ceil(axis.lo / step) * step; t <= axis.hi + 1e-9 * span; t += step) {
    ticks.push_back(std::abs(t) < 1e-12 * span ? 0.0 : t);
  }
  return ticks;
}

std::vector<double> log_ticks(const Axis& axis) {
  std::vector<double> ticks;
  for (int e = static_cast<int>(std::floor(std::log10(axis.lo)));
       e <= static_cast<int>(std::ceil(std::log10(axis.hi))); ++e) {
    const double t = std::pow(10.0, e);
    if (t >= axis.lo * (1 - 1e-12) && t <= axis.hi * (1 + 1e-12)) ticks.push_back(t);
  }
  return ticks;
}

std::string chart(const std::vector<Series>& series, const Axis& x, const Axis& y,
                  std::string_view x_label, std::string_view y_label, std::string_view title) {
  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto px = [&](double v) { return kLeft + x.map(v) * pw; };
  auto py = [&](double v) { return kTop + (1.0 - y.map(v)) * ph; };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kWidth) + "\" height=\"" +
         fmt(kHeight) + "\" viewBox=\"0 0 " + fmt(kWidth) + " " + fmt(kHeight) + "\">\n";
  svg += "<title>" + escape(title) + "</title>\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"" + fmt(kWidth) + "\" height=\"" + fmt(kHeight) +
         "\" fill=\"white\"/>\n";

  svg += "<g class=\"axes\" stroke=\"black\" fill=\"none\">\n";
  svg += "<rect x=\"" + fmt(kLeft) + "\" y=\"" + fmt(kTop) + "\" width=\"" + fmt(pw) +
         "\" height=\"" + fmt(ph) + "\"/>\n";
  svg += "</g>\n";

  svg += "<g class=\"ticks\" font-family=\"sans-serif\" font-size=\"11\">\n";
  for (double t : x.log ? log_ticks(x) : linear_ticks(x)) {
    svg += "<line x1=\"" + fmt(px(t)) + "\" y1=\"" + fmt(kTop + ph) + "\" x2=\"" + fmt(px(t)) +
           "\" y2=\"" + fmt(kTop + ph + 5) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + fmt(px(t)) + "\" y=\"" + fmt(kTop + ph + 18) +
           "\" text-anchor=\"middle\">" + fmt(t) + "</text>\n";
  }
  for (double t : y.log ? log_ticks(y) : linear_ticks(y)) {
    svg += "<line x1=\"" + fmt(kLeft - 5) + "\" y1=\"" + fmt(py(t)) + "\" x2=\"" + fmt(kLeft) +
           "\" y2=\"" + fmt(py(t)) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + fmt(kLeft - 8) + "\" y=\"" + fmt(py(t) + 4) +
           "\" text-anchor=\"end\">" + fmt(t) + "</text>\n";
  }
  svg += "</g>\n";

  svg += "<g class=\"labels\" font-family=\"sans-serif\" font-size=\"13\">\n";
  svg += "<text x=\"" + fmt(kLeft + pw / 2) + "\" y=\"" + fmt(kHeight - 20) +
         "\" text-anchor=\"middle\">" + escape(x_label) + "</text>\n";
  svg += "<text x=\"18\" y=\"" + fmt(kTop + ph / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " +
         fmt(kTop + ph / 2) + ")\">" + escape(y_label) + "</text>\n";
  svg += "</g>\n";

  svg += "<g class=\"series\" fill=\"none\" stroke-width=\"2\">\n";
  for (const Series& s : series) {
    svg += "<polyline class=\"series-" + std::string(to_string(s.strategy)) + "\" stroke=\"" +
           std::string(kColors[ordinal(s.strategy)]) + "\" points=\"";
    for (std::size_t i = 0; i < s.points.size(); ++i) {
      if (i > 0) svg += ' ';
      svg += fmt(px(s.points[i].first)) + "," + fmt(py(s.points[i].second));
    }
    svg += "\"/>\n";
  }
  svg += "</g>\n";

  svg += "<g class=\"legend\" font-family=\"sans-serif\" font-size=\"12\">\n";
  double ly = kTop + 10;
  for (const Series& s : series) {
    const double lx = kLeft + pw + 12;
    svg += "<line x1=\"" + fmt(lx) + "\" y1=\"" + fmt(ly) + "\" x2=\"" + fmt(lx + 20) +
           "\" y2=\"" + fmt(ly) + "\" stroke=\"" + std::string(kColors[ordinal(s.strategy)]) +
           "\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + fmt(lx + 26) + "\" y=\"" + fmt(ly + 4) + "\">" +
           escape(kLabels[ordinal(s.strategy)]) + "</text>\n";
    ly += 18;
  }
  svg += "</g>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace

std::string render_svg(const SweepResult& result, SweepMetric metric) {
  if (result.rows.empty()) throw std::invalid_argument("cannot plot an empty sweep");

  std::vector<Series> series;
  double xlo = std::numeric_limits<double>::infinity();
  double xhi = -xlo;
  double ylo = xlo;
  double yhi = -xlo;
  for (StrategyId s : kAllStrategies) {
    Series line{s, {}};
    for (const SweepRow& row : result.rows) {
      if (row.strategy != s) continue;
      double y = 0.0;
      switch (metric) {
        case SweepMetric::NetworkThroughput: y = row.mean_network_throughput; break;
        case SweepMetric::UserThroughput: y = row.mean_user_throughput[0]; break;
        case SweepMetric::Outage: {
          const auto p = row.outage();
          if (!p) throw std::invalid_argument("sweep has no outage probabilities");
          y = std::max(*p, outage_floor(row.n_trials));
          break;
        }
      }
      line.points.emplace_back(row.snr_db, y);
      xlo = std::min(xlo, row.snr_db);
      xhi = std::max(xhi, row.snr_db);
      ylo = std::min(ylo, y);
      yhi = std::max(yhi, y);
    }
    if (!line.points.empty()) series.push_back(std::move(line));
  }

  const Axis x = linear_axis(xlo, xhi);
  switch (metric) {
    case SweepMetric::NetworkThroughput:
      return chart(series, x, linear_axis(0.0, yhi), "SNR (dB)", "Network throughput (b/s/Hz)",
                   "Total network throughput");
    case SweepMetric::UserThroughput:
      return chart(series, x, linear_axis(0.0, yhi), "SNR (dB)", "Per user throughput (b/s/Hz)",
                   "Per user throughput");
    case SweepMetric::Outage: {
      Axis y{std::pow(10.0, std::floor(std::log10(ylo))), 1.0, true};
      if (!(y.hi > y.lo)) y.lo = y.hi / 10.0;
      return chart(series, x, y, "SNR (dB)", "Outage probability", "Outage probability");
    }
  }
  return {};
}

std::string render_svg(const std::map<StrategyId, CdfResult>& cdfs) {
  std::vector<Series> series;
  double xhi = 0.0;
  for (const auto& [strategy, cdf] : cdfs) {
    if (cdf.values.empty()) continue;
    Series line{strategy, {}};
    for (std::size_t k = 0; k < cdf.values.size(); ++k) {
      line.points.emplace_back(cdf.values[k], cdf.ordinates[k]);
    }
    xhi = std::max(xhi, cdf.values.back());
    series.push_back(std::move(line));
  }
  if (series.empty()) throw std::invalid_argument("cannot plot an empty CDF");
  return chart(series, linear_axis(0.0, xhi), Axis{0.0, 1.0, false},
               "Per user throughput (b/s/Hz)", "CDF", "CDF of per user throughput");
}

void render_svg(const SweepResult& result, SweepMetric metric, const std::filesystem::path& path) {
  write_text(path, render_svg(result, metric));
}

void render_svg(const std::map<StrategyId, CdfResult>& cdfs, const std::filesystem::path& path) {
  write_text(path, render_svg(cdfs));
}

}  // namespace coopnc
