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

#include "cli.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coopnc/coopnc.hpp"

namespace coopnc {

namespace {

struct Common {
  std::string config;
  std::string csv;
  std::string svg;
  std::optional<std::uint64_t> seed;
  unsigned threads = 0;
};

void add_common(CLI::App& cmd, Common& c) {
  cmd.add_option("--config", c.config, "Run configuration (JSON)")->required()->check(
      CLI::ExistingFile);
  cmd.add_option("--csv", c.csv, "CSV output path (defaults to output.csv of the config)");
  cmd.add_option("--svg", c.svg, "SVG chart output path (defaults to output.svg of the config)");
  cmd.add_option("--seed", c.seed, "Override the master seed of the config");
  cmd.add_option("--threads", c.threads, "Worker threads, 0 = hardware concurrency");
}

struct Outputs {
  std::string csv;
  std::optional<std::string> svg;
};

RunConfig load(const Common& c, Outputs& outputs) {
  RunConfig config = load_config(c.config);
  if (c.seed) config.plan.master_seed = *c.seed;
  outputs.csv = !c.csv.empty() ? c.csv : config.csv_path.value_or("");
  if (outputs.csv.empty()) throw std::runtime_error("no CSV output path (use --csv)");
  if (!c.svg.empty()) {
    outputs.svg = c.svg;
  } else {
    outputs.svg = config.svg_path;
  }
  return config;
}

std::vector<double> parse_list(const std::string& text, std::size_t expected,
                               std::string_view what) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw std::invalid_argument(std::string(what) + ": '" + item + "' is not a number");
    }
    values.push_back(v);
  }
  if (values.size() != expected) {
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(expected) +
                                " comma-separated values");
  }
  return values;
}

DpcOrderingPair parse_ordering(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("--ordering: expected p1,p2");
  const auto p1 = parse_favor(text.substr(0, comma));
  const auto p2 = parse_favor(text.substr(comma + 1));
  if (!p1 || !p2) throw std::invalid_argument("--ordering: each entry must be d1 or d2");
  return {*p1, *p2};
}

std::string_view binding_name(Binding b) {
  return b == Binding::RelayLimited ? "relay" : "destination";
}

void print_report(std::ostream& out, const RateReport& r, double snr_db,
                  const std::optional<PowerAllocation>& alloc,
                  const std::optional<DpcOrderingPair>& ordering) {
  out << "strategy = " << to_string(r.strategy) << '\n';
  out << "snr_db = " << format_number(snr_db) << '\n';
  for (UserId u : {UserId::User1, UserId::User2}) {
    const std::string suffix = u == UserId::User1 ? "user1" : "user2";
    out << "mutual_info_" << suffix << " = " << format_number(r.mutual_info_of(u)) << '\n';
    out << "throughput_" << suffix << " = " << format_number(r.throughput_of(u)) << '\n';
    out << "binding_" << suffix << " = " << binding_name(r.binding[ordinal(u)]) << '\n';
  }
  out << "network_throughput = " << format_number(r.network_throughput) << '\n';
  if (alloc) {
    out << "alloc = " << format_number(alloc->f11()) << ',' << format_number(alloc->f12()) << ','
        << format_number(alloc->f21()) << ',' << format_number(alloc->f22()) << '\n';
  }
  if (ordering) {
    out << "ordering = " << to_string(ordering->pi1) << ',' << to_string(ordering->pi2) << '\n';
  }
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cooperative network-coding throughput and outage simulator", "coopnc"};
  app.require_subcommand(1);

  Common tp;
  CLI::App* throughput = app.add_subcommand("throughput", "Average throughput versus SNR");
  add_common(*throughput, tp);
  std::string metric_name = "network";
  throughput->add_option("--metric", metric_name, "Plotted quantity: network or user")
      ->check(CLI::IsMember({"network", "user"}));

  Common og;
  double rate = 0.0;
  std::optional<double> bandwidth;
  CLI::App* outage = app.add_subcommand("outage", "Outage probability versus SNR");
  add_common(*outage, og);
  outage->add_option("--rate", rate, "Target rate r in b/s")->required();
  outage->add_option("--bandwidth", bandwidth, "Bandwidth W in Hz (default: config, else 1)");

  Common cd;
  double cdf_snr_db = 0.0;
  CLI::App* cdf = app.add_subcommand("cdf", "Empirical CDF of per user throughput at one SNR");
  add_common(*cdf, cd);
  cdf->add_option("--snr-db", cdf_snr_db, "SNR in dB")->required();

  double eval_snr_db = 0.0;
  std::string strategy_name;
  std::string gains_text;
  std::string alloc_text;
  std::string ordering_text;
  CLI::App* eval = app.add_subcommand("eval", "Evaluate one strategy on a fixed channel");
  eval->add_option("--snr-db", eval_snr_db, "SNR in dB")->required();
  eval->add_option("--strategy", strategy_name, "rdf, pdf, lnc-rdf or dpc-nc-pdf")->required();
  eval->add_option("--gains", gains_text,
                   "|h|^2 for S1->S2,S2->S1,S1->D1,S1->D2,S2->D1,S2->D2")
      ->required();
  eval->add_option("--alloc", alloc_text, "f11,f12,f21,f22 (optimized when omitted)");
  eval->add_option("--ordering", ordering_text, "DPC ordering p1,p2 with entries d1/d2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*throughput) {
      Outputs o;
      const RunConfig config = load(tp, o);
      const SweepResult result = sweep(config.plan, config.profile, {tp.threads});
      write_csv(result, o.csv);
      if (o.svg) {
        const SweepMetric metric =
            metric_name == "user" ? SweepMetric::UserThroughput : SweepMetric::NetworkThroughput;
        render_svg(result, metric, *o.svg);
      }
      return 0;
    }
    if (*outage) {
      Outputs o;
      RunConfig config = load(og, o);
      const double w = bandwidth.value_or(config.plan.outage ? config.plan.outage->bandwidth() : 1.0);
      config.plan.outage = OutageSpec(rate, w);
      const SweepResult result = sweep(config.plan, config.profile, {og.threads});
      write_csv(result, o.csv);
      if (o.svg) render_svg(result, SweepMetric::Outage, *o.svg);
      return 0;
    }
    if (*cdf) {
      Outputs o;
      const RunConfig config = load(cd, o);
      const auto cdfs = empirical_cdf(config.plan, config.profile, cdf_snr_db, {cd.threads});
      write_csv(cdfs, o.csv);
      if (o.svg) render_svg(cdfs, *o.svg);
      return 0;
    }
    if (*eval) {
      const auto strategy = parse_strategy(strategy_name);
      if (!strategy) throw std::invalid_argument("unknown strategy '" + strategy_name + "'");
      const auto g = parse_list(gains_text, kNumLinks, "--gains");
      std::array<double, kNumLinks> gains;
      std::copy(g.begin(), g.end(), gains.begin());
      const ChannelRealization ch = ChannelRealization::from_power_gains(gains);
      const SnrPoint snr = db_to_linear(eval_snr_db);

      std::optional<PowerAllocation> alloc;
      std::optional<DpcOrderingPair> ordering;
      if (!alloc_text.empty()) {
        const auto f = parse_list(alloc_text, 4, "--alloc");
        alloc = PowerAllocation(f[0], f[1], f[2], f[3], NormMode::Inequality);
      }
      if (!ordering_text.empty()) ordering = parse_ordering(ordering_text);

      // Fill in whatever the network-coded strategies need from the optimizer.
      if (*strategy == StrategyId::LncRdf && !alloc) {
        alloc = optimize_lnc(ch, snr).best_alloc;
      } else if (*strategy == StrategyId::DpcNcPdf && !alloc) {
        const AllocationResult r =
            ordering ? optimize_dpc_fixed(ch, snr, *ordering) : optimize_dpc(ch, snr);
        alloc = r.best_alloc;
        ordering = r.best_ordering;
      } else if (*strategy == StrategyId::DpcNcPdf && !ordering) {
        double best = -1.0;
        for (DpcOrderingPair candidate : DpcOrderingPair::all()) {
          const double v = objective_dpc(ch, snr, *alloc, candidate);
          if (v > best) {
            best = v;
            ordering = candidate;
          }
        }
      }
      const RateReport report = rate_report(*strategy, ch, snr, alloc, ordering);
      print_report(out, report, eval_snr_db, alloc, ordering);
      return 0;
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace coopnc
