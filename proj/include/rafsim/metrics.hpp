/*
 * Copyright 2026 The rafsim Authors
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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rafsim/ids.hpp"

namespace rafsim {

struct SwitchRuleStats {
    std::size_t peak = 0;
    std::size_t final_count = 0;
};

struct MetricsReport {
    std::string scenario;
    std::string strategy;

    std::uint64_t path_computations = 0;
    std::uint64_t candidates_ranked = 0;
    std::uint64_t flow_mods_sent = 0;
    std::uint64_t packet_ins = 0;
    std::uint64_t packet_outs = 0;
    std::uint64_t feature_replies = 0;
    std::uint64_t bootstrap_msgs = 0;
    std::uint64_t port_status_notices = 0;
    std::uint64_t table_full_events = 0;

    std::uint64_t injected = 0;
    std::uint64_t delivered = 0;
    std::uint64_t dropped = 0;
    std::uint64_t in_flight = 0;
    bool horizon_truncated = false;

    // Wall-clock cost of the run; opt-in and emitted only as a trailing
    // comment so deterministic outputs stay byte-comparable.
    std::optional<double> wall_ms;

    std::vector<double> delays_ms;   // one per delivered packet, delivery order
    std::map<SwitchId, SwitchRuleStats> per_switch_rules;

    std::uint64_t control_messages_total() const
    {
        return bootstrap_msgs + feature_replies + packet_ins + packet_outs +
               flow_mods_sent + port_status_notices;
    }
    std::size_t peak_rules() const;
};

struct MetricsSummary {
    std::uint64_t delivered = 0;
    std::uint64_t dropped = 0;
    std::optional<double> mean_ms;
    std::optional<double> median_ms;
    std::optional<double> p99_ms;
    std::optional<double> min_ms;
    std::optional<double> max_ms;
};

MetricsSummary summarize(const MetricsReport& report);

// Deterministic CSV: versioned header comment, one run row, then a
// per-switch section. Doubles carry six decimals; byte-identical for
// identical reports.
std::string export_csv(const MetricsReport& report);

// The scalar image of an exported report (the delay list itself is not
// part of the CSV, only its summary).
struct ParsedMetrics {
    MetricsReport report;            // delays_ms left empty
    MetricsSummary summary;
};

ParsedMetrics parse_csv(const std::string& text);

struct MetricRatio {
    std::string metric;
    double a = 0.0;
    double b = 0.0;
    std::optional<double> ratio;     // absent when b == 0
};

struct Comparison {
    std::string scenario;
    std::string strategy_a;
    std::string strategy_b;
    std::vector<MetricRatio> rows;
};

// Per-metric ratios a/b. Both reports must come from the same scenario.
Comparison compare(const MetricsReport& a, const MetricsReport& b);

std::string export_comparison_csv(const Comparison& cmp);

} // namespace rafsim
