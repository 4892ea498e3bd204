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
#include <optional>
#include <string>
#include <vector>

#include "rafsim/controller.hpp"
#include "rafsim/ids.hpp"

namespace rafsim {

struct SimConfig {
    std::uint64_t seed = 1;
    double ctrl_rtt_ms = 0.5;          // controller <-> switch one-way latency
    double switch_proc_ms = 0.05;      // one table lookup
    double host_link_delay_ms = 0.0;   // host attachment edge traversal
    double tick_interval_ms = 100.0;   // periodic link-state reporting
    double horizon_slack_ms = 10000.0;
    std::size_t table_capacity = 1500;
    double failure_jitter_ms = 0.0;
    bool port_status_notice = false;   // immediate notification instead of tick-driven
    bool record_wall_clock = false;    // annotate the CSV with run wall time

    Strategy strategy = Strategy::Raf;
    TierCountMode count_mode = TierCountMode::Total;
    PathReliabilityRule path_rule = PathReliabilityRule::Product;
    ReliabilityMode reliability_mode = ReliabilityMode::Static;
    std::size_t window = 100;
    std::size_t path_cap = 1000;
    bool disjoint_alternates = false;
    double idle_timeout_ms = 0.0;
    double hard_timeout_ms = 0.0;
};

struct FlowSpec {
    std::string id;
    HostId src;
    HostId dst;
    std::uint64_t n_packets = 1;
    std::size_t payload_bytes = 62;
    double gap_ms = 1.0;
    double start_ms = 0.0;
    std::uint8_t nw_proto = 17;
};

struct FailureSpec {
    LinkId link;
    double at_ms = 0.0;
    bool repair = false;   // false: link fails; true: link comes back
};

struct Scenario {
    std::string name = "scenario";
    SimConfig config;
    std::vector<AclEntry> acl;
    std::vector<FlowSpec> flows;
    std::vector<FailureSpec> failures;
};

Scenario parse_scenario(const std::string& text);
Scenario parse_scenario_file(const std::string& path);

// Enum spellings shared by scenario files and the CLI.
std::optional<Strategy> strategy_from_string(const std::string& s);
std::string strategy_name(Strategy s);
std::optional<TierCountMode> count_mode_from_string(const std::string& s);
std::optional<PathReliabilityRule> path_rule_from_string(const std::string& s);
std::optional<ReliabilityMode> reliability_mode_from_string(const std::string& s);

} // namespace rafsim
