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

#include <map>
#include <optional>
#include <vector>

#include "rafsim/messages.hpp"
#include "rafsim/pathfinder.hpp"
#include "rafsim/reliability.hpp"

namespace rafsim {

// Ordered allow/deny list consulted before path computation.
// First match wins; no match means allow.
struct AclEntry {
    std::optional<Ipv4> src;          // empty = any
    std::optional<Ipv4> dst;
    std::optional<std::uint8_t> nw_proto;
    bool allow = true;
};

class AccessControlList {
public:
    AccessControlList() = default;
    explicit AccessControlList(std::vector<AclEntry> entries) : entries_(std::move(entries)) {}

    bool allows(Ipv4 src, Ipv4 dst, std::uint8_t proto) const;
    const std::vector<AclEntry>& entries() const { return entries_; }

private:
    std::vector<AclEntry> entries_;
};

using FlowKey = FlowMatch;

struct ControllerConfig {
    Strategy strategy = Strategy::Raf;
    PathReliabilityRule path_rule = PathReliabilityRule::Product;
    ReliabilityMode reliability_mode = ReliabilityMode::Static;
    TierTable tier_table;
    std::size_t window = 100;
    SelectOptions select;
    AccessControlList acl;
    double idle_timeout_ms = 0.0;
    double hard_timeout_ms = 0.0;
};

inline constexpr int kPrimaryPriority = 1000;
inline constexpr int kPriorityStep = 10;

// One path as installed for a flow: its hops plus the priority its
// rules carry on every switch.
struct InstalledPath {
    Path path;
    double reliability = 1.0;
    int priority = kPrimaryPriority;
};

struct InstalledFlow {
    Cookie cookie = 0;
    SwitchId ingress;
    SwitchId dst_switch;
    PortId dst_attach = 0;
    std::vector<InstalledPath> paths;   // rank order, best first
};

struct ControllerCounters {
    std::uint64_t path_computations = 0;
    std::uint64_t candidates_ranked = 0;
    std::uint64_t flow_mods = 0;
    std::uint64_t packet_ins = 0;
};

// Reactive control plane: answers packet-ins with ranked multi-path
// installation, ingests periodic link-state reports, and repairs
// installed flows when links die.
class Controller {
public:
    Controller(Topology view, ControllerConfig cfg);

    std::vector<ControlMessage> bootstrap();
    std::vector<ControlMessage> handle_feature_reply(const MsgFeatureReply& msg);
    std::vector<ControlMessage> handle_packet_in(const MsgPacketIn& msg);
    std::vector<ControlMessage> handle_link_failure(const LinkId& link);
    std::vector<ControlMessage> handle_port_status(const MsgPortStatus& msg);

    const Topology& view() const { return view_; }
    const ControllerCounters& counters() const { return counters_; }
    const std::map<FlowKey, InstalledFlow>& installed() const { return installed_; }
    const LinkEstimator& estimator() const { return estimator_; }

    double link_rel(const LinkId& link) const;

private:
    std::vector<ControlMessage> install_flow(const FlowKey& key, const SwitchId& ingress,
                                             const SwitchId& dst_sw, PortId dst_attach);
    void append_path_rules(std::vector<ControlMessage>& out, const FlowKey& key,
                           const InstalledPath& path, Cookie cookie) const;

    Topology view_;
    ControllerConfig cfg_;
    LinkEstimator estimator_;
    std::map<FlowKey, InstalledFlow> installed_;
    std::map<FlowKey, Cookie> denied_;
    ControllerCounters counters_;
    Cookie next_cookie_ = 1;
};

} // namespace rafsim
