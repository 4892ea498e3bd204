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
#include <variant>

#include "rafsim/ids.hpp"
#include "rafsim/topology.hpp"

namespace rafsim {

// Exact-match key: ethertype, IP protocol, source and destination
// addresses. No wildcards.
struct FlowMatch {
    std::uint16_t dl_type = 0x0800;
    std::uint8_t nw_proto = 17;
    Ipv4 nw_src = 0;
    Ipv4 nw_dst = 0;
    auto operator<=>(const FlowMatch&) const = default;
};

struct ActionForward {
    PortId port = 0;
    bool operator==(const ActionForward&) const = default;
};
struct ActionDrop {
    bool operator==(const ActionDrop&) const = default;
};
struct ActionToController {
    bool operator==(const ActionToController&) const = default;
};
using FlowAction = std::variant<ActionForward, ActionDrop, ActionToController>;

using Cookie = std::uint64_t;

struct FlowRule {
    FlowMatch match;
    int priority = 0;
    FlowAction action = ActionDrop{};
    double idle_timeout_ms = 0.0;   // 0 = disabled
    double hard_timeout_ms = 0.0;   // 0 = permanent
    Cookie cookie = 0;
};

enum class InstallResult { Ok, TableFull };

// Conjunctive rule selector: every present field must match.
struct RuleSelector {
    std::optional<Cookie> cookie;
    std::optional<FlowMatch> match;
    std::optional<int> priority;
    std::optional<PortId> egress;

    static RuleSelector by_cookie(Cookie c) { return {c, {}, {}, {}}; }
    static RuleSelector by_match(const FlowMatch& m) { return {{}, m, {}, {}}; }
    static RuleSelector by_egress(PortId p) { return {{}, {}, {}, p}; }
};

enum class MissReason { Miss, AllDead };

struct LookupResult {
    FlowAction action = ActionToController{};
    MissReason reason = MissReason::Miss;     // meaningful for ToController
    std::optional<int> matched_priority;      // set when an entry decided

    bool is_forward() const { return std::holds_alternative<ActionForward>(action); }
    bool is_drop() const { return std::holds_alternative<ActionDrop>(action); }
    bool is_to_controller() const { return std::holds_alternative<ActionToController>(action); }
    PortId forward_port() const { return std::get<ActionForward>(action).port; }
};

struct Packet {
    Ipv4 src = 0;
    Ipv4 dst = 0;
    std::uint16_t dl_type = 0x0800;
    std::uint8_t nw_proto = 17;
    std::size_t size_bytes = 62;
    std::uint64_t seq = 0;
    double created_at_ms = 0.0;

    FlowMatch match() const { return {dl_type, nw_proto, src, dst}; }
};

// Bounded per-switch forwarding table. Entries are keyed by (match,
// priority); re-installing an existing key replaces in place.
class FlowTable {
public:
    explicit FlowTable(std::size_t capacity = 1500) : capacity_(capacity) {}

    InstallResult install(const FlowRule& rule, double now_ms = 0.0);
    std::size_t remove(const RuleSelector& sel);
    std::size_t sweep_timeouts(double now_ms);
    void note_hit(const FlowMatch& match, int priority, double now_ms);

    std::size_t size() const { return size_; }
    std::size_t capacity() const { return capacity_; }

    struct Entry {
        FlowAction action;
        double idle_timeout_ms = 0.0;
        double hard_timeout_ms = 0.0;
        Cookie cookie = 0;
        double installed_at_ms = 0.0;
        double last_hit_ms = 0.0;
    };

    // Priority-descending entries for one match key; empty when absent.
    const std::map<int, Entry, std::greater<int>>* entries_for(const FlowMatch& m) const;
    const std::map<FlowMatch, std::map<int, Entry, std::greater<int>>>& entries() const
    {
        return entries_;
    }

private:
    std::size_t capacity_;
    std::size_t size_ = 0;
    std::map<FlowMatch, std::map<int, Entry, std::greater<int>>> entries_;
};

// One simulated switch: port liveness plus its flow table.
class SwitchState {
public:
    SwitchState() = default;
    SwitchState(SwitchId id, std::size_t table_capacity) : id_(std::move(id)), table_(table_capacity) {}

    const SwitchId& id() const { return id_; }
    FlowTable& table() { return table_; }
    const FlowTable& table() const { return table_; }

    void add_port(PortId port);
    bool has_port(PortId port) const { return ports_.count(port) > 0; }
    bool port_up(PortId port) const;
    void set_port_status(PortId port, LinkStatus status);
    const std::map<PortId, bool>& ports() const { return ports_; }

    InstallResult install_rule(const FlowRule& rule, double now_ms = 0.0);

    // Highest-priority matching entry whose action is usable: Drop and
    // ToController always are; Forward only through an up port. Dead
    // Forward entries are skipped so lower-priority backups take over
    // locally. All matching entries dead-ended => ToController(AllDead);
    // nothing matching => ToController(Miss).
    LookupResult lookup(const Packet& pkt) const;

private:
    SwitchId id_;
    std::map<PortId, bool> ports_;   // true = up
    FlowTable table_;
};

} // namespace rafsim
