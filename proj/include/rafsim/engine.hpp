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

#include <limits>
#include <random>
#include <variant>
#include <vector>

#include "rafsim/controller.hpp"
#include "rafsim/dataplane.hpp"
#include "rafsim/metrics.hpp"
#include "rafsim/scenario.hpp"

namespace rafsim {

struct EvPacketAtHost {
    HostId host;
    Packet packet;
};
struct EvPacketAtSwitch {
    SwitchId sw;
    Packet packet;
};
struct EvControlDelivery {
    ControlMessage msg;
};
struct EvLinkFail {
    LinkId link;
};
struct EvLinkRepair {
    LinkId link;
};
struct EvFeatureReplyTick {};

using EventBody = std::variant<EvPacketAtHost, EvPacketAtSwitch, EvControlDelivery,
                               EvLinkFail, EvLinkRepair, EvFeatureReplyTick>;

struct Event {
    double time_ms = 0.0;
    std::uint64_t seq = 0;   // schedule order, breaks time ties
    EventBody body;
};

// Deterministic single-threaded event kernel. One engine runs one
// scenario under one strategy; independent engines may run in parallel
// over the same immutable parsed topology.
class Engine {
public:
    Engine(const Topology& topo, Scenario scenario);

    void schedule(double time_ms, EventBody body);
    void inject_flow(const FlowSpec& spec);
    void inject_failure(const LinkId& link, double at_ms);
    void inject_repair(const LinkId& link, double at_ms);

    MetricsReport run();

    double now() const { return clock_; }
    const Controller& controller() const { return controller_; }
    const SwitchState& switch_state(const SwitchId& id) const;
    const Topology& plant() const { return plant_; }
    const SimConfig& config() const { return scenario_.config; }

private:
    void dispatch(const Event& ev);
    void on_packet_at_host(double t, const EvPacketAtHost& ev);
    void on_packet_at_switch(double t, const EvPacketAtSwitch& ev);
    void on_control(double t, const EvControlDelivery& ev);
    void on_link_fail(double t, const EvLinkFail& ev);
    void on_link_repair(double t, const EvLinkRepair& ev);
    void on_tick(double t);

    void transmit(const SwitchId& sw, PortId port, const Packet& pkt, double t);
    void deliver_controller_output(double t, std::vector<ControlMessage> msgs);
    void apply_link_status(const LinkId& link, LinkStatus status, double t);
    std::vector<LinkReport> plant_reports(const SwitchId& sw) const;
    SwitchState& mutable_switch(const SwitchId& id);
    double horizon() const;
    bool counts_toward_horizon(const EventBody& body) const;
    bool carries_packet(const EventBody& body) const;

    Topology plant_;              // ground truth the data plane sees
    Scenario scenario_;
    Controller controller_;
    std::map<SwitchId, SwitchState> switches_;
    MetricsReport metrics_;
    std::mt19937_64 rng_;

    std::vector<Event> queue_;    // min-heap by (time, seq)
    std::uint64_t next_seq_ = 0;
    double clock_ = 0.0;
    double horizon_floor_ = -std::numeric_limits<double>::infinity();
    bool ran_ = false;
};

// Convenience: build an engine for (topology, scenario, strategy) and run it.
MetricsReport run_simulation(const Topology& topo, Scenario scenario, Strategy strategy);

} // namespace rafsim
