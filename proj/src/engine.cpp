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
#include "rafsim/engine.hpp"

#include <algorithm>
#include <chrono>

#include "rafsim/error.hpp"

namespace rafsim {

namespace {

struct EventAfter {
    bool operator()(const Event& a, const Event& b) const
    {
        if (a.time_ms != b.time_ms)
            return a.time_ms > b.time_ms;
        return a.seq > b.seq;
    }
};

ControllerConfig make_controller_config(const Scenario& sc)
{
    ControllerConfig cfg;
    cfg.strategy = sc.config.strategy;
    cfg.path_rule = sc.config.path_rule;
    cfg.reliability_mode = sc.config.reliability_mode;
    cfg.tier_table.count_mode = sc.config.count_mode;
    cfg.window = sc.config.window;
    cfg.select.path_cap = sc.config.path_cap;
    cfg.select.disjoint_alternates = sc.config.disjoint_alternates;
    cfg.acl = AccessControlList(sc.acl);
    cfg.idle_timeout_ms = sc.config.idle_timeout_ms;
    cfg.hard_timeout_ms = sc.config.hard_timeout_ms;
    return cfg;
}

} // namespace

Engine::Engine(const Topology& topo, Scenario scenario)
    : plant_(topo),
      scenario_(std::move(scenario)),
      controller_(topo, make_controller_config(scenario_)),
      rng_(scenario_.config.seed)
{
    metrics_.scenario = scenario_.name;
    metrics_.strategy = strategy_name(scenario_.config.strategy);

    for (const auto& sw : plant_.switches()) {
        SwitchState state(sw, scenario_.config.table_capacity);
        for (const auto& [id, l] : plant_.links()) {
            if (l.end_a.sw == sw)
                state.add_port(l.end_a.port);
            if (l.end_b.sw == sw)
                state.add_port(l.end_b.port);
        }
        for (const auto& [id, h] : plant_.hosts())
            if (h.attach.sw == sw)
                state.add_port(h.attach.port);
        switches_.emplace(sw, std::move(state));
        metrics_.per_switch_rules.emplace(sw, SwitchRuleStats{});
    }

    for (const auto& flow : scenario_.flows)
        inject_flow(flow);
    for (const auto& f : scenario_.failures) {
        if (f.repair)
            inject_repair(f.link, f.at_ms);
        else
            inject_failure(f.link, f.at_ms);
    }
}

SwitchState& Engine::mutable_switch(const SwitchId& id)
{
    auto it = switches_.find(id);
    if (it == switches_.end())
        throw SimError(ErrorKind::UnknownSwitch, id.name);
    return it->second;
}

const SwitchState& Engine::switch_state(const SwitchId& id) const
{
    auto it = switches_.find(id);
    if (it == switches_.end())
        throw SimError(ErrorKind::UnknownSwitch, id.name);
    return it->second;
}

bool Engine::counts_toward_horizon(const EventBody& body) const
{
    if (std::holds_alternative<EvFeatureReplyTick>(body))
        return false;
    if (const auto* c = std::get_if<EvControlDelivery>(&body))
        if (std::holds_alternative<MsgFeatureReply>(c->msg))
            return false;   // periodic chatter must not keep the run alive
    return true;
}

double Engine::horizon() const
{
    return horizon_floor_ + scenario_.config.horizon_slack_ms;
}

void Engine::schedule(double time_ms, EventBody body)
{
    if (time_ms < clock_)
        throw SimError(ErrorKind::TimeTravel,
                       "event at " + std::to_string(time_ms) + " ms scheduled at " +
                           std::to_string(clock_) + " ms");
    if (counts_toward_horizon(body))
        horizon_floor_ = std::max(horizon_floor_, time_ms);
    queue_.push_back(Event{time_ms, next_seq_++, std::move(body)});
    std::push_heap(queue_.begin(), queue_.end(), EventAfter{});
}

void Engine::inject_flow(const FlowSpec& spec)
{
    const Host& src = plant_.host(spec.src);
    const Host& dst = plant_.host(spec.dst);
    for (std::uint64_t i = 0; i < spec.n_packets; ++i) {
        Packet pkt;
        pkt.src = src.address;
        pkt.dst = dst.address;
        pkt.nw_proto = spec.nw_proto;
        pkt.size_bytes = spec.payload_bytes;
        pkt.seq = i;
        pkt.created_at_ms = spec.start_ms + static_cast<double>(i) * spec.gap_ms;
        schedule(pkt.created_at_ms, EvPacketAtHost{spec.src, pkt});
    }
}

void Engine::inject_failure(const LinkId& link, double at_ms)
{
    plant_.link(link);   // throws on unknown link
    double when = at_ms;
    if (scenario_.config.failure_jitter_ms > 0.0) {
        std::uniform_real_distribution<double> jitter(0.0, scenario_.config.failure_jitter_ms);
        when += jitter(rng_);
    }
    schedule(when, EvLinkFail{link});
}

void Engine::inject_repair(const LinkId& link, double at_ms)
{
    plant_.link(link);
    schedule(at_ms, EvLinkRepair{link});
}

MetricsReport Engine::run()
{
    if (ran_)
        throw SimError(ErrorKind::Internal, "engine already ran");
    ran_ = true;
    auto wall_start = std::chrono::steady_clock::now();

    for (auto& msg : controller_.bootstrap())
        schedule(clock_ + scenario_.config.ctrl_rtt_ms, EvControlDelivery{std::move(msg)});

    if (!queue_.empty() && scenario_.config.tick_interval_ms > 0.0 &&
        scenario_.config.tick_interval_ms <= horizon())
        schedule(scenario_.config.tick_interval_ms, EvFeatureReplyTick{});

    while (!queue_.empty()) {
        if (queue_.front().time_ms > horizon()) {
            metrics_.horizon_truncated = true;
            break;
        }
        std::pop_heap(queue_.begin(), queue_.end(), EventAfter{});
        Event ev = std::move(queue_.back());
        queue_.pop_back();
        if (ev.time_ms < clock_)
            throw SimError(ErrorKind::Internal, "clock went backwards");
        clock_ = ev.time_ms;
        dispatch(ev);
    }

    for (const auto& ev : queue_)
        if (carries_packet(ev.body))
            ++metrics_.in_flight;

    for (const auto& [sw, state] : switches_)
        metrics_.per_switch_rules[sw].final_count = state.table().size();

    metrics_.path_computations = controller_.counters().path_computations;
    metrics_.candidates_ranked = controller_.counters().candidates_ranked;
    if (scenario_.config.record_wall_clock)
        metrics_.wall_ms = std::chrono::duration<double, std::milli>(
                               std::chrono::steady_clock::now() - wall_start)
                               .count();
    return metrics_;
}

bool Engine::carries_packet(const EventBody& body) const
{
    if (std::holds_alternative<EvPacketAtSwitch>(body))
        return true;
    if (const auto* h = std::get_if<EvPacketAtHost>(&body))
        // Pending deliveries are in flight; origin events that never
        // dispatched were never injected.
        return plant_.host(h->host).address == h->packet.dst;
    if (const auto* c = std::get_if<EvControlDelivery>(&body))
        return std::holds_alternative<MsgPacketIn>(c->msg) ||
               std::holds_alternative<MsgPacketOut>(c->msg);
    return false;
}

void Engine::dispatch(const Event& ev)
{
    std::visit(
        [&](const auto& body) {
            using T = std::decay_t<decltype(body)>;
            if constexpr (std::is_same_v<T, EvPacketAtHost>)
                on_packet_at_host(ev.time_ms, body);
            else if constexpr (std::is_same_v<T, EvPacketAtSwitch>)
                on_packet_at_switch(ev.time_ms, body);
            else if constexpr (std::is_same_v<T, EvControlDelivery>)
                on_control(ev.time_ms, body);
            else if constexpr (std::is_same_v<T, EvLinkFail>)
                on_link_fail(ev.time_ms, body);
            else if constexpr (std::is_same_v<T, EvLinkRepair>)
                on_link_repair(ev.time_ms, body);
            else
                on_tick(ev.time_ms);
        },
        ev.body);
}

void Engine::on_packet_at_host(double t, const EvPacketAtHost& ev)
{
    const Host& host = plant_.host(ev.host);
    if (host.address == ev.packet.dst) {
        if (host.address == ev.packet.src)
            ++metrics_.injected;   // self-addressed: injection and delivery coincide
        ++metrics_.delivered;
        metrics_.delays_ms.push_back(t - ev.packet.created_at_ms);
        return;
    }
    if (host.address != ev.packet.src) {
        ++metrics_.dropped;   // misdelivered
        return;
    }
    ++metrics_.injected;
    schedule(t + scenario_.config.host_link_delay_ms,
             EvPacketAtSwitch{host.attach.sw, ev.packet});
}

void Engine::on_packet_at_switch(double t, const EvPacketAtSwitch& ev)
{
    SwitchState& sw = mutable_switch(ev.sw);
    LookupResult result = sw.lookup(ev.packet);
    if (result.matched_priority)
        sw.table().note_hit(ev.packet.match(), *result.matched_priority, t);

    double t_out = t + scenario_.config.switch_proc_ms;
    if (result.is_forward()) {
        transmit(ev.sw, result.forward_port(), ev.packet, t_out);
    } else if (result.is_drop()) {
        ++metrics_.dropped;
    } else {
        schedule(t_out + scenario_.config.ctrl_rtt_ms,
                 EvControlDelivery{MsgPacketIn{ev.sw, ev.packet, result.reason}});
    }
}

void Engine::transmit(const SwitchId& sw, PortId port, const Packet& pkt, double t)
{
    const SwitchState& state = switch_state(sw);
    if (!state.has_port(port) || !state.port_up(port)) {
        ++metrics_.dropped;
        return;
    }
    if (const Link* l = plant_.link_at(sw, port)) {
        const SwitchId& peer = l->end_a.sw == sw ? l->end_b.sw : l->end_a.sw;
        schedule(t + l->delay_ms, EvPacketAtSwitch{peer, pkt});
        return;
    }
    if (const Host* h = plant_.host_at(sw, port)) {
        schedule(t + scenario_.config.host_link_delay_ms, EvPacketAtHost{h->id, pkt});
        return;
    }
    ++metrics_.dropped;
}

void Engine::deliver_controller_output(double t, std::vector<ControlMessage> msgs)
{
    for (auto& m : msgs)
        schedule(t + scenario_.config.ctrl_rtt_ms, EvControlDelivery{std::move(m)});
}

void Engine::on_control(double t, const EvControlDelivery& ev)
{
    std::visit(
        [&](const auto& msg) {
            using T = std::decay_t<decltype(msg)>;
            if constexpr (std::is_same_v<T, MsgHello>) {
                ++metrics_.bootstrap_msgs;
            } else if constexpr (std::is_same_v<T, MsgFeatureRequest>) {
                ++metrics_.bootstrap_msgs;
                schedule(t + scenario_.config.ctrl_rtt_ms,
                         EvControlDelivery{
                             MsgFeatureReply{msg.sw, plant_reports(msg.sw), msg.initial}});
            } else if constexpr (std::is_same_v<T, MsgFeatureReply>) {
                if (msg.initial)
                    ++metrics_.bootstrap_msgs;
                else
                    ++metrics_.feature_replies;
                deliver_controller_output(t, controller_.handle_feature_reply(msg));
            } else if constexpr (std::is_same_v<T, MsgPacketIn>) {
                ++metrics_.packet_ins;
                auto out = controller_.handle_packet_in(msg);
                bool released = std::any_of(out.begin(), out.end(), [](const ControlMessage& m) {
                    return std::holds_alternative<MsgPacketOut>(m);
                });
                if (!released)
                    ++metrics_.dropped;
                deliver_controller_output(t, std::move(out));
            } else if constexpr (std::is_same_v<T, MsgPacketOut>) {
                ++metrics_.packet_outs;
                transmit(msg.sw, msg.port, msg.packet, t);
            } else if constexpr (std::is_same_v<T, MsgFlowModAdd>) {
                ++metrics_.flow_mods_sent;
                SwitchState& sw = mutable_switch(msg.sw);
                if (sw.install_rule(msg.rule, t) == InstallResult::TableFull) {
                    ++metrics_.table_full_events;
                } else {
                    auto& stats = metrics_.per_switch_rules[msg.sw];
                    stats.peak = std::max(stats.peak, sw.table().size());
                }
            } else if constexpr (std::is_same_v<T, MsgFlowModDelete>) {
                ++metrics_.flow_mods_sent;
                mutable_switch(msg.sw).table().remove(msg.selector);
            } else {   // MsgPortStatus
                ++metrics_.port_status_notices;
                deliver_controller_output(t, controller_.handle_port_status(msg));
            }
        },
        ev.msg);
}

void Engine::apply_link_status(const LinkId& link, LinkStatus status, double t)
{
    const Link& l = plant_.link(link);
    if (l.status == status)
        return;   // duplicate fail/repair: nothing changes
    plant_.set_link_status(link, status);
    mutable_switch(l.end_a.sw).set_port_status(l.end_a.port, status);
    mutable_switch(l.end_b.sw).set_port_status(l.end_b.port, status);
    if (scenario_.config.port_status_notice) {
        schedule(t + scenario_.config.ctrl_rtt_ms,
                 EvControlDelivery{MsgPortStatus{l.end_a.sw, l.end_a.port, status}});
        schedule(t + scenario_.config.ctrl_rtt_ms,
                 EvControlDelivery{MsgPortStatus{l.end_b.sw, l.end_b.port, status}});
    }
}

void Engine::on_link_fail(double t, const EvLinkFail& ev)
{
    apply_link_status(ev.link, LinkStatus::Down, t);
}

void Engine::on_link_repair(double t, const EvLinkRepair& ev)
{
    apply_link_status(ev.link, LinkStatus::Up, t);
}

std::vector<LinkReport> Engine::plant_reports(const SwitchId& sw) const
{
    std::vector<LinkReport> reports;
    for (const auto& n : plant_.neighbors(sw))
        reports.push_back({n.link, plant_.link(n.link).status});
    return reports;
}

void Engine::on_tick(double t)
{
    for (auto& [id, state] : switches_) {
        state.table().sweep_timeouts(t);
        schedule(t + scenario_.config.ctrl_rtt_ms,
                 EvControlDelivery{MsgFeatureReply{id, plant_reports(id), false}});
    }
    double next = t + scenario_.config.tick_interval_ms;
    if (next <= horizon())
        schedule(next, EvFeatureReplyTick{});
}

MetricsReport run_simulation(const Topology& topo, Scenario scenario, Strategy strategy)
{
    scenario.config.strategy = strategy;
    Engine engine(topo, std::move(scenario));
    return engine.run();
}

} // namespace rafsim
