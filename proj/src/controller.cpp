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
#include "rafsim/controller.hpp"

#include <algorithm>

#include "rafsim/error.hpp"

namespace rafsim {

const SwitchId& message_switch(const ControlMessage& msg)
{
    return std::visit([](const auto& m) -> const SwitchId& { return m.sw; }, msg);
}

bool AccessControlList::allows(Ipv4 src, Ipv4 dst, std::uint8_t proto) const
{
    for (const auto& e : entries_) {
        if (e.src && *e.src != src)
            continue;
        if (e.dst && *e.dst != dst)
            continue;
        if (e.nw_proto && *e.nw_proto != proto)
            continue;
        return e.allow;
    }
    return true;   // implicit final allow
}

Controller::Controller(Topology view, ControllerConfig cfg)
    : view_(std::move(view)), cfg_(std::move(cfg)), estimator_(cfg_.window)
{
}

double Controller::link_rel(const LinkId& link) const
{
    return link_reliability(cfg_.reliability_mode, view_, estimator_, link);
}

std::vector<ControlMessage> Controller::bootstrap()
{
    std::vector<ControlMessage> out;
    for (const auto& sw : view_.switches()) {
        out.push_back(MsgHello{sw});
        out.push_back(MsgFeatureRequest{sw, /*initial=*/true});
    }
    return out;
}

std::vector<ControlMessage> Controller::handle_feature_reply(const MsgFeatureReply& msg)
{
    if (!view_.has_switch(msg.sw))
        throw SimError(ErrorKind::ProtocolError,
                       "feature reply from undeclared switch '" + msg.sw.name + "'");

    std::vector<LinkId> newly_down;
    for (const auto& report : msg.reports) {
        const Link& known = view_.link(report.link);   // throws on unknown link
        estimator_.record(report.link, report.status);
        if (report.status == LinkStatus::Down && known.status == LinkStatus::Up)
            newly_down.push_back(report.link);
        else if (report.status == LinkStatus::Up && known.status == LinkStatus::Down)
            view_.set_link_status(report.link, LinkStatus::Up);
    }

    std::vector<ControlMessage> out;
    for (const auto& link : newly_down) {
        auto repairs = handle_link_failure(link);
        out.insert(out.end(), repairs.begin(), repairs.end());
    }
    return out;
}

std::vector<ControlMessage> Controller::handle_packet_in(const MsgPacketIn& msg)
{
    ++counters_.packet_ins;
    const Packet& pkt = msg.packet;
    const Host& dst_host = view_.host_by_address(pkt.dst);
    view_.host_by_address(pkt.src);   // both endpoints must resolve
    FlowKey key = pkt.match();

    if (denied_.count(key))
        return {};   // drop rule already issued; discard the straggler

    if (auto it = installed_.find(key); it != installed_.end()) {
        // Rules exist for this flow, so the data plane is ahead of us
        // (rules still in flight, or a failure we have not learned of
        // yet). Never recompute here; repair is driven by link-state.
        if (msg.reason == MissReason::Miss) {
            const InstalledPath& primary = it->second.paths.front();
            for (const auto& hop : primary.path.hops)
                if (hop.sw == msg.sw)
                    return {MsgPacketOut{msg.sw, pkt, hop.egress}};
        }
        return {};
    }

    if (!cfg_.acl.allows(pkt.src, pkt.dst, pkt.nw_proto)) {
        Cookie cookie = next_cookie_++;
        denied_.emplace(key, cookie);
        FlowRule drop;
        drop.match = key;
        drop.priority = kPrimaryPriority;
        drop.action = ActionDrop{};
        drop.cookie = cookie;
        ++counters_.flow_mods;
        return {MsgFlowModAdd{msg.sw, drop}};
    }

    auto messages = install_flow(key, msg.sw, dst_host.attach.sw, dst_host.attach.port);
    if (messages.empty())
        return messages;   // no path: the triggering packet is discarded

    const InstalledFlow& rec = installed_.at(key);
    for (const auto& hop : rec.paths.front().path.hops)
        if (hop.sw == msg.sw) {
            messages.push_back(MsgPacketOut{msg.sw, pkt, hop.egress});
            break;
        }
    return messages;
}

std::vector<ControlMessage> Controller::handle_link_failure(const LinkId& link)
{
    const Link& l = view_.link(link);   // throws on unknown link
    if (l.status == LinkStatus::Down)
        throw SimError(ErrorKind::ProtocolError,
                       "failure reported for already-down link '" + link.name + "'");
    view_.set_link_status(link, LinkStatus::Down);

    std::vector<ControlMessage> out;
    std::vector<FlowKey> keys;
    keys.reserve(installed_.size());
    for (const auto& [key, rec] : installed_)
        keys.push_back(key);

    for (const auto& key : keys) {
        InstalledFlow& rec = installed_.at(key);
        std::vector<InstalledPath> survivors;
        std::vector<InstalledPath> dead;
        for (auto& p : rec.paths) {
            const auto links = p.path.links(view_);
            if (std::find(links.begin(), links.end(), link) != links.end())
                dead.push_back(p);
            else
                survivors.push_back(p);
        }
        if (dead.empty())
            continue;

        for (const auto& p : dead) {
            RuleSelector sel;
            sel.cookie = rec.cookie;
            sel.priority = p.priority;
            // Destination-first, mirroring install order.
            for (auto it = p.path.hops.rbegin(); it != p.path.hops.rend(); ++it) {
                out.push_back(MsgFlowModDelete{it->sw, sel});
                ++counters_.flow_mods;
            }
        }

        if (!survivors.empty()) {
            rec.paths = std::move(survivors);   // protection: backups carry the flow
            continue;
        }
        // Restoration: every installed path died; recompute reactively.
        auto reinstall = install_flow(key, rec.ingress, rec.dst_switch, rec.dst_attach);
        if (reinstall.empty())
            installed_.erase(key);   // destination unreachable for now
        out.insert(out.end(), reinstall.begin(), reinstall.end());
    }
    return out;
}

std::vector<ControlMessage> Controller::handle_port_status(const MsgPortStatus& msg)
{
    const Link* link = view_.link_at(msg.sw, msg.port);
    if (link == nullptr)
        return {};   // host-facing or unused port: nothing to repair
    if (msg.status == LinkStatus::Down && link->status == LinkStatus::Up)
        return handle_link_failure(link->id);
    if (msg.status == LinkStatus::Up && link->status == LinkStatus::Down)
        view_.set_link_status(link->id, LinkStatus::Up);
    return {};
}

std::vector<ControlMessage> Controller::install_flow(const FlowKey& key,
                                                     const SwitchId& ingress,
                                                     const SwitchId& dst_sw,
                                                     PortId dst_attach)
{
    ++counters_.path_computations;

    std::vector<InstalledPath> paths;
    if (ingress == dst_sw) {
        // Same-switch flow: one rule straight to the host port.
        ++counters_.candidates_ranked;
        InstalledPath p;
        p.path.hops = {{ingress, dst_attach}};
        p.reliability = 1.0;
        p.priority = kPrimaryPriority;
        paths.push_back(std::move(p));
    } else {
        Selection sel;
        try {
            sel = select_paths(view_, ingress, dst_sw, cfg_.strategy, cfg_.path_rule,
                               cfg_.tier_table, [this](const LinkId& l) { return link_rel(l); },
                               cfg_.select);
        } catch (const SimError& e) {
            if (e.kind() == ErrorKind::NoPath)
                return {};
            throw;
        }
        counters_.candidates_ranked += sel.enumerated;

        int priority = kPrimaryPriority;
        for (const RankedPath* rp : sel.set.all()) {
            if (priority < 0)
                throw SimError(ErrorKind::Internal, "flow rule priority underflow");
            InstalledPath p;
            p.path = rp->path;
            p.path.bind_destination(dst_attach);
            p.reliability = rp->reliability;
            p.priority = priority;
            paths.push_back(std::move(p));
            priority -= kPriorityStep;
        }
    }

    InstalledFlow rec;
    rec.cookie = next_cookie_++;
    rec.ingress = ingress;
    rec.dst_switch = dst_sw;
    rec.dst_attach = dst_attach;
    rec.paths = std::move(paths);

    std::vector<ControlMessage> out;
    for (const auto& p : rec.paths)
        append_path_rules(out, key, p, rec.cookie);
    counters_.flow_mods += out.size();

    installed_[key] = std::move(rec);
    return out;
}

void Controller::append_path_rules(std::vector<ControlMessage>& out, const FlowKey& key,
                                   const InstalledPath& path, Cookie cookie) const
{
    // Install from the destination backwards so no switch forwards into
    // a gap while the flow is being set up.
    for (auto it = path.path.hops.rbegin(); it != path.path.hops.rend(); ++it) {
        FlowRule rule;
        rule.match = key;
        rule.priority = path.priority;
        rule.action = ActionForward{it->egress};
        rule.idle_timeout_ms = cfg_.idle_timeout_ms;
        rule.hard_timeout_ms = cfg_.hard_timeout_ms;
        rule.cookie = cookie;
        out.push_back(MsgFlowModAdd{it->sw, rule});
    }
}

} // namespace rafsim
