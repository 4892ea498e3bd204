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
#include "rafsim/dataplane.hpp"

#include "rafsim/error.hpp"

namespace rafsim {

namespace {

bool selector_hits(const RuleSelector& sel, const FlowMatch& match, int priority,
                   const FlowTable::Entry& e)
{
    if (sel.cookie && e.cookie != *sel.cookie)
        return false;
    if (sel.match && match != *sel.match)
        return false;
    if (sel.priority && priority != *sel.priority)
        return false;
    if (sel.egress) {
        const auto* fwd = std::get_if<ActionForward>(&e.action);
        if (fwd == nullptr || fwd->port != *sel.egress)
            return false;
    }
    return true;
}

} // namespace

InstallResult FlowTable::install(const FlowRule& rule, double now_ms)
{
    auto& by_priority = entries_[rule.match];
    auto it = by_priority.find(rule.priority);
    if (it == by_priority.end()) {
        if (size_ == capacity_) {
            if (by_priority.empty())
                entries_.erase(rule.match);
            return InstallResult::TableFull;
        }
        ++size_;
        it = by_priority.emplace(rule.priority, Entry{}).first;
        it->second.installed_at_ms = now_ms;
        it->second.last_hit_ms = now_ms;
    }
    it->second.action = rule.action;
    it->second.idle_timeout_ms = rule.idle_timeout_ms;
    it->second.hard_timeout_ms = rule.hard_timeout_ms;
    it->second.cookie = rule.cookie;
    return InstallResult::Ok;
}

std::size_t FlowTable::remove(const RuleSelector& sel)
{
    std::size_t removed = 0;
    for (auto match_it = entries_.begin(); match_it != entries_.end();) {
        auto& by_priority = match_it->second;
        for (auto it = by_priority.begin(); it != by_priority.end();) {
            if (selector_hits(sel, match_it->first, it->first, it->second)) {
                it = by_priority.erase(it);
                ++removed;
            } else {
                ++it;
            }
        }
        match_it = by_priority.empty() ? entries_.erase(match_it) : std::next(match_it);
    }
    size_ -= removed;
    return removed;
}

std::size_t FlowTable::sweep_timeouts(double now_ms)
{
    std::size_t expired = 0;
    for (auto match_it = entries_.begin(); match_it != entries_.end();) {
        auto& by_priority = match_it->second;
        for (auto it = by_priority.begin(); it != by_priority.end();) {
            const Entry& e = it->second;
            bool hard = e.hard_timeout_ms > 0.0 && now_ms - e.installed_at_ms >= e.hard_timeout_ms;
            bool idle = e.idle_timeout_ms > 0.0 && now_ms - e.last_hit_ms >= e.idle_timeout_ms;
            if (hard || idle) {
                it = by_priority.erase(it);
                ++expired;
            } else {
                ++it;
            }
        }
        match_it = by_priority.empty() ? entries_.erase(match_it) : std::next(match_it);
    }
    size_ -= expired;
    return expired;
}

void FlowTable::note_hit(const FlowMatch& match, int priority, double now_ms)
{
    auto match_it = entries_.find(match);
    if (match_it == entries_.end())
        return;
    auto it = match_it->second.find(priority);
    if (it != match_it->second.end())
        it->second.last_hit_ms = now_ms;
}

const std::map<int, FlowTable::Entry, std::greater<int>>*
FlowTable::entries_for(const FlowMatch& m) const
{
    auto it = entries_.find(m);
    return it == entries_.end() ? nullptr : &it->second;
}

void SwitchState::add_port(PortId port)
{
    ports_.emplace(port, true);
}

bool SwitchState::port_up(PortId port) const
{
    auto it = ports_.find(port);
    if (it == ports_.end())
        throw SimError(ErrorKind::UnknownPort,
                       id_.name + ":" + std::to_string(port));
    return it->second;
}

void SwitchState::set_port_status(PortId port, LinkStatus status)
{
    auto it = ports_.find(port);
    if (it == ports_.end())
        throw SimError(ErrorKind::UnknownPort,
                       id_.name + ":" + std::to_string(port));
    it->second = status == LinkStatus::Up;
}

InstallResult SwitchState::install_rule(const FlowRule& rule, double now_ms)
{
    if (const auto* fwd = std::get_if<ActionForward>(&rule.action))
        if (!ports_.count(fwd->port))
            throw SimError(ErrorKind::UnknownPort,
                           id_.name + ":" + std::to_string(fwd->port));
    return table_.install(rule, now_ms);
}

LookupResult SwitchState::lookup(const Packet& pkt) const
{
    const auto* by_priority = table_.entries_for(pkt.match());
    if (by_priority == nullptr || by_priority->empty())
        return {ActionToController{}, MissReason::Miss, std::nullopt};

    for (const auto& [priority, entry] : *by_priority) {   // descending priority
        if (const auto* fwd = std::get_if<ActionForward>(&entry.action)) {
            if (port_up(fwd->port))
                return {entry.action, MissReason::Miss, priority};
            continue;   // dead egress: fall through to the next entry
        }
        if (std::holds_alternative<ActionDrop>(entry.action))
            return {entry.action, MissReason::Miss, priority};
        return {ActionToController{}, MissReason::Miss, priority};
    }
    // Matches existed but every forward pointed at a dead port.
    return {ActionToController{}, MissReason::AllDead, std::nullopt};
}

} // namespace rafsim
