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
#include <set>
#include <string>
#include <vector>

#include "rafsim/ids.hpp"

namespace rafsim {

enum class LinkStatus { Up, Down };

struct LinkEnd {
    SwitchId sw;
    PortId port = 0;
    auto operator<=>(const LinkEnd&) const = default;
};

// Bidirectional edge with symmetric reliability and delay.
struct Link {
    LinkId id;
    LinkEnd end_a;
    LinkEnd end_b;
    double reliability = 1.0;   // probability in [0,1]
    double delay_ms = 0.0;
    LinkStatus status = LinkStatus::Up;

    bool operator==(const Link&) const = default;
};

struct Host {
    HostId id;
    Ipv4 address = 0;
    LinkEnd attach;

    bool operator==(const Host&) const = default;
};

struct Neighbor {
    LinkId link;
    PortId egress;    // port on the queried switch
    SwitchId peer;
    bool operator==(const Neighbor&) const = default;
};

// Parsed network description. The parsed original is immutable in use;
// the engine and the controller each work on their own copy whose link
// statuses track what that side currently believes.
class Topology {
public:
    Topology() = default;

    static Topology parse(const std::string& text);
    static Topology parse_file(const std::string& path);
    std::string render() const;

    void add_switch(const SwitchId& id);
    void add_host(const Host& host);
    void add_link(const Link& link);

    // Validates cross-entity invariants (dangling endpoints, port
    // collisions). add_* calls validate local fields eagerly.
    void validate() const;

    const std::set<SwitchId>& switches() const { return switches_; }
    const std::map<HostId, Host>& hosts() const { return hosts_; }
    const std::map<LinkId, Link>& links() const { return links_; }

    bool has_switch(const SwitchId& id) const { return switches_.count(id) > 0; }
    const Link& link(const LinkId& id) const;
    const Host& host(const HostId& id) const;

    // Incident links regardless of status, sorted by egress port.
    std::vector<Neighbor> neighbors(const SwitchId& s) const;

    const Host& host_by_address(Ipv4 addr) const;

    // Edge lookup by (switch, egress port); returns nullptr when the
    // port is a host attachment or unused.
    const Link* link_at(const SwitchId& sw, PortId port) const;
    const Host* host_at(const SwitchId& sw, PortId port) const;
    const Link* link_between(const SwitchId& a, const SwitchId& b) const;

    void set_link_status(const LinkId& id, LinkStatus status);
    bool link_up(const LinkId& id) const { return link(id).status == LinkStatus::Up; }

    bool operator==(const Topology&) const = default;

private:
    std::set<SwitchId> switches_;
    std::map<HostId, Host> hosts_;
    std::map<LinkId, Link> links_;
};

} // namespace rafsim
