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
#include <random>
#include <set>
#include <string>
#include <vector>

#include "rafsim/topology.hpp"

namespace rafsim::test {

// Builds a topology from switch names and (a, b, reliability, delay)
// edges. Ports are assigned per switch in edge order starting at 1;
// hosts, when given, attach after the link ports.
struct TopoBuilder {
    Topology topo;
    std::map<SwitchId, PortId> next_port;
    int next_link = 1;

    TopoBuilder& switches(const std::vector<std::string>& names)
    {
        for (const auto& n : names) {
            topo.add_switch(SwitchId{n});
            next_port[SwitchId{n}] = 1;
        }
        return *this;
    }

    TopoBuilder& link(const std::string& a, const std::string& b, double rel,
                      double delay = 1.0)
    {
        Link l;
        l.id = LinkId{"l" + std::to_string(next_link++)};
        l.end_a = {SwitchId{a}, next_port[SwitchId{a}]++};
        l.end_b = {SwitchId{b}, next_port[SwitchId{b}]++};
        l.reliability = rel;
        l.delay_ms = delay;
        topo.add_link(l);
        return *this;
    }

    TopoBuilder& host(const std::string& name, const std::string& addr,
                      const std::string& sw)
    {
        Host h;
        h.id = HostId{name};
        h.address = *parse_ipv4(addr);
        h.attach = {SwitchId{sw}, next_port[SwitchId{sw}]++};
        topo.add_host(h);
        return *this;
    }

    Topology build()
    {
        topo.validate();
        return topo;
    }
};

// Independent path oracle: plain recursion over an adjacency list built
// straight from the link set, no shared code with the enumerator under
// test. Returns node-name sequences of every simple path over up-links.
inline std::set<std::vector<std::string>> brute_force_paths(const Topology& topo,
                                                            const SwitchId& src,
                                                            const SwitchId& dst)
{
    std::map<std::string, std::set<std::string>> adj;
    for (const auto& [id, l] : topo.links()) {
        if (l.status != LinkStatus::Up)
            continue;
        adj[l.end_a.sw.name].insert(l.end_b.sw.name);
        adj[l.end_b.sw.name].insert(l.end_a.sw.name);
    }
    std::set<std::vector<std::string>> found;
    std::vector<std::string> walk{src.name};
    std::set<std::string> seen{src.name};

    auto recurse = [&](auto&& self, const std::string& at) -> void {
        if (at == dst.name) {
            found.insert(walk);
            return;
        }
        for (const auto& next : adj[at]) {
            if (seen.count(next))
                continue;
            seen.insert(next);
            walk.push_back(next);
            self(self, next);
            walk.pop_back();
            seen.erase(next);
        }
    };
    recurse(recurse, src.name);
    return found;
}

// Random connected-ish topology for property tests. Ports deterministic
// from the seed; at most one link per switch pair; some links may start
// down when allow_down is set.
inline Topology random_topology(std::mt19937_64& rng, std::size_t max_switches = 10,
                                bool allow_down = false)
{
    std::uniform_int_distribution<std::size_t> n_dist(2, max_switches);
    std::size_t n = n_dist(rng);
    TopoBuilder b;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
        names.push_back("s" + std::to_string(i + 1));
    b.switches(names);

    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_real_distribution<double> rel(0.5, 1.0);
    std::uniform_real_distribution<double> delay(0.1, 2.0);
    std::vector<LinkId> created;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (coin(rng) < 0.45) {
                b.link(names[i], names[j], rel(rng), delay(rng));
                created.push_back(LinkId{"l" + std::to_string(b.next_link - 1)});
            }
    Topology topo = b.build();
    if (allow_down)
        for (const auto& id : created)
            if (coin(rng) < 0.2)
                topo.set_link_status(id, LinkStatus::Down);
    return topo;
}

} // namespace rafsim::test
