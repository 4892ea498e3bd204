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
#include "rafsim/pathfinder.hpp"

#include <algorithm>
#include <set>

#include "rafsim/error.hpp"

namespace rafsim {

std::vector<SwitchId> Path::node_sequence() const
{
    std::vector<SwitchId> out;
    out.reserve(hops.size());
    for (const auto& h : hops)
        out.push_back(h.sw);
    return out;
}

std::vector<LinkId> Path::links(const Topology& topo) const
{
    std::vector<LinkId> out;
    for (std::size_t i = 0; i + 1 < hops.size(); ++i) {
        const Link* l = topo.link_at(hops[i].sw, hops[i].egress);
        if (l == nullptr)
            throw SimError(ErrorKind::Internal,
                           "path egress " + hops[i].sw.name + ":" +
                               std::to_string(hops[i].egress) + " matches no link");
        out.push_back(l->id);
    }
    return out;
}

std::vector<const RankedPath*> PathSet::all() const
{
    std::vector<const RankedPath*> out;
    out.push_back(&primary);
    for (const auto& a : alternates)
        out.push_back(&a);
    return out;
}

EnumerationResult enumerate_simple_paths(const Topology& topo, const SwitchId& src,
                                         const SwitchId& dst, std::size_t cap)
{
    if (!topo.has_switch(src))
        throw SimError(ErrorKind::UnknownSwitch, src.name);
    if (!topo.has_switch(dst))
        throw SimError(ErrorKind::UnknownSwitch, dst.name);
    if (src == dst)
        throw SimError(ErrorKind::Internal, "path enumeration needs src != dst");

    EnumerationResult result;
    std::vector<PathHop> stack;
    std::set<SwitchId> visited;

    // Iterative DFS would be noise here; recursion depth is bounded by
    // the switch count.
    std::function<void(const SwitchId&)> walk = [&](const SwitchId& at) {
        if (result.paths.size() >= cap) {
            result.truncated = true;
            return;
        }
        if (at == dst) {
            Path p;
            p.hops = stack;
            p.hops.push_back({dst, 0});
            result.paths.push_back(std::move(p));
            return;
        }
        visited.insert(at);
        for (const auto& n : topo.neighbors(at)) {
            if (visited.count(n.peer))
                continue;
            if (topo.link(n.link).status != LinkStatus::Up)
                continue;
            stack.push_back({at, n.egress});
            walk(n.peer);
            stack.pop_back();
            if (result.truncated && result.paths.size() >= cap)
                break;
        }
        visited.erase(at);
    };
    walk(src);
    return result;
}

std::vector<RankedPath> rank_paths(const std::vector<Path>& paths, RankMode mode,
                                   PathReliabilityRule rule, const Topology& topo,
                                   const LinkReliabilityFn& link_rel)
{
    std::vector<RankedPath> ranked;
    ranked.reserve(paths.size());
    for (const auto& p : paths) {
        std::vector<double> rels;
        for (const auto& l : p.links(topo))
            rels.push_back(link_rel(l));
        RankedPath rp;
        rp.reliability = path_reliability(rule, rels);
        rp.score = mode == RankMode::Distance
                       ? rp.reliability / static_cast<double>(p.hop_count())
                       : rp.reliability;
        rp.path = p;
        ranked.push_back(std::move(rp));
    }

    auto node_less = [](const RankedPath& a, const RankedPath& b) {
        return a.path.node_sequence() < b.path.node_sequence();
    };
    if (mode == RankMode::Raf) {
        std::sort(ranked.begin(), ranked.end(), [&](const RankedPath& a, const RankedPath& b) {
            if (a.reliability != b.reliability)
                return a.reliability > b.reliability;
            if (a.path.hop_count() != b.path.hop_count())
                return a.path.hop_count() < b.path.hop_count();
            return node_less(a, b);
        });
    } else {
        std::sort(ranked.begin(), ranked.end(), [&](const RankedPath& a, const RankedPath& b) {
            if (a.score != b.score)
                return a.score > b.score;
            if (a.reliability != b.reliability)
                return a.reliability > b.reliability;
            return node_less(a, b);
        });
    }
    return ranked;
}

std::size_t tier_path_count(double primary_reliability, std::size_t available,
                            const TierTable& table)
{
    if (available == 0)
        return 0;
    std::size_t count = available;   // at or below the last boundary: everything
    for (std::size_t i = 0; i < table.boundaries.size(); ++i) {
        if (primary_reliability > table.boundaries[i]) {
            if (table.count_mode == TierCountMode::Total)
                count = table.counts[i];
            else
                count = i == 0 ? 1 : table.counts[i] + 1;   // primary + alternates
            break;
        }
    }
    return std::clamp<std::size_t>(count, 1, available);
}

Selection select_paths(const Topology& topo, const SwitchId& src, const SwitchId& dst,
                       Strategy strategy, PathReliabilityRule rule, const TierTable& table,
                       const LinkReliabilityFn& link_rel, const SelectOptions& opts)
{
    auto enumeration = enumerate_simple_paths(topo, src, dst, opts.path_cap);
    if (enumeration.paths.empty())
        throw SimError(ErrorKind::NoPath, src.name + " -> " + dst.name);

    RankMode mode = strategy == Strategy::RafDistance ? RankMode::Distance : RankMode::Raf;
    auto ranked = rank_paths(enumeration.paths, mode, rule, topo, link_rel);

    Selection sel;
    sel.enumerated = ranked.size();
    sel.truncated = enumeration.truncated;
    sel.set.primary = ranked.front();

    std::vector<const RankedPath*> candidates;
    if (opts.disjoint_alternates) {
        std::set<LinkId> primary_links;
        for (const auto& l : sel.set.primary.path.links(topo))
            primary_links.insert(l);
        for (std::size_t i = 1; i < ranked.size(); ++i) {
            bool overlap = false;
            for (const auto& l : ranked[i].path.links(topo))
                if (primary_links.count(l)) {
                    overlap = true;
                    break;
                }
            if (!overlap)
                candidates.push_back(&ranked[i]);
        }
    } else {
        for (std::size_t i = 1; i < ranked.size(); ++i)
            candidates.push_back(&ranked[i]);
    }

    std::size_t available = 1 + candidates.size();
    std::size_t want = strategy == Strategy::AllPaths
                           ? available
                           : tier_path_count(sel.set.primary.reliability, available, table);
    want = std::min(want, opts.max_install);

    for (std::size_t i = 0; i + 1 < want && i < candidates.size(); ++i)
        sel.set.alternates.push_back(*candidates[i]);
    return sel;
}

} // namespace rafsim
