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

#include <functional>
#include <vector>

#include "rafsim/reliability.hpp"
#include "rafsim/topology.hpp"

namespace rafsim {

// One switch on a route plus the port it exits through. The egress of
// the final switch is the destination host's attach port; it is 0
// (unbound) for paths that have not been tied to a concrete host yet.
struct PathHop {
    SwitchId sw;
    PortId egress = 0;
    bool operator==(const PathHop&) const = default;
};

struct Path {
    std::vector<PathHop> hops;

    std::size_t hop_count() const { return hops.size(); }
    PortId dst_attach() const { return hops.empty() ? 0 : hops.back().egress; }
    void bind_destination(PortId attach) { hops.back().egress = attach; }

    std::vector<SwitchId> node_sequence() const;
    // Links crossed between consecutive switches.
    std::vector<LinkId> links(const Topology& topo) const;

    bool operator==(const Path&) const = default;
};

struct RankedPath {
    Path path;
    double reliability = 1.0;
    double score = 0.0;       // ranking key under the active mode

    bool operator==(const RankedPath&) const = default;
};

struct PathSet {
    RankedPath primary;
    std::vector<RankedPath> alternates;

    std::size_t tier_count() const { return 1 + alternates.size(); }
    std::vector<const RankedPath*> all() const;
};

enum class RankMode { Raf, Distance };
enum class Strategy { Raf, RafDistance, AllPaths };
enum class TierCountMode { Total, Alternates };

// Maps primary-path reliability to how many paths get installed.
// Strictly descending boundaries; reliabilities at or below the last
// boundary select every available path.
struct TierTable {
    std::vector<double> boundaries{0.9, 0.8, 0.7, 0.6, 0.5};
    std::vector<std::size_t> counts{1, 2, 3, 4, 5};
    TierCountMode count_mode = TierCountMode::Total;
};

struct EnumerationResult {
    std::vector<Path> paths;
    bool truncated = false;
};

// All simple paths between two switches over up-links, depth-first with
// neighbors visited in egress-port order. `cap` bounds the result; the
// flag reports truncation rather than failing.
EnumerationResult enumerate_simple_paths(const Topology& topo, const SwitchId& src,
                                         const SwitchId& dst, std::size_t cap = 1000);

using LinkReliabilityFn = std::function<double(const LinkId&)>;

std::vector<RankedPath> rank_paths(const std::vector<Path>& paths, RankMode mode,
                                   PathReliabilityRule rule, const Topology& topo,
                                   const LinkReliabilityFn& link_rel);

std::size_t tier_path_count(double primary_reliability, std::size_t available,
                            const TierTable& table);

struct SelectOptions {
    std::size_t path_cap = 1000;
    bool disjoint_alternates = false;
    std::size_t max_install = 100;   // priority encoding floor
};

struct Selection {
    PathSet set;
    std::size_t enumerated = 0;      // candidates ranked
    bool truncated = false;
};

Selection select_paths(const Topology& topo, const SwitchId& src, const SwitchId& dst,
                       Strategy strategy, PathReliabilityRule rule, const TierTable& table,
                       const LinkReliabilityFn& link_rel, const SelectOptions& opts = {});

} // namespace rafsim
