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

#include <deque>
#include <map>
#include <vector>

#include "rafsim/topology.hpp"

namespace rafsim {

enum class ReliabilityMode { Static, Estimated };
enum class PathReliabilityRule { Product, Min };

// Bounded FIFO of up/down observations for one link. The estimated
// reliability is the fraction of up samples in the window; an empty
// window reads as fully reliable so that a cold start never installs
// extra paths.
class ObservationWindow {
public:
    explicit ObservationWindow(std::size_t capacity = 100);

    void record(LinkStatus status);
    double up_ratio() const;

    std::size_t size() const { return samples_.size(); }
    std::size_t capacity() const { return capacity_; }
    const std::deque<bool>& samples() const { return samples_; }

private:
    std::size_t capacity_;
    std::deque<bool> samples_;   // true = up
};

// Per-link windows, created on first use.
class LinkEstimator {
public:
    explicit LinkEstimator(std::size_t window = 100) : window_(window) {}

    void record(const LinkId& link, LinkStatus status);
    const ObservationWindow* window(const LinkId& link) const;

private:
    std::size_t window_;
    std::map<LinkId, ObservationWindow> windows_;
};

double link_reliability(ReliabilityMode mode, const Topology& topo,
                        const LinkEstimator& estimator, const LinkId& link);

double path_reliability(PathReliabilityRule rule, const std::vector<double>& rels);

} // namespace rafsim
