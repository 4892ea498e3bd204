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
#include "rafsim/reliability.hpp"

#include <algorithm>

#include "rafsim/error.hpp"

namespace rafsim {

ObservationWindow::ObservationWindow(std::size_t capacity)
    : capacity_(capacity == 0 ? 1 : capacity)
{
}

void ObservationWindow::record(LinkStatus status)
{
    if (samples_.size() == capacity_)
        samples_.pop_front();
    samples_.push_back(status == LinkStatus::Up);
}

double ObservationWindow::up_ratio() const
{
    if (samples_.empty())
        return 1.0;
    std::size_t up = 0;
    for (bool s : samples_)
        up += s ? 1 : 0;
    return static_cast<double>(up) / static_cast<double>(samples_.size());
}

void LinkEstimator::record(const LinkId& link, LinkStatus status)
{
    auto it = windows_.find(link);
    if (it == windows_.end())
        it = windows_.emplace(link, ObservationWindow(window_)).first;
    it->second.record(status);
}

const ObservationWindow* LinkEstimator::window(const LinkId& link) const
{
    auto it = windows_.find(link);
    return it == windows_.end() ? nullptr : &it->second;
}

double link_reliability(ReliabilityMode mode, const Topology& topo,
                        const LinkEstimator& estimator, const LinkId& link)
{
    const Link& l = topo.link(link);   // throws on unknown link
    if (mode == ReliabilityMode::Static)
        return l.reliability;
    const ObservationWindow* w = estimator.window(link);
    return w ? w->up_ratio() : 1.0;
}

double path_reliability(PathReliabilityRule rule, const std::vector<double>& rels)
{
    if (rels.empty())
        return 1.0;
    if (rule == PathReliabilityRule::Min)
        return *std::min_element(rels.begin(), rels.end());
    double product = 1.0;
    for (double r : rels)
        product *= r;
    return product;
}

} // namespace rafsim
