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

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace rafsim {

// Named identifiers. Kept as distinct types so a switch id cannot be
// passed where a link id is expected; ordering is lexicographic on the
// name, which also fixes the tie-break order used by path ranking.
struct SwitchId {
    std::string name;
    auto operator<=>(const SwitchId&) const = default;
};

struct HostId {
    std::string name;
    auto operator<=>(const HostId&) const = default;
};

struct LinkId {
    std::string name;
    auto operator<=>(const LinkId&) const = default;
};

// Port numbers are local to a switch. Port 0 is reserved for the
// out-of-band controller channel and never appears in topology files.
using PortId = std::uint16_t;

inline constexpr PortId kControllerPort = 0;

// 32-bit network address, rendered dotted-quad.
using Ipv4 = std::uint32_t;

std::optional<Ipv4> parse_ipv4(const std::string& text);
std::string format_ipv4(Ipv4 addr);

} // namespace rafsim
