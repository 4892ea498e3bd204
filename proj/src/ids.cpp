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
#include "rafsim/ids.hpp"

#include <cstdio>

namespace rafsim {

std::optional<Ipv4> parse_ipv4(const std::string& text)
{
    Ipv4 value = 0;
    int octet = 0;
    int digits = 0;
    int parts = 0;
    for (char c : text) {
        if (c >= '0' && c <= '9') {
            octet = octet * 10 + (c - '0');
            if (++digits > 3 || octet > 255)
                return std::nullopt;
        } else if (c == '.') {
            if (digits == 0 || parts == 3)
                return std::nullopt;
            value = (value << 8) | static_cast<Ipv4>(octet);
            octet = 0;
            digits = 0;
            ++parts;
        } else {
            return std::nullopt;
        }
    }
    if (digits == 0 || parts != 3)
        return std::nullopt;
    return (value << 8) | static_cast<Ipv4>(octet);
}

std::string format_ipv4(Ipv4 addr)
{
    char buf[16];
    std::snprintf(buf, sizeof buf, "%u.%u.%u.%u",
                  (addr >> 24) & 0xff, (addr >> 16) & 0xff,
                  (addr >> 8) & 0xff, addr & 0xff);
    return buf;
}

} // namespace rafsim
