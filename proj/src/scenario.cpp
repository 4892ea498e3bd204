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
#include "rafsim/scenario.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rafsim/error.hpp"

namespace rafsim {

// Scenario file grammar (line oriented, '#' starts a comment):
//
//   [config]
//   <key> = <value>
//   [acl]
//   <allow|deny> <ipv4|any> <ipv4|any> <proto|any>
//   [flows]
//   <id> <src-host> <dst-host> [n=N] [bytes=B] [gap=MS] [start=MS] [proto=P]
//   [failures]
//   <fail|repair> <link-id> at=<MS>
//
// Unknown config keys and unknown sections are rejected.

std::optional<Strategy> strategy_from_string(const std::string& s)
{
    if (s == "raf")
        return Strategy::Raf;
    if (s == "raf-distance")
        return Strategy::RafDistance;
    if (s == "all-paths")
        return Strategy::AllPaths;
    return std::nullopt;
}

std::string strategy_name(Strategy s)
{
    switch (s) {
    case Strategy::Raf: return "raf";
    case Strategy::RafDistance: return "raf-distance";
    case Strategy::AllPaths: return "all-paths";
    }
    return "raf";
}

std::optional<TierCountMode> count_mode_from_string(const std::string& s)
{
    if (s == "total")
        return TierCountMode::Total;
    if (s == "alternates")
        return TierCountMode::Alternates;
    return std::nullopt;
}

std::optional<PathReliabilityRule> path_rule_from_string(const std::string& s)
{
    if (s == "product")
        return PathReliabilityRule::Product;
    if (s == "min")
        return PathReliabilityRule::Min;
    return std::nullopt;
}

std::optional<ReliabilityMode> reliability_mode_from_string(const std::string& s)
{
    if (s == "static")
        return ReliabilityMode::Static;
    if (s == "estimated")
        return ReliabilityMode::Estimated;
    return std::nullopt;
}

namespace {

[[noreturn]] void fail(ErrorKind kind, const std::string& msg, int line)
{
    throw SimError(kind, msg, line);
}

std::vector<std::string> tokenize(const std::string& line)
{
    std::vector<std::string> out;
    std::istringstream in(line.substr(0, line.find('#')));
    std::string tok;
    while (in >> tok)
        out.push_back(tok);
    return out;
}

double parse_real(const std::string& s, int line)
{
    const char* begin = s.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (s.empty() || end != begin + s.size())
        fail(ErrorKind::SyntaxError, "expected a number, got '" + s + "'", line);
    return v;
}

std::uint64_t parse_count(const std::string& s, int line)
{
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        fail(ErrorKind::SyntaxError, "expected an integer, got '" + s + "'", line);
    return v;
}

bool parse_on_off(const std::string& s, int line)
{
    if (s == "on" || s == "true" || s == "1")
        return true;
    if (s == "off" || s == "false" || s == "0")
        return false;
    fail(ErrorKind::SyntaxError, "expected on|off, got '" + s + "'", line);
}

void apply_config(Scenario& sc, const std::string& key, const std::string& value, int line)
{
    SimConfig& c = sc.config;
    if (key == "name") {
        sc.name = value;
    } else if (key == "seed") {
        c.seed = parse_count(value, line);
    } else if (key == "ctrl_rtt") {
        c.ctrl_rtt_ms = parse_real(value, line);
    } else if (key == "switch_proc") {
        c.switch_proc_ms = parse_real(value, line);
    } else if (key == "host_link_delay") {
        c.host_link_delay_ms = parse_real(value, line);
    } else if (key == "tick_interval") {
        c.tick_interval_ms = parse_real(value, line);
    } else if (key == "horizon_slack") {
        c.horizon_slack_ms = parse_real(value, line);
    } else if (key == "table_capacity") {
        c.table_capacity = parse_count(value, line);
    } else if (key == "failure_jitter") {
        c.failure_jitter_ms = parse_real(value, line);
    } else if (key == "port_status_notice") {
        c.port_status_notice = parse_on_off(value, line);
    } else if (key == "record_wall_clock") {
        c.record_wall_clock = parse_on_off(value, line);
    } else if (key == "strategy") {
        auto s = strategy_from_string(value);
        if (!s)
            fail(ErrorKind::SyntaxError, "bad strategy '" + value + "'", line);
        c.strategy = *s;
    } else if (key == "count_mode") {
        auto m = count_mode_from_string(value);
        if (!m)
            fail(ErrorKind::SyntaxError, "bad count_mode '" + value + "'", line);
        c.count_mode = *m;
    } else if (key == "path_rule") {
        auto r = path_rule_from_string(value);
        if (!r)
            fail(ErrorKind::SyntaxError, "bad path_rule '" + value + "'", line);
        c.path_rule = *r;
    } else if (key == "reliability_mode") {
        auto m = reliability_mode_from_string(value);
        if (!m)
            fail(ErrorKind::SyntaxError, "bad reliability_mode '" + value + "'", line);
        c.reliability_mode = *m;
    } else if (key == "window") {
        c.window = parse_count(value, line);
        if (c.window == 0)
            fail(ErrorKind::SyntaxError, "window must be positive", line);
    } else if (key == "path_cap") {
        c.path_cap = parse_count(value, line);
        if (c.path_cap == 0)
            fail(ErrorKind::SyntaxError, "path_cap must be positive", line);
    } else if (key == "disjoint_alternates") {
        c.disjoint_alternates = parse_on_off(value, line);
    } else if (key == "idle_timeout") {
        c.idle_timeout_ms = parse_real(value, line);
    } else if (key == "hard_timeout") {
        c.hard_timeout_ms = parse_real(value, line);
    } else {
        fail(ErrorKind::UnknownKey, "config key '" + key + "'", line);
    }
}

AclEntry parse_acl_entry(const std::vector<std::string>& tokens, int line)
{
    if (tokens.size() != 4)
        fail(ErrorKind::SyntaxError, "acl line needs <allow|deny> <src> <dst> <proto>", line);
    AclEntry e;
    if (tokens[0] == "allow")
        e.allow = true;
    else if (tokens[0] == "deny")
        e.allow = false;
    else
        fail(ErrorKind::SyntaxError, "expected allow|deny, got '" + tokens[0] + "'", line);

    auto addr = [&](const std::string& s) -> std::optional<Ipv4> {
        if (s == "any")
            return std::nullopt;
        auto a = parse_ipv4(s);
        if (!a)
            fail(ErrorKind::SyntaxError, "expected IPv4 or 'any', got '" + s + "'", line);
        return a;
    };
    e.src = addr(tokens[1]);
    e.dst = addr(tokens[2]);
    if (tokens[3] != "any") {
        auto p = parse_count(tokens[3], line);
        if (p > 255)
            fail(ErrorKind::SyntaxError, "protocol out of range", line);
        e.nw_proto = static_cast<std::uint8_t>(p);
    }
    return e;
}

FlowSpec parse_flow(const std::vector<std::string>& tokens, int line)
{
    if (tokens.size() < 3)
        fail(ErrorKind::SyntaxError, "flow line needs <id> <src-host> <dst-host>", line);
    FlowSpec f;
    f.id = tokens[0];
    f.src = HostId{tokens[1]};
    f.dst = HostId{tokens[2]};
    for (std::size_t i = 3; i < tokens.size(); ++i) {
        auto eq = tokens[i].find('=');
        if (eq == std::string::npos)
            fail(ErrorKind::SyntaxError, "expected key=value, got '" + tokens[i] + "'", line);
        std::string key = tokens[i].substr(0, eq);
        std::string value = tokens[i].substr(eq + 1);
        if (key == "n") {
            f.n_packets = parse_count(value, line);
            if (f.n_packets == 0)
                fail(ErrorKind::SyntaxError, "flow needs n >= 1", line);
        } else if (key == "bytes") {
            f.payload_bytes = parse_count(value, line);
            if (f.payload_bytes == 0)
                fail(ErrorKind::SyntaxError, "flow needs bytes >= 1", line);
        } else if (key == "gap") {
            f.gap_ms = parse_real(value, line);
            if (f.gap_ms < 0)
                fail(ErrorKind::SyntaxError, "gap must be >= 0", line);
        } else if (key == "start") {
            f.start_ms = parse_real(value, line);
        } else if (key == "proto") {
            auto p = parse_count(value, line);
            if (p > 255)
                fail(ErrorKind::SyntaxError, "protocol out of range", line);
            f.nw_proto = static_cast<std::uint8_t>(p);
        } else {
            fail(ErrorKind::UnknownKey, "flow key '" + key + "'", line);
        }
    }
    return f;
}

FailureSpec parse_failure(const std::vector<std::string>& tokens, int line)
{
    if (tokens.size() != 3)
        fail(ErrorKind::SyntaxError, "failure line needs <fail|repair> <link> at=<ms>", line);
    FailureSpec f;
    if (tokens[0] == "fail")
        f.repair = false;
    else if (tokens[0] == "repair")
        f.repair = true;
    else
        fail(ErrorKind::SyntaxError, "expected fail|repair, got '" + tokens[0] + "'", line);
    f.link = LinkId{tokens[1]};
    if (tokens[2].rfind("at=", 0) != 0)
        fail(ErrorKind::SyntaxError, "expected at=<ms>, got '" + tokens[2] + "'", line);
    f.at_ms = parse_real(tokens[2].substr(3), line);
    if (f.at_ms < 0)
        fail(ErrorKind::SyntaxError, "failure time must be >= 0", line);
    return f;
}

} // namespace

Scenario parse_scenario(const std::string& text)
{
    enum class Section { None, Config, Acl, Flows, Failures };
    Section section = Section::None;
    Scenario sc;

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = tokenize(line);
        if (tokens.empty())
            continue;
        if (tokens[0].front() == '[') {
            if (tokens.size() != 1)
                fail(ErrorKind::SyntaxError, "unexpected tokens after section header", line_no);
            if (tokens[0] == "[config]")
                section = Section::Config;
            else if (tokens[0] == "[acl]")
                section = Section::Acl;
            else if (tokens[0] == "[flows]")
                section = Section::Flows;
            else if (tokens[0] == "[failures]")
                section = Section::Failures;
            else
                fail(ErrorKind::UnknownKey, "unknown section '" + tokens[0] + "'", line_no);
            continue;
        }
        switch (section) {
        case Section::None:
            fail(ErrorKind::SyntaxError, "content before any section header", line_no);
        case Section::Config: {
            if (tokens.size() != 3 || tokens[1] != "=")
                fail(ErrorKind::SyntaxError, "config line needs <key> = <value>", line_no);
            apply_config(sc, tokens[0], tokens[2], line_no);
            break;
        }
        case Section::Acl:
            sc.acl.push_back(parse_acl_entry(tokens, line_no));
            break;
        case Section::Flows:
            sc.flows.push_back(parse_flow(tokens, line_no));
            break;
        case Section::Failures:
            sc.failures.push_back(parse_failure(tokens, line_no));
            break;
        }
    }
    return sc;
}

Scenario parse_scenario_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw SimError(ErrorKind::IoError, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    Scenario sc = parse_scenario(buf.str());
    if (sc.name == "scenario")
        sc.name = std::filesystem::path(path).stem().string();
    return sc;
}

} // namespace rafsim
