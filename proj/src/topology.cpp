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
#include "rafsim/topology.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "rafsim/error.hpp"

namespace rafsim {

// Topology file grammar (line oriented, '#' starts a comment):
//
//   [switches]
//   <switch-id> ...          # one or more ids per line
//   [hosts]
//   <host-id> <ipv4> <switch>:<port>
//   [links]
//   <link-id> <switchA>:<portA> <switchB>:<portB> <reliability> <delay_ms>
//
// Sections may appear in any order; ids are free-form words. Ports are
// integers >= 1 (port 0 belongs to the controller channel). Anything
// else is rejected.

namespace {

struct Token {
    std::string text;
    int column = 0;
};

struct RawLine {
    int number = 0;
    std::vector<Token> tokens;
};

std::vector<Token> tokenize(const std::string& line)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#')
            break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
               line[i] != '#')
            ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

[[noreturn]] void fail(ErrorKind kind, const std::string& msg, int line, int col = 0)
{
    throw SimError(kind, msg, line, col);
}

PortId parse_port(const std::string& text, int line, int col)
{
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value == 0 || value > 65535)
        fail(ErrorKind::SyntaxError, "expected port number >= 1, got '" + text + "'", line, col);
    return static_cast<PortId>(value);
}

LinkEnd parse_endpoint(const Token& tok, int line)
{
    auto colon = tok.text.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 >= tok.text.size())
        fail(ErrorKind::SyntaxError, "expected <switch>:<port>, got '" + tok.text + "'",
             line, tok.column);
    return {SwitchId{tok.text.substr(0, colon)},
            parse_port(tok.text.substr(colon + 1), line, tok.column)};
}

double parse_real(const Token& tok, int line)
{
    const char* begin = tok.text.c_str();
    char* end = nullptr;
    double value = std::strtod(begin, &end);
    if (end != begin + tok.text.size() || tok.text.empty())
        fail(ErrorKind::SyntaxError, "expected a number, got '" + tok.text + "'",
             line, tok.column);
    return value;
}

std::string format_real(double v)
{
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, ptr);
}

} // namespace

Topology Topology::parse(const std::string& text)
{
    enum class Section { None, Switches, Hosts, Links };
    Section section = Section::None;

    std::vector<std::pair<RawLine, Section>> records;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = tokenize(line);
        if (tokens.empty())
            continue;
        const auto& first = tokens.front();
        if (first.text.front() == '[') {
            if (tokens.size() != 1)
                fail(ErrorKind::SyntaxError, "unexpected tokens after section header",
                     line_no, tokens[1].column);
            if (first.text == "[switches]")
                section = Section::Switches;
            else if (first.text == "[hosts]")
                section = Section::Hosts;
            else if (first.text == "[links]")
                section = Section::Links;
            else
                fail(ErrorKind::UnknownKey, "unknown section '" + first.text + "'",
                     line_no, first.column);
            continue;
        }
        if (section == Section::None)
            fail(ErrorKind::SyntaxError, "content before any section header",
                 line_no, first.column);
        records.push_back({RawLine{line_no, std::move(tokens)}, section});
    }

    Topology topo;

    for (const auto& [raw, sec] : records) {
        if (sec != Section::Switches)
            continue;
        for (const auto& tok : raw.tokens) {
            SwitchId id{tok.text};
            if (topo.switches_.count(id))
                fail(ErrorKind::DuplicateId, "switch '" + tok.text + "'",
                     raw.number, tok.column);
            topo.switches_.insert(id);
        }
    }

    // (switch, port) occupancy across links and host attachments
    std::map<LinkEnd, std::string> used_ports;
    auto claim_port = [&](const LinkEnd& end, const std::string& owner, int ln, int col) {
        if (!topo.switches_.count(end.sw))
            fail(ErrorKind::DanglingEndpoint,
                 "undeclared switch '" + end.sw.name + "'", ln, col);
        auto [it, fresh] = used_ports.insert({end, owner});
        if (!fresh)
            fail(ErrorKind::PortCollision,
                 end.sw.name + ":" + std::to_string(end.port) + " already used by " +
                     it->second, ln, col);
    };

    std::set<Ipv4> addresses;
    for (const auto& [raw, sec] : records) {
        if (sec != Section::Hosts)
            continue;
        if (raw.tokens.size() != 3)
            fail(ErrorKind::SyntaxError,
                 "host line needs <id> <ipv4> <switch>:<port>", raw.number,
                 raw.tokens.front().column);
        Host h;
        h.id = HostId{raw.tokens[0].text};
        if (topo.hosts_.count(h.id))
            fail(ErrorKind::DuplicateId, "host '" + h.id.name + "'", raw.number,
                 raw.tokens[0].column);
        auto addr = parse_ipv4(raw.tokens[1].text);
        if (!addr)
            fail(ErrorKind::SyntaxError,
                 "expected dotted IPv4 address, got '" + raw.tokens[1].text + "'",
                 raw.number, raw.tokens[1].column);
        if (!addresses.insert(*addr).second)
            fail(ErrorKind::DuplicateId, "address " + raw.tokens[1].text, raw.number,
                 raw.tokens[1].column);
        h.address = *addr;
        h.attach = parse_endpoint(raw.tokens[2], raw.number);
        claim_port(h.attach, "host " + h.id.name, raw.number, raw.tokens[2].column);
        topo.hosts_.emplace(h.id, h);
    }

    for (const auto& [raw, sec] : records) {
        if (sec != Section::Links)
            continue;
        if (raw.tokens.size() != 5)
            fail(ErrorKind::SyntaxError,
                 "link line needs <id> <swA>:<portA> <swB>:<portB> <reliability> <delay_ms>",
                 raw.number, raw.tokens.front().column);
        Link l;
        l.id = LinkId{raw.tokens[0].text};
        if (topo.links_.count(l.id))
            fail(ErrorKind::DuplicateId, "link '" + l.id.name + "'", raw.number,
                 raw.tokens[0].column);
        l.end_a = parse_endpoint(raw.tokens[1], raw.number);
        l.end_b = parse_endpoint(raw.tokens[2], raw.number);
        if (l.end_a.sw == l.end_b.sw)
            fail(ErrorKind::SyntaxError, "self-loop on switch '" + l.end_a.sw.name + "'",
                 raw.number, raw.tokens[1].column);
        l.reliability = parse_real(raw.tokens[3], raw.number);
        if (l.reliability < 0.0 || l.reliability > 1.0)
            fail(ErrorKind::ReliabilityOutOfRange, raw.tokens[3].text, raw.number,
                 raw.tokens[3].column);
        l.delay_ms = parse_real(raw.tokens[4], raw.number);
        if (l.delay_ms < 0.0)
            fail(ErrorKind::NegativeDelay, raw.tokens[4].text, raw.number,
                 raw.tokens[4].column);
        claim_port(l.end_a, "link " + l.id.name, raw.number, raw.tokens[1].column);
        claim_port(l.end_b, "link " + l.id.name, raw.number, raw.tokens[2].column);
        topo.links_.emplace(l.id, l);
    }

    return topo;
}

Topology Topology::parse_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw SimError(ErrorKind::IoError, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

std::string Topology::render() const
{
    std::ostringstream out;
    out << "[switches]\n";
    for (const auto& s : switches_)
        out << s.name << "\n";
    out << "[hosts]\n";
    for (const auto& [id, h] : hosts_)
        out << id.name << " " << format_ipv4(h.address) << " " << h.attach.sw.name
            << ":" << h.attach.port << "\n";
    out << "[links]\n";
    for (const auto& [id, l] : links_)
        out << id.name << " " << l.end_a.sw.name << ":" << l.end_a.port << " "
            << l.end_b.sw.name << ":" << l.end_b.port << " "
            << format_real(l.reliability) << " " << format_real(l.delay_ms) << "\n";
    return out.str();
}

void Topology::add_switch(const SwitchId& id)
{
    if (!switches_.insert(id).second)
        throw SimError(ErrorKind::DuplicateId, "switch '" + id.name + "'");
}

void Topology::add_host(const Host& host)
{
    if (hosts_.count(host.id))
        throw SimError(ErrorKind::DuplicateId, "host '" + host.id.name + "'");
    for (const auto& [id, h] : hosts_)
        if (h.address == host.address)
            throw SimError(ErrorKind::DuplicateId, "address " + format_ipv4(host.address));
    hosts_.emplace(host.id, host);
}

void Topology::add_link(const Link& link)
{
    if (links_.count(link.id))
        throw SimError(ErrorKind::DuplicateId, "link '" + link.id.name + "'");
    if (link.end_a.sw == link.end_b.sw)
        throw SimError(ErrorKind::SyntaxError, "self-loop on '" + link.end_a.sw.name + "'");
    if (link.reliability < 0.0 || link.reliability > 1.0)
        throw SimError(ErrorKind::ReliabilityOutOfRange, link.id.name);
    if (link.delay_ms < 0.0)
        throw SimError(ErrorKind::NegativeDelay, link.id.name);
    links_.emplace(link.id, link);
}

void Topology::validate() const
{
    std::map<LinkEnd, std::string> used;
    auto claim = [&](const LinkEnd& end, const std::string& owner) {
        if (!switches_.count(end.sw))
            throw SimError(ErrorKind::DanglingEndpoint,
                           owner + " references undeclared switch '" + end.sw.name + "'");
        auto [it, fresh] = used.insert({end, owner});
        if (!fresh)
            throw SimError(ErrorKind::PortCollision,
                           end.sw.name + ":" + std::to_string(end.port) + " used by " +
                               it->second + " and " + owner);
    };
    for (const auto& [id, h] : hosts_)
        claim(h.attach, "host " + id.name);
    for (const auto& [id, l] : links_) {
        claim(l.end_a, "link " + id.name);
        claim(l.end_b, "link " + id.name);
    }
}

const Link& Topology::link(const LinkId& id) const
{
    auto it = links_.find(id);
    if (it == links_.end())
        throw SimError(ErrorKind::UnknownLink, id.name);
    return it->second;
}

const Host& Topology::host(const HostId& id) const
{
    auto it = hosts_.find(id);
    if (it == hosts_.end())
        throw SimError(ErrorKind::UnknownHost, id.name);
    return it->second;
}

std::vector<Neighbor> Topology::neighbors(const SwitchId& s) const
{
    if (!switches_.count(s))
        throw SimError(ErrorKind::UnknownSwitch, s.name);
    std::vector<Neighbor> out;
    for (const auto& [id, l] : links_) {
        if (l.end_a.sw == s)
            out.push_back({id, l.end_a.port, l.end_b.sw});
        else if (l.end_b.sw == s)
            out.push_back({id, l.end_b.port, l.end_a.sw});
    }
    std::sort(out.begin(), out.end(),
              [](const Neighbor& a, const Neighbor& b) { return a.egress < b.egress; });
    return out;
}

const Host& Topology::host_by_address(Ipv4 addr) const
{
    for (const auto& [id, h] : hosts_)
        if (h.address == addr)
            return h;
    throw SimError(ErrorKind::UnknownAddress, format_ipv4(addr));
}

const Link* Topology::link_at(const SwitchId& sw, PortId port) const
{
    for (const auto& [id, l] : links_) {
        if ((l.end_a.sw == sw && l.end_a.port == port) ||
            (l.end_b.sw == sw && l.end_b.port == port))
            return &l;
    }
    return nullptr;
}

const Host* Topology::host_at(const SwitchId& sw, PortId port) const
{
    for (const auto& [id, h] : hosts_)
        if (h.attach.sw == sw && h.attach.port == port)
            return &h;
    return nullptr;
}

const Link* Topology::link_between(const SwitchId& a, const SwitchId& b) const
{
    for (const auto& [id, l] : links_) {
        if ((l.end_a.sw == a && l.end_b.sw == b) || (l.end_a.sw == b && l.end_b.sw == a))
            return &l;
    }
    return nullptr;
}

void Topology::set_link_status(const LinkId& id, LinkStatus status)
{
    auto it = links_.find(id);
    if (it == links_.end())
        throw SimError(ErrorKind::UnknownLink, id.name);
    it->second.status = status;
}

} // namespace rafsim
