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
#include <doctest.h>

#include <random>

#include "rafsim/dataplane.hpp"
#include "rafsim/error.hpp"

using namespace rafsim;

namespace {

SwitchState make_switch(std::size_t capacity = 1500)
{
    SwitchState sw(SwitchId{"s1"}, capacity);
    for (PortId p = 1; p <= 4; ++p)
        sw.add_port(p);
    return sw;
}

FlowRule forward_rule(Ipv4 src, Ipv4 dst, int priority, PortId port, Cookie cookie = 1)
{
    FlowRule r;
    r.match = {0x0800, 17, src, dst};
    r.priority = priority;
    r.action = ActionForward{port};
    r.cookie = cookie;
    return r;
}

Packet packet(Ipv4 src, Ipv4 dst)
{
    Packet p;
    p.src = src;
    p.dst = dst;
    return p;
}

} // namespace

TEST_CASE("install")
{
    auto sw = make_switch();

    SUBCASE("adds an entry")
    {
        CHECK(sw.install_rule(forward_rule(1, 2, 1000, 1)) == InstallResult::Ok);
        CHECK(sw.table().size() == 1);
    }

    SUBCASE("re-install of the same (match, priority) replaces in place")
    {
        sw.install_rule(forward_rule(1, 2, 1000, 1));
        CHECK(sw.install_rule(forward_rule(1, 2, 1000, 3)) == InstallResult::Ok);
        CHECK(sw.table().size() == 1);
        auto res = sw.lookup(packet(1, 2));
        CHECK(res.forward_port() == 3);
    }

    SUBCASE("table-full only when a new entry would exceed capacity")
    {
        auto small = make_switch(2);
        CHECK(small.install_rule(forward_rule(1, 2, 1000, 1)) == InstallResult::Ok);
        CHECK(small.install_rule(forward_rule(1, 3, 1000, 1)) == InstallResult::Ok);
        CHECK(small.install_rule(forward_rule(1, 4, 1000, 1)) == InstallResult::TableFull);
        CHECK(small.table().size() == 2);
        // replacement still fine at capacity
        CHECK(small.install_rule(forward_rule(1, 3, 1000, 2)) == InstallResult::Ok);
    }

    SUBCASE("forward action must name an existing port")
    {
        CHECK_THROWS_AS(sw.install_rule(forward_rule(1, 2, 1000, 99)), SimError);
    }
}

TEST_CASE("lookup")
{
    auto sw = make_switch();

    SUBCASE("empty table misses to the controller")
    {
        auto res = sw.lookup(packet(1, 2));
        CHECK(res.is_to_controller());
        CHECK(res.reason == MissReason::Miss);
    }

    SUBCASE("dead egress falls back to the next priority")
    {
        // trace: prio 1000 forwards via p2 which is down, so the scan
        // skips it; prio 990 forwards via p3 which is up
        sw.install_rule(forward_rule(1, 2, 1000, 2));
        sw.install_rule(forward_rule(1, 2, 990, 3));
        sw.set_port_status(2, LinkStatus::Down);
        auto res = sw.lookup(packet(1, 2));
        REQUIRE(res.is_forward());
        CHECK(res.forward_port() == 3);
        CHECK(*res.matched_priority == 990);
    }

    SUBCASE("drop entry drops")
    {
        FlowRule r;
        r.match = packet(1, 2).match();
        r.priority = 500;
        r.action = ActionDrop{};
        sw.install_rule(r);
        CHECK(sw.lookup(packet(1, 2)).is_drop());
    }

    SUBCASE("to-controller action behaves like a miss report")
    {
        FlowRule r;
        r.match = packet(1, 2).match();
        r.priority = 500;
        r.action = ActionToController{};
        sw.install_rule(r);
        auto res = sw.lookup(packet(1, 2));
        CHECK(res.is_to_controller());
        CHECK(res.reason == MissReason::Miss);
    }

    SUBCASE("all matching forwards dead reports all-dead")
    {
        sw.install_rule(forward_rule(1, 2, 1000, 2));
        sw.install_rule(forward_rule(1, 2, 990, 3));
        sw.set_port_status(2, LinkStatus::Down);
        sw.set_port_status(3, LinkStatus::Down);
        auto res = sw.lookup(packet(1, 2));
        CHECK(res.is_to_controller());
        CHECK(res.reason == MissReason::AllDead);
    }

    SUBCASE("highest priority wins with all ports up")
    {
        sw.install_rule(forward_rule(1, 2, 990, 3));
        sw.install_rule(forward_rule(1, 2, 1000, 2));
        CHECK(sw.lookup(packet(1, 2)).forward_port() == 2);
    }

    SUBCASE("exact match only")
    {
        sw.install_rule(forward_rule(1, 2, 1000, 2));
        CHECK(sw.lookup(packet(1, 3)).is_to_controller());
        Packet other = packet(1, 2);
        other.nw_proto = 6;
        CHECK(sw.lookup(other).is_to_controller());
    }
}

TEST_CASE("lookup properties")
{
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> prio(0, 5);
    std::uniform_int_distribution<int> port(1, 4);
    std::uniform_int_distribution<int> addr(1, 3);
    std::bernoulli_distribution coin(0.5);

    for (int trial = 0; trial < 200; ++trial) {
        auto sw = make_switch();
        for (int i = 0; i < 12; ++i) {
            FlowRule r = forward_rule(addr(rng), addr(rng), prio(rng) * 10,
                                      static_cast<PortId>(port(rng)));
            if (coin(rng))
                r.action = ActionDrop{};
            sw.install_rule(r);
        }
        for (PortId p = 1; p <= 4; ++p)
            sw.set_port_status(p, coin(rng) ? LinkStatus::Up : LinkStatus::Down);

        Packet pkt = packet(addr(rng), addr(rng));
        auto res = sw.lookup(pkt);
        // never forwards through a dead port
        if (res.is_forward())
            CHECK(sw.port_up(res.forward_port()));
        // deterministic
        auto again = sw.lookup(pkt);
        CHECK(res.action == again.action);
        CHECK(res.reason == again.reason);
    }
}

TEST_CASE("remove_rules")
{
    auto sw = make_switch();
    sw.install_rule(forward_rule(1, 2, 1000, 1, /*cookie=*/7));
    sw.install_rule(forward_rule(1, 2, 990, 2, 7));
    sw.install_rule(forward_rule(1, 3, 1000, 1, 7));
    sw.install_rule(forward_rule(1, 4, 1000, 2, 8));
    sw.install_rule(forward_rule(1, 5, 1000, 3, 9));

    SUBCASE("by cookie")
    {
        CHECK(sw.table().remove(RuleSelector::by_cookie(7)) == 3);
        CHECK(sw.table().size() == 2);
    }

    SUBCASE("by egress with no users")
    {
        CHECK(sw.table().remove(RuleSelector::by_egress(4)) == 0);
        CHECK(sw.table().size() == 5);
    }

    SUBCASE("by match clears every priority of that match")
    {
        FlowMatch m{0x0800, 17, 1, 2};
        // enumerated before: priorities 1000 and 990 exist for m
        REQUIRE(sw.table().entries_for(m)->size() == 2);
        CHECK(sw.table().remove(RuleSelector::by_match(m)) == 2);
        CHECK(sw.table().entries_for(m) == nullptr);
    }

    SUBCASE("cookie and priority combine conjunctively")
    {
        RuleSelector sel;
        sel.cookie = 7;
        sel.priority = 990;
        CHECK(sw.table().remove(sel) == 1);
        CHECK(sw.table().size() == 4);
    }

    SUBCASE("install k then remove by shared cookie restores the size")
    {
        auto fresh = make_switch();
        fresh.install_rule(forward_rule(9, 1, 1000, 1, 42));
        std::size_t before = fresh.table().size();
        for (int i = 0; i < 5; ++i)
            fresh.install_rule(forward_rule(20 + i, 1, 1000, 1, 43));
        CHECK(fresh.table().remove(RuleSelector::by_cookie(43)) == 5);
        CHECK(fresh.table().size() == before);
    }
}

TEST_CASE("port status")
{
    auto sw = make_switch();
    sw.install_rule(forward_rule(1, 2, 1000, 2));

    SUBCASE("down is visible immediately and idempotent")
    {
        sw.set_port_status(2, LinkStatus::Down);
        CHECK(sw.lookup(packet(1, 2)).is_to_controller());
        sw.set_port_status(2, LinkStatus::Down);
        CHECK(!sw.port_up(2));
    }

    SUBCASE("up restores forwarding")
    {
        sw.set_port_status(2, LinkStatus::Down);
        sw.set_port_status(2, LinkStatus::Up);
        CHECK(sw.lookup(packet(1, 2)).forward_port() == 2);
    }

    SUBCASE("unknown port")
    {
        CHECK_THROWS_AS(sw.set_port_status(99, LinkStatus::Down), SimError);
    }
}

TEST_CASE("timeout sweep")
{
    auto sw = make_switch();

    SUBCASE("zero timeouts never expire")
    {
        sw.install_rule(forward_rule(1, 2, 1000, 1), 0.0);
        CHECK(sw.table().sweep_timeouts(1e9) == 0);
        CHECK(sw.table().size() == 1);
    }

    SUBCASE("idle expiry measured from the last hit")
    {
        FlowRule r = forward_rule(1, 2, 1000, 1);
        r.idle_timeout_ms = 100;
        sw.install_rule(r, 0.0);
        sw.table().note_hit(r.match, r.priority, 50.0);
        CHECK(sw.table().sweep_timeouts(149.0) == 0);
        CHECK(sw.table().sweep_timeouts(200.0) == 1);
    }

    SUBCASE("hard expiry measured from install")
    {
        FlowRule r = forward_rule(1, 2, 1000, 1);
        r.hard_timeout_ms = 500;
        sw.install_rule(r, 0.0);
        sw.table().note_hit(r.match, r.priority, 400.0);
        CHECK(sw.table().sweep_timeouts(400.0) == 0);   // 400 < 500: retained
        CHECK(sw.table().sweep_timeouts(500.0) == 1);
    }
}

TEST_CASE("capacity invariant under random churn")
{
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<int> addr(1, 40);
    std::bernoulli_distribution remove(0.3);

    auto sw = make_switch(10);
    for (int i = 0; i < 500; ++i) {
        if (remove(rng)) {
            sw.table().remove(RuleSelector::by_match({0x0800, 17,
                                                      static_cast<Ipv4>(addr(rng)),
                                                      static_cast<Ipv4>(addr(rng))}));
        } else {
            sw.install_rule(forward_rule(addr(rng), addr(rng), 1000, 1));
        }
        CHECK(sw.table().size() <= sw.table().capacity());
    }
}
