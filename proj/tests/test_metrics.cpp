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

#include <sstream>

#include "rafsim/error.hpp"
#include "rafsim/metrics.hpp"

using namespace rafsim;

namespace {

MetricsReport sample_report()
{
    MetricsReport r;
    r.scenario = "ref";
    r.strategy = "raf";
    r.path_computations = 5;
    r.candidates_ranked = 50;
    r.flow_mods_sent = 15;
    r.packet_ins = 5;
    r.packet_outs = 5;
    r.feature_replies = 90;
    r.bootstrap_msgs = 27;
    r.injected = 100;
    r.delivered = 98;
    r.dropped = 2;
    r.delays_ms.assign(98, 3.1);
    for (int i = 1; i <= 9; ++i)
        r.per_switch_rules[SwitchId{"s" + std::to_string(i)}] = {std::size_t(i), std::size_t(i)};
    return r;
}

} // namespace

TEST_CASE("summarize")
{
    SUBCASE("constant delays")
    {
        MetricsReport r;
        r.delivered = 2;
        r.delays_ms = {3.1, 3.1};
        auto s = summarize(r);
        CHECK(*s.mean_ms == doctest::Approx(3.1));
        CHECK(*s.median_ms == doctest::Approx(3.1));
    }

    SUBCASE("no delivered packets reports absent stats, not zero")
    {
        MetricsReport r;
        auto s = summarize(r);
        CHECK(!s.mean_ms);
        CHECK(!s.median_ms);
        CHECK(!s.p99_ms);
    }

    SUBCASE("mean of 1,2,3")
    {
        MetricsReport r;
        r.delivered = 3;
        r.delays_ms = {3.0, 1.0, 2.0};
        auto s = summarize(r);
        CHECK(*s.mean_ms == doctest::Approx(2.0));
        CHECK(*s.median_ms == doctest::Approx(2.0));
        CHECK(*s.min_ms == doctest::Approx(1.0));
        CHECK(*s.max_ms == doctest::Approx(3.0));
    }
}

TEST_CASE("export_csv")
{
    SUBCASE("byte identical for identical reports")
    {
        CHECK(export_csv(sample_report()) == export_csv(sample_report()));
    }

    SUBCASE("per-switch section has one row per switch")
    {
        std::string csv = export_csv(sample_report());
        std::size_t rows = 0;
        std::istringstream in(csv);
        std::string line;
        bool in_switch_section = false;
        while (std::getline(in, line)) {
            if (line == "# per-switch") {
                in_switch_section = true;
                continue;
            }
            if (in_switch_section && !line.empty() && line[0] != '#' &&
                line.rfind("switch,", 0) != 0)
                ++rows;
        }
        CHECK(rows == 9);
    }

    SUBCASE("zeroed report still renders")
    {
        MetricsReport zero;
        std::string csv = export_csv(zero);
        CHECK(csv.find("# rafsim-metrics v1") == 0);
        auto parsed = parse_csv(csv);
        CHECK(parsed.report.delivered == 0);
        CHECK(!parsed.summary.mean_ms);
    }
}

TEST_CASE("wall-clock annotation is a comment and never breaks parsing")
{
    MetricsReport r = sample_report();
    r.wall_ms = 12.5;
    std::string csv = export_csv(r);
    CHECK(csv.find("# wall_ms,12.500000") != std::string::npos);
    auto parsed = parse_csv(csv);
    CHECK(parsed.report.delivered == r.delivered);

    r.wall_ms.reset();
    CHECK(export_csv(r).find("wall_ms") == std::string::npos);
}

TEST_CASE("csv round-trip")
{
    MetricsReport r = sample_report();
    ParsedMetrics back = parse_csv(export_csv(r));

    CHECK(back.report.scenario == r.scenario);
    CHECK(back.report.strategy == r.strategy);
    CHECK(back.report.path_computations == r.path_computations);
    CHECK(back.report.candidates_ranked == r.candidates_ranked);
    CHECK(back.report.flow_mods_sent == r.flow_mods_sent);
    CHECK(back.report.delivered == r.delivered);
    CHECK(back.report.per_switch_rules.size() == r.per_switch_rules.size());
    CHECK(back.report.per_switch_rules.at(SwitchId{"s7"}).peak == 7);

    auto s = summarize(r);
    CHECK(*back.summary.mean_ms == doctest::Approx(*s.mean_ms).epsilon(1e-6));
    CHECK(*back.summary.p99_ms == doctest::Approx(*s.p99_ms).epsilon(1e-6));
}

TEST_CASE("compare")
{
    SUBCASE("flow-mod ratio for the worked example")
    {
        MetricsReport raf = sample_report();
        raf.flow_mods_sent = 3;
        MetricsReport baseline = sample_report();
        baseline.strategy = "all-paths";
        baseline.flow_mods_sent = 34;
        auto cmp = compare(raf, baseline);
        for (const auto& row : cmp.rows)
            if (row.metric == "flow_mods_sent") {
                REQUIRE(row.ratio.has_value());
                CHECK(*row.ratio == doctest::Approx(3.0 / 34.0));
            }
    }

    SUBCASE("equal reports give unit ratios")
    {
        auto cmp = compare(sample_report(), sample_report());
        for (const auto& row : cmp.rows)
            if (row.ratio)
                CHECK(*row.ratio == doctest::Approx(1.0));
    }

    SUBCASE("zero denominators yield absent ratios")
    {
        MetricsReport a = sample_report();
        MetricsReport b = sample_report();
        b.packet_ins = 0;
        auto cmp = compare(a, b);
        for (const auto& row : cmp.rows)
            if (row.metric == "packet_ins")
                CHECK(!row.ratio.has_value());
    }

    SUBCASE("scenario mismatch is an error")
    {
        MetricsReport a = sample_report();
        MetricsReport b = sample_report();
        b.scenario = "other";
        CHECK_THROWS_AS(compare(a, b), SimError);
    }

    SUBCASE("comparison csv renders absent ratios as empty")
    {
        MetricsReport a = sample_report();
        MetricsReport b = sample_report();
        b.packet_ins = 0;
        std::string csv = export_comparison_csv(compare(a, b));
        CHECK(csv.find("# rafsim-comparison v1") == 0);
        CHECK(csv.find("packet_ins,5.000000,0.000000,\n") != std::string::npos);
    }
}
