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
#include "rafsim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "rafsim/error.hpp"

namespace rafsim {

namespace {

std::string fixed6(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string opt6(const std::optional<double>& v)
{
    return v ? fixed6(*v) : std::string();
}

std::vector<std::string> split_csv(const std::string& line)
{
    std::vector<std::string> out;
    std::string field;
    for (char c : line) {
        if (c == ',') {
            out.push_back(field);
            field.clear();
        } else {
            field.push_back(c);
        }
    }
    out.push_back(field);
    return out;
}

std::optional<double> parse_opt(const std::string& s)
{
    if (s.empty())
        return std::nullopt;
    return std::stod(s);
}

} // namespace

std::size_t MetricsReport::peak_rules() const
{
    std::size_t peak = 0;
    for (const auto& [sw, stats] : per_switch_rules)
        peak = std::max(peak, stats.peak);
    return peak;
}

MetricsSummary summarize(const MetricsReport& report)
{
    MetricsSummary s;
    s.delivered = report.delivered;
    s.dropped = report.dropped;
    if (report.delays_ms.empty())
        return s;

    std::vector<double> sorted = report.delays_ms;
    std::sort(sorted.begin(), sorted.end());
    double sum = 0.0;
    for (double d : sorted)
        sum += d;
    const std::size_t n = sorted.size();
    s.mean_ms = sum / static_cast<double>(n);
    s.median_ms = n % 2 == 1 ? sorted[n / 2] : (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0;
    // nearest-rank percentile
    std::size_t rank = static_cast<std::size_t>(std::ceil(0.99 * static_cast<double>(n)));
    s.p99_ms = sorted[std::max<std::size_t>(rank, 1) - 1];
    s.min_ms = sorted.front();
    s.max_ms = sorted.back();
    return s;
}

std::string export_csv(const MetricsReport& report)
{
    MetricsSummary s = summarize(report);
    std::ostringstream out;
    out << "# rafsim-metrics v1\n";
    out << "scenario,strategy,path_computations,candidates_ranked,flow_mods_sent,"
           "packet_ins,packet_outs,feature_replies,bootstrap_msgs,port_status_notices,"
           "table_full_events,injected,delivered,dropped,in_flight,horizon_truncated,"
           "delay_mean_ms,delay_median_ms,delay_p99_ms,delay_min_ms,delay_max_ms\n";
    out << report.scenario << ',' << report.strategy << ','
        << report.path_computations << ',' << report.candidates_ranked << ','
        << report.flow_mods_sent << ',' << report.packet_ins << ','
        << report.packet_outs << ',' << report.feature_replies << ','
        << report.bootstrap_msgs << ',' << report.port_status_notices << ','
        << report.table_full_events << ',' << report.injected << ','
        << report.delivered << ',' << report.dropped << ',' << report.in_flight << ','
        << (report.horizon_truncated ? 1 : 0) << ','
        << opt6(s.mean_ms) << ',' << opt6(s.median_ms) << ',' << opt6(s.p99_ms) << ','
        << opt6(s.min_ms) << ',' << opt6(s.max_ms) << "\n";
    out << "# per-switch\n";
    out << "switch,peak_rules,final_rules\n";
    for (const auto& [sw, stats] : report.per_switch_rules)
        out << sw.name << ',' << stats.peak << ',' << stats.final_count << "\n";
    if (report.wall_ms)
        out << "# wall_ms," << fixed6(*report.wall_ms) << "\n";
    return out.str();
}

ParsedMetrics parse_csv(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> rows;
    while (std::getline(in, line))
        rows.push_back(line);

    if (rows.size() < 3 || rows[0] != "# rafsim-metrics v1")
        throw SimError(ErrorKind::SyntaxError, "not a rafsim metrics CSV");

    auto fields = split_csv(rows[2]);
    if (fields.size() != 21)
        throw SimError(ErrorKind::SyntaxError, "metrics row has wrong arity");

    ParsedMetrics pm;
    MetricsReport& r = pm.report;
    std::size_t i = 0;
    r.scenario = fields[i++];
    r.strategy = fields[i++];
    r.path_computations = std::stoull(fields[i++]);
    r.candidates_ranked = std::stoull(fields[i++]);
    r.flow_mods_sent = std::stoull(fields[i++]);
    r.packet_ins = std::stoull(fields[i++]);
    r.packet_outs = std::stoull(fields[i++]);
    r.feature_replies = std::stoull(fields[i++]);
    r.bootstrap_msgs = std::stoull(fields[i++]);
    r.port_status_notices = std::stoull(fields[i++]);
    r.table_full_events = std::stoull(fields[i++]);
    r.injected = std::stoull(fields[i++]);
    r.delivered = std::stoull(fields[i++]);
    r.dropped = std::stoull(fields[i++]);
    r.in_flight = std::stoull(fields[i++]);
    r.horizon_truncated = fields[i++] == "1";
    pm.summary.delivered = r.delivered;
    pm.summary.dropped = r.dropped;
    pm.summary.mean_ms = parse_opt(fields[i++]);
    pm.summary.median_ms = parse_opt(fields[i++]);
    pm.summary.p99_ms = parse_opt(fields[i++]);
    pm.summary.min_ms = parse_opt(fields[i++]);
    pm.summary.max_ms = parse_opt(fields[i++]);

    std::size_t row = 3;
    if (row < rows.size() && rows[row] == "# per-switch")
        ++row;
    if (row < rows.size() && rows[row] == "switch,peak_rules,final_rules")
        ++row;
    for (; row < rows.size(); ++row) {
        if (rows[row].empty() || rows[row][0] == '#')
            continue;
        auto cols = split_csv(rows[row]);
        if (cols.size() != 3)
            throw SimError(ErrorKind::SyntaxError, "per-switch row has wrong arity");
        SwitchRuleStats stats;
        stats.peak = std::stoull(cols[1]);
        stats.final_count = std::stoull(cols[2]);
        r.per_switch_rules.emplace(SwitchId{cols[0]}, stats);
    }
    return pm;
}

Comparison compare(const MetricsReport& a, const MetricsReport& b)
{
    if (a.scenario != b.scenario)
        throw SimError(ErrorKind::ScenarioMismatch,
                       "'" + a.scenario + "' vs '" + b.scenario + "'");

    Comparison cmp;
    cmp.scenario = a.scenario;
    cmp.strategy_a = a.strategy;
    cmp.strategy_b = b.strategy;

    auto push = [&](const std::string& name, double va, double vb) {
        MetricRatio row{name, va, vb, std::nullopt};
        if (vb != 0.0)
            row.ratio = va / vb;
        cmp.rows.push_back(row);
    };

    MetricsSummary sa = summarize(a);
    MetricsSummary sb = summarize(b);

    push("path_computations", double(a.path_computations), double(b.path_computations));
    push("candidates_ranked", double(a.candidates_ranked), double(b.candidates_ranked));
    push("flow_mods_sent", double(a.flow_mods_sent), double(b.flow_mods_sent));
    push("packet_ins", double(a.packet_ins), double(b.packet_ins));
    push("packet_outs", double(a.packet_outs), double(b.packet_outs));
    push("control_messages", double(a.control_messages_total()),
         double(b.control_messages_total()));
    push("peak_rule_count", double(a.peak_rules()), double(b.peak_rules()));
    push("table_full_events", double(a.table_full_events), double(b.table_full_events));
    push("delivered", double(a.delivered), double(b.delivered));
    push("mean_delay_ms", sa.mean_ms.value_or(0.0), sb.mean_ms.value_or(0.0));
    return cmp;
}

std::string export_comparison_csv(const Comparison& cmp)
{
    std::ostringstream out;
    out << "# rafsim-comparison v1\n";
    out << "scenario," << cmp.scenario << "\n";
    out << "metric," << cmp.strategy_a << ',' << cmp.strategy_b << ",ratio\n";
    for (const auto& row : cmp.rows) {
        out << row.metric << ',' << fixed6(row.a) << ',' << fixed6(row.b) << ',';
        if (row.ratio)
            out << fixed6(*row.ratio);
        out << "\n";
    }
    return out.str();
}

} // namespace rafsim
