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
#include "rafsim/runner.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "rafsim/engine.hpp"
#include "rafsim/error.hpp"

namespace rafsim {

namespace fs = std::filesystem;

ParseResult parse_args(const std::vector<std::string>& args)
{
    CLI::App app{"Reliability-aware multipath flow installation simulator"};
    app.name("rafsim");

    RunRequest req;
    std::vector<std::string> strategy_names;
    std::string count_mode, path_rule, reliability, disjoint;
    std::uint64_t seed = 0;

    app.add_option("--topology", req.topology_path, "topology file")->required();
    app.add_option("--scenario", req.scenario_path, "scenario file")->required();
    app.add_option("--strategy", strategy_names,
                   "strategy to run: raf, raf-distance, all-paths (repeatable)");
    app.add_option("--out", req.out_dir, "output directory (default: out)");
    auto* seed_opt = app.add_option("--seed", seed, "seed override");
    app.add_option("--count-mode", count_mode, "tier counting: total|alternates");
    app.add_option("--path-rule", path_rule, "path reliability: product|min");
    app.add_option("--reliability", reliability, "link reliability: static|estimated");
    app.add_option("--disjoint", disjoint, "link-disjoint alternates: on|off");
    app.add_option("--jobs", req.jobs, "parallel strategy workers")
        ->check(CLI::PositiveNumber);

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp&) {
        return {std::nullopt, kExitOk, app.help()};
    } catch (const CLI::ParseError& e) {
        return {std::nullopt, kExitUsage, std::string(e.what()) + "\n" + app.help()};
    }

    for (const auto& name : strategy_names) {
        auto s = strategy_from_string(name);
        if (!s)
            return {std::nullopt, kExitUsage, "unknown strategy '" + name + "'"};
        req.strategies.push_back(*s);
    }
    if (seed_opt->count() > 0)
        req.seed = seed;
    if (!count_mode.empty()) {
        auto m = count_mode_from_string(count_mode);
        if (!m)
            return {std::nullopt, kExitUsage, "bad --count-mode '" + count_mode + "'"};
        req.count_mode = *m;
    }
    if (!path_rule.empty()) {
        auto r = path_rule_from_string(path_rule);
        if (!r)
            return {std::nullopt, kExitUsage, "bad --path-rule '" + path_rule + "'"};
        req.path_rule = *r;
    }
    if (!reliability.empty()) {
        auto m = reliability_mode_from_string(reliability);
        if (!m)
            return {std::nullopt, kExitUsage, "bad --reliability '" + reliability + "'"};
        req.reliability_mode = *m;
    }
    if (!disjoint.empty()) {
        if (disjoint == "on")
            req.disjoint_alternates = true;
        else if (disjoint == "off")
            req.disjoint_alternates = false;
        else
            return {std::nullopt, kExitUsage, "bad --disjoint '" + disjoint + "'"};
    }
    return {req, kExitOk, ""};
}

namespace {

Scenario scenario_for(const Scenario& base, const RunRequest& req, Strategy strategy)
{
    Scenario sc = base;
    sc.config.strategy = strategy;
    if (req.seed)
        sc.config.seed = *req.seed;
    if (req.count_mode)
        sc.config.count_mode = *req.count_mode;
    if (req.path_rule)
        sc.config.path_rule = *req.path_rule;
    if (req.reliability_mode)
        sc.config.reliability_mode = *req.reliability_mode;
    if (req.disjoint_alternates)
        sc.config.disjoint_alternates = *req.disjoint_alternates;
    return sc;
}

void write_file(const fs::path& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw SimError(ErrorKind::IoError, "cannot write '" + path.string() + "'");
    out << content;
}

std::string fmt_ms(const std::optional<double>& v)
{
    if (!v)
        return "-";
    std::ostringstream s;
    s << std::fixed << std::setprecision(3) << *v;
    return s.str();
}

} // namespace

RunOutcome run_scenario(const RunRequest& req, std::ostream& summary)
{
    Topology topo = Topology::parse_file(req.topology_path);
    Scenario base = parse_scenario_file(req.scenario_path);

    std::vector<Strategy> strategies = req.strategies;
    if (strategies.empty())
        strategies.push_back(base.config.strategy);

    RunOutcome outcome;
    outcome.reports.resize(strategies.size());

    if (req.jobs <= 1 || strategies.size() <= 1) {
        for (std::size_t i = 0; i < strategies.size(); ++i) {
            Engine engine(topo, scenario_for(base, req, strategies[i]));
            outcome.reports[i] = engine.run();
        }
    } else {
        std::vector<std::future<MetricsReport>> futures;
        futures.reserve(strategies.size());
        for (std::size_t i = 0; i < strategies.size(); ++i)
            futures.push_back(std::async(std::launch::async, [&, i] {
                Engine engine(topo, scenario_for(base, req, strategies[i]));
                return engine.run();
            }));
        for (std::size_t i = 0; i < strategies.size(); ++i)
            outcome.reports[i] = futures[i].get();
    }

    fs::create_directories(req.out_dir);
    for (std::size_t i = 0; i < strategies.size(); ++i) {
        fs::path path = fs::path(req.out_dir) / (strategy_name(strategies[i]) + ".csv");
        write_file(path, export_csv(outcome.reports[i]));
        outcome.written_files.push_back(path.string());
    }
    for (std::size_t i = 1; i < strategies.size(); ++i) {
        Comparison cmp = compare(outcome.reports[0], outcome.reports[i]);
        fs::path path = fs::path(req.out_dir) /
                        ("comparison_" + strategy_name(strategies[0]) + "_vs_" +
                         strategy_name(strategies[i]) + ".csv");
        write_file(path, export_comparison_csv(cmp));
        outcome.written_files.push_back(path.string());
    }

    summary << "scenario: " << base.name << "\n";
    summary << std::left << std::setw(14) << "strategy" << std::right << std::setw(10)
            << "delivered" << std::setw(9) << "dropped" << std::setw(10) << "mean_ms"
            << std::setw(11) << "flow_mods" << std::setw(11) << "peak_rules"
            << std::setw(13) << "path_comps" << std::setw(11) << "ctrl_msgs" << "\n";
    for (const auto& r : outcome.reports) {
        MetricsSummary s = summarize(r);
        summary << std::left << std::setw(14) << r.strategy << std::right << std::setw(10)
                << r.delivered << std::setw(9) << r.dropped << std::setw(10)
                << fmt_ms(s.mean_ms) << std::setw(11) << r.flow_mods_sent << std::setw(11)
                << r.peak_rules() << std::setw(13) << r.path_computations << std::setw(11)
                << r.control_messages_total() << "\n";
    }
    return outcome;
}

int run_scenario_main(const RunRequest& req, std::ostream& summary, std::ostream& errs)
{
    try {
        run_scenario(req, summary);
        return kExitOk;
    } catch (const SimError& e) {
        errs << "rafsim: " << e.what() << "\n";
        return e.kind() == ErrorKind::Internal ? kExitInternal : kExitInput;
    } catch (const std::exception& e) {
        errs << "rafsim: " << e.what() << "\n";
        return kExitInternal;
    }
}

} // namespace rafsim
