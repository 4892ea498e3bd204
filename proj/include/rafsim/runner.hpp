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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rafsim/metrics.hpp"
#include "rafsim/scenario.hpp"

namespace rafsim {

struct RunRequest {
    std::string topology_path;
    std::string scenario_path;
    std::vector<Strategy> strategies;   // empty: scenario file decides
    std::string out_dir = "out";
    std::optional<std::uint64_t> seed;
    std::optional<TierCountMode> count_mode;
    std::optional<PathReliabilityRule> path_rule;
    std::optional<ReliabilityMode> reliability_mode;
    std::optional<bool> disjoint_alternates;
    std::size_t jobs = 1;
};

// Exit codes: 0 success, 1 usage, 2 input error, 3 internal invariant
// violation.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitInput = 2,
    kExitInternal = 3,
};

struct ParseResult {
    std::optional<RunRequest> request;   // empty on error or --help
    int exit_code = kExitOk;
    std::string message;                 // usage/error text when request is empty
};

ParseResult parse_args(const std::vector<std::string>& args);

struct RunOutcome {
    std::vector<MetricsReport> reports;       // one per strategy, request order
    std::vector<std::string> written_files;
};

// Loads inputs, runs every requested strategy, writes per-strategy
// metrics CSVs plus pairwise comparisons under out_dir. Throws SimError
// on input or internal problems.
RunOutcome run_scenario(const RunRequest& req, std::ostream& summary);

// Exception-absorbing wrapper mapping errors to exit codes.
int run_scenario_main(const RunRequest& req, std::ostream& summary, std::ostream& errs);

} // namespace rafsim
