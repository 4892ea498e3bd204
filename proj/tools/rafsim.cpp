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
#include <iostream>
#include <string>
#include <vector>

#include "rafsim/runner.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    rafsim::ParseResult parsed = rafsim::parse_args(args);
    if (!parsed.request) {
        (parsed.exit_code == rafsim::kExitOk ? std::cout : std::cerr) << parsed.message;
        return parsed.exit_code;
    }
    return rafsim::run_scenario_main(*parsed.request, std::cout, std::cerr);
}
