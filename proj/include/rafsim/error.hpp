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

#include <stdexcept>
#include <string>

namespace rafsim {

enum class ErrorKind {
    // input / file errors
    SyntaxError,
    DuplicateId,
    ReliabilityOutOfRange,
    NegativeDelay,
    DanglingEndpoint,
    PortCollision,
    UnknownKey,
    IoError,
    // lookup errors
    UnknownSwitch,
    UnknownHost,
    UnknownLink,
    UnknownPort,
    UnknownAddress,
    // runtime errors
    ProtocolError,
    NoPath,
    TimeTravel,
    ScenarioMismatch,
    Internal,
};

const char* error_kind_name(ErrorKind k);

class SimError : public std::runtime_error {
public:
    SimError(ErrorKind kind, std::string message, int line = 0, int column = 0);

    ErrorKind kind() const { return kind_; }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    ErrorKind kind_;
    int line_;
    int column_;
};

} // namespace rafsim
