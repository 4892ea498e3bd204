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
#include "rafsim/error.hpp"

namespace rafsim {

const char* error_kind_name(ErrorKind k)
{
    switch (k) {
    case ErrorKind::SyntaxError: return "syntax error";
    case ErrorKind::DuplicateId: return "duplicate id";
    case ErrorKind::ReliabilityOutOfRange: return "reliability outside [0,1]";
    case ErrorKind::NegativeDelay: return "negative delay";
    case ErrorKind::DanglingEndpoint: return "dangling endpoint";
    case ErrorKind::PortCollision: return "port collision";
    case ErrorKind::UnknownKey: return "unknown key";
    case ErrorKind::IoError: return "io error";
    case ErrorKind::UnknownSwitch: return "unknown switch";
    case ErrorKind::UnknownHost: return "unknown host";
    case ErrorKind::UnknownLink: return "unknown link";
    case ErrorKind::UnknownPort: return "unknown port";
    case ErrorKind::UnknownAddress: return "unknown address";
    case ErrorKind::ProtocolError: return "protocol error";
    case ErrorKind::NoPath: return "no path";
    case ErrorKind::TimeTravel: return "time travel";
    case ErrorKind::ScenarioMismatch: return "scenario mismatch";
    case ErrorKind::Internal: return "internal error";
    }
    return "error";
}

namespace {

std::string compose(ErrorKind kind, const std::string& message, int line, int column)
{
    std::string out = error_kind_name(kind);
    if (line > 0) {
        out += " at line " + std::to_string(line);
        if (column > 0)
            out += ", column " + std::to_string(column);
    }
    if (!message.empty()) {
        out += ": ";
        out += message;
    }
    return out;
}

} // namespace

SimError::SimError(ErrorKind kind, std::string message, int line, int column)
    : std::runtime_error(compose(kind, message, line, column)),
      kind_(kind), line_(line), column_(column)
{
}

} // namespace rafsim
