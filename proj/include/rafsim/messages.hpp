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

#include <variant>
#include <vector>

#include "rafsim/dataplane.hpp"
#include "rafsim/ids.hpp"
#include "rafsim/topology.hpp"

namespace rafsim {

// Controller <-> switch vocabulary. Each message names exactly one
// switch endpoint; the out-of-band channel carries it both ways.

struct MsgHello {
    SwitchId sw;
};

struct MsgFeatureRequest {
    SwitchId sw;
    bool initial = false;   // part of the bootstrap exchange
};

struct LinkReport {
    LinkId link;
    LinkStatus status = LinkStatus::Up;
};

struct MsgFeatureReply {
    SwitchId sw;
    std::vector<LinkReport> reports;
    bool initial = false;
};

struct MsgPacketIn {
    SwitchId sw;
    Packet packet;
    MissReason reason = MissReason::Miss;
};

struct MsgPacketOut {
    SwitchId sw;
    Packet packet;
    PortId port = 0;
};

struct MsgFlowModAdd {
    SwitchId sw;
    FlowRule rule;
};

struct MsgFlowModDelete {
    SwitchId sw;
    RuleSelector selector;
};

struct MsgPortStatus {
    SwitchId sw;
    PortId port = 0;
    LinkStatus status = LinkStatus::Up;
};

using ControlMessage = std::variant<MsgHello, MsgFeatureRequest, MsgFeatureReply,
                                    MsgPacketIn, MsgPacketOut, MsgFlowModAdd,
                                    MsgFlowModDelete, MsgPortStatus>;

const SwitchId& message_switch(const ControlMessage& msg);

} // namespace rafsim
