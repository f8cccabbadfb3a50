/*
 * Copyright 2026 The ordgames Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <optional>
#include <string>

#include "ordgames/reductions.hpp"

namespace ordgames {

/// A game file: the ordered game plus the optional threshold and initial vertex.
struct GameFile {
    OrderedGame game;
    std::optional<PayoffVector> threshold;
    std::optional<Vertex> initial;
};

/**
 * Parses the line-based game format. Statements may appear in any order;
 * vertex names are resolved once the whole file is read. Errors are reported as
 * InvalidInput with a "line:column:" prefix.
 *
 *   vertex <name> P1|P2
 *   edge <name> <name>
 *   preorder lexicographic|counting|subset|maximise
 *   preorder table { <bits> <= <bits> ... }
 *   objective reach|safe|buchi|cobuchi { <name>... }
 *   objective explicit-muller { { <name>... } ... }
 *   objective rabin|streett { ( { <name>... } { <name>... } ) ... }
 *   objective parity { <name>:<colour> ... }
 *   objective muller { <name>:<colour> ... } { { <colour>... } ... }
 *   threshold <bits>
 *   initial <name>
 */
GameFile parseGame(const std::string& text);
GameFile readGameFile(const std::string& path);

/// Canonical text form; parseGame(emitGame(f)) reproduces f.
std::string emitGame(const GameFile& file);

/**
 * Strategy file:
 *
 *   strategy P1|P2
 *   states <count>
 *   initial <state>
 *   update <state> <vertex> <state>
 *   next <state> <vertex> <vertex>
 */
MooreStrategy parseStrategy(const std::string& text, const Arena& arena);
MooreStrategy readStrategyFile(const std::string& path, const Arena& arena);
std::string emitStrategy(const MooreStrategy& strategy, const Arena& arena);

}  // namespace ordgames
