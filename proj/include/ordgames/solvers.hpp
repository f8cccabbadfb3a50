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

#include <string>
#include <vector>

#include "ordgames/objectives.hpp"
#include "ordgames/strategy.hpp"

namespace ordgames {

/// Winning regions of both players and a winning strategy for each on its region.
struct SolveResult {
    VertexSet win1;
    VertexSet win2;
    MooreStrategy strat1;
    MooreStrategy strat2;
    std::string route;

    const VertexSet& region(Player p) const { return p == Player::P1 ? win1 : win2; }
    const MooreStrategy& strategy(Player p) const { return p == Player::P1 ? strat1 : strat2; }
    Player winner(Vertex v) const { return win1.test(v) ? Player::P1 : Player::P2; }
};

struct Attractor {
    VertexSet set;
    std::vector<Vertex> strategy;  // forcing move of the player's vertices outside the target, else -1
};

/**
 * Vertices of `within` from which `player` forces a visit to `target` while the
 * play stays in `within`. Moves go to the smallest-id successor of lower rank.
 */
Attractor attractor(const Arena& arena, Player player, const VertexSet& target, const VertexSet& within);
Attractor attractor(const Arena& arena, Player player, const VertexSet& target);

SolveResult solveReach(const Arena& arena, const VertexSet& target);
SolveResult solveSafe(const Arena& arena, const VertexSet& safe);
SolveResult solveBuchi(const Arena& arena, const VertexSet& target);
SolveResult solveCoBuchi(const Arena& arena, const VertexSet& safe);

/**
 * Generalized Buchi for `player`, by removing opponent dominions until every
 * target is attracting. The player's strategy is a counter over the targets
 * (m states); the opponent's is memoryless.
 */
SolveResult solveGenBuchi(const Arena& arena, const std::vector<VertexSet>& targets, Player player = Player::P1);

/// Zielonka's recursion for min-even parity; memoryless strategies for both players.
SolveResult solveParity(const Arena& arena, const std::vector<int>& coloring);

SolveResult solveMuller(const Arena& arena, const Objective& muller, const Limits& limits = {});
SolveResult solveExplMuller(const Arena& arena, const Objective& explMuller, const Limits& limits = {});
SolveResult solveBooleanBuchi(const Arena& arena, const Objective& booleanBuchi, const Limits& limits = {});
/// GenReach, UIReach and UISafe through the occurrence product.
SolveResult solveOccurrence(const Arena& arena, const Objective& obj, const Limits& limits = {});

/// Dispatches on the objective kind.
SolveResult solve(const Arena& arena, const Objective& obj, const Limits& limits = {});

}  // namespace ordgames
