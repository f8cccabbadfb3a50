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
#include <utility>
#include <vector>

#include "ordgames/reductions.hpp"
#include "ordgames/solvers.hpp"

namespace ordgames {

struct ThresholdOptions {
    BuchiRoute route = BuchiRoute::Auto;
    Limits limits;
};

struct ThresholdAnswer {
    Player winner = Player::P1;
    MooreStrategy strategy;  // winning strategy of `winner`, minimized
    std::string route;
};

/**
 * Regions of the threshold game "payoff >= mu" over the whole arena: win1 is
 * where P1 ensures a payoff at least mu, win2 where P2 avoids it. Strategies
 * are minimized.
 */
SolveResult solveThresholdRegions(const OrderedGame& game, const PayoffVector& mu, const ThresholdOptions& options = {});

ThresholdAnswer solveThreshold(const OrderedGame& game, const PayoffVector& mu, Vertex v0,
                               const ThresholdOptions& options = {});

/**
 * The same threshold game solved from P2's side: on the owner-swapped arena
 * with complemented objectives, the former P2 must reach a complemented payoff
 * outside the upper set of mu. Returns regions and strategies of the original game.
 */
SolveResult solveThresholdForP2(const OrderedGame& game, const PayoffVector& mu, const ThresholdOptions& options = {});

struct ValueStep {
    PayoffVector threshold;
    Player winner;
};

struct ValueResult {
    PayoffVector value;
    MooreStrategy strat1;  // ensures the value
    MooreStrategy strat2;  // avoids every payoff above the value
    std::vector<ValueStep> trace;
};

/// Lexicographic value of v0 by n threshold queries, with optimal strategies of both players.
ValueResult computeLexValue(const OrderedGame& game, Vertex v0, const ThresholdOptions& options = {});

/// Complemented objectives and complemented threshold: payoff >= mu iff the dual payoff <= complementBits(mu).
std::pair<OrderedGame, PayoffVector> dualize(const OrderedGame& game, const PayoffVector& mu);

/**
 * Winner of the threshold game decided through the dual game: P1 ensures >= mu
 * iff, on the owner-swapped dual game, the former P2 cannot ensure >= mubar + 1.
 */
Player winnerViaDual(const OrderedGame& game, const PayoffVector& mu, Vertex v0, const ThresholdOptions& options = {});

}  // namespace ordgames
