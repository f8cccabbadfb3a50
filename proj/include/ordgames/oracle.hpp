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

#include <cstddef>
#include <string>

#include "ordgames/reductions.hpp"

namespace ordgames {

/**
 * Reference winner computation for small instances. It shares type definitions
 * with the library but none of the solving code: no reduction to a single
 * objective, no products other than its own visited-set bits, its own attractor.
 *
 * Conditions on Inf are decided by McNaughton's recursive algorithm on the
 * arena itself, with the winning condition "Inf = S" judged by evaluating the
 * payoff of S directly. Conditions on Occ are decided by backward induction over
 * the visited-objective bits, which only ever grow along a play.
 */
struct OracleBudget {
    int maxVertices = 8;
    std::size_t maxProductStates = 200000;
};

struct OracleBudgetExceeded : ResourceLimit {
    using ResourceLimit::ResourceLimit;
};

struct OracleResult {
    Player winner = Player::P1;
    bool consistent = true;  // the P1-side and P2-side computations agree
    std::string method;
};

/// Winner from v0, computed from both players' sides; throws OracleBudgetExceeded.
OracleResult oracleSolve(const OrderedGame& game, const PayoffVector& mu, Vertex v0, const OracleBudget& budget = {});

Player oracleWinner(const OrderedGame& game, const PayoffVector& mu, Vertex v0, const OracleBudget& budget = {});

}  // namespace ordgames
