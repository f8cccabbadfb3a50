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

#include <vector>

#include "ordgames/arena.hpp"

namespace ordgames {

/**
 * Finite-memory strategy (M, m0, update, next) for one player. The memory after
 * a history rho is update applied along rho from m0, and at a vertex v owned by
 * the strategy's player the move is next(memory, v). Entries are -1 where the
 * machine is undefined.
 */
class MooreStrategy {
public:
    MooreStrategy() = default;
    MooreStrategy(Player owner, int vertices, int states, int initial = 0);

    /// One-state strategy; choice[v] is the move at v, or -1.
    static MooreStrategy memoryless(Player owner, const std::vector<Vertex>& choice);

    Player owner() const { return owner_; }
    int vertexCount() const { return vertices_; }
    int size() const { return states_; }
    int initial() const { return initial_; }

    int update(int q, Vertex v) const { return update_[index(q, v)]; }
    Vertex next(int q, Vertex v) const { return next_[index(q, v)]; }
    void setUpdate(int q, Vertex v, int to) { update_[index(q, v)] = to; }
    void setNext(int q, Vertex v, Vertex to) { next_[index(q, v)] = to; }

    /// Same machine attributed to the other player, for strategies computed on an owner-swapped arena.
    MooreStrategy withOwner(Player p) const
    {
        MooreStrategy s = *this;
        s.owner_ = p;
        return s;
    }

    bool operator==(const MooreStrategy&) const = default;

private:
    std::size_t index(int q, Vertex v) const { return static_cast<std::size_t>(q) * vertices_ + v; }

    Player owner_ = Player::P1;
    int vertices_ = 0;
    int states_ = 0;
    int initial_ = 0;
    std::vector<int> update_;
    std::vector<Vertex> next_;
};

/// Throws InvalidInput if a defined move is not an edge or leaves an owner vertex of the other player.
void checkStrategy(const Arena& arena, const MooreStrategy& strategy);

/// Memory state after reading `history`, or -1 if the machine gets undefined.
int memoryAfter(const MooreStrategy& strategy, const std::vector<Vertex>& history);

/**
 * The unique play from v0 consistent with both strategies, as a lasso. Throws
 * InvalidInput when a strategy is undefined at a reached configuration.
 */
Lasso outcome(const Arena& arena, Vertex v0, const MooreStrategy& s1, const MooreStrategy& s2);

/**
 * Smallest machine with the same moves on every input: unreachable states are
 * dropped and states with identical behaviour merged by partition refinement.
 */
MooreStrategy minimize(const MooreStrategy& strategy);

}  // namespace ordgames
