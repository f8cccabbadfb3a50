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

#include <random>

#include "ordgames/generate.hpp"
#include "ordgames/io.hpp"

namespace ordgames::testing {

// The game of games/fig1: v0 (P2) chooses v1 or v2, v1 loops, v2 loops or returns to v0.
inline Arena fig1Arena()
{
    return Arena({Player::P2, Player::P1, Player::P1}, {{0, 1}, {0, 2}, {2, 0}, {1, 1}, {2, 2}}, {"v0", "v1", "v2"});
}

inline OrderedGame fig1Game()
{
    Arena a = fig1Arena();
    return {a, {Objective::buchi(makeSet(3, {1})), Objective::buchi(makeSet(3, {2}))}, Preorder::lexicographic()};
}

// The game of games/fig3: P2 picks v1 or v2 at v0, P1 later picks v4 or v5 at v3.
inline Arena fig3Arena()
{
    return Arena({Player::P2, Player::P1, Player::P1, Player::P1, Player::P1, Player::P1},
                 {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 4}, {5, 5}},
                 {"v0", "v1", "v2", "v3", "v4", "v5"});
}

inline OrderedGame fig3Game()
{
    Arena a = fig3Arena();
    return {a,
            {Objective::reach(makeSet(6, {1})), Objective::reach(makeSet(6, {2, 4})), Objective::reach(makeSet(6, {5}))},
            Preorder::lexicographic()};
}

inline PayoffVector bitsOf(const char* s)
{
    return PayoffVector::parse(s);
}

inline GameFile randomGame(ObjectiveKind kind, int n, int vertices, std::uint64_t seed,
                           Preorder preorder = Preorder::lexicographic())
{
    GenOptions o;
    o.kind = kind;
    o.objectives = n;
    o.vertices = vertices;
    o.seed = seed;
    o.preorder = preorder;
    o.colours = 3;
    o.pairs = 2;
    o.familySize = 2;
    return generateGame(o);
}

/// Every (occ, inf) with inf nonempty and inf within occ, over v vertices.
template <typename F>
void forEachOccInf(int v, F&& f)
{
    for (std::uint32_t o = 1; o < (1U << v); ++o)
        for (std::uint32_t i = o; i != 0; i = (i - 1) & o) {
            VertexSet occ(v, o);
            VertexSet inf(v, i);
            f(occ, inf);
        }
}

inline VertexSet randomSet(std::mt19937_64& rng, int n)
{
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
        if (rng() % 2) s.set(v);
    return s;
}

}  // namespace ordgames::testing
