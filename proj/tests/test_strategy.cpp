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

#include <catch2/catch_amalgamated.hpp>

#include "ordgames/threshold.hpp"
#include "ordgames/verify.hpp"
#include "support.hpp"

using namespace ordgames;
using namespace ordgames::testing;

TEST_CASE("fig3 outcome of the optimal memoryless strategies")
{
    Arena a = fig3Arena();
    auto s1 = MooreStrategy::memoryless(Player::P1, {-1, 3, 3, 5, 4, 5});
    auto s2 = MooreStrategy::memoryless(Player::P2, {2, -1, -1, -1, -1, -1});
    checkStrategy(a, s1);
    checkStrategy(a, s2);
    Lasso l = outcome(a, 0, s1, s2);
    CHECK(l.prefix == std::vector<Vertex>{0, 2, 3});
    CHECK(l.cycle == std::vector<Vertex>{5});
    CHECK(outcome(a, 0, s2, s1) == l);
}

TEST_CASE("memoryless strategies on a two-vertex cycle")
{
    Arena a({Player::P1, Player::P2}, {{0, 1}, {1, 0}, {0, 0}});
    auto s1 = MooreStrategy::memoryless(Player::P1, {1, -1});
    auto s2 = MooreStrategy::memoryless(Player::P2, {-1, 0});
    for (Vertex v0 : {0, 1}) {
        Lasso l = outcome(a, v0, s1, s2);
        CHECK(l.cycle.size() <= 2);
        CHECK_NOTHROW(checkLasso(a, l));
    }
    CHECK(outcome(a, 0, s1, s2).prefix.empty());
}

TEST_CASE("outcome rejects undefined moves and same-player pairs")
{
    Arena a = fig3Arena();
    auto s1 = MooreStrategy::memoryless(Player::P1, {-1, 3, 3, -1, 4, 5});
    auto s2 = MooreStrategy::memoryless(Player::P2, {2, -1, -1, -1, -1, -1});
    CHECK_THROWS_AS(outcome(a, 0, s1, s2), InvalidInput);
    CHECK_THROWS_AS(outcome(a, 0, s2, s2), InvalidInput);
}

TEST_CASE("strategies may only move along own edges")
{
    Arena a = fig3Arena();
    CHECK_THROWS_AS(checkStrategy(a, MooreStrategy::memoryless(Player::P1, {1, -1, -1, -1, -1, -1})), InvalidInput);
    CHECK_THROWS_AS(checkStrategy(a, MooreStrategy::memoryless(Player::P1, {-1, 4, -1, -1, -1, -1})), InvalidInput);
}

TEST_CASE("memory follows the update function")
{
    MooreStrategy s(Player::P1, 2, 2);
    s.setUpdate(0, 0, 0);
    s.setUpdate(0, 1, 1);
    s.setUpdate(1, 0, 1);
    s.setUpdate(1, 1, 0);
    CHECK(memoryAfter(s, {}) == 0);
    CHECK(memoryAfter(s, {1, 0}) == 1);
    CHECK(memoryAfter(s, {1, 0, 1}) == 0);
}

TEST_CASE("constant strategy with duplicated states minimizes to one state")
{
    Arena a({Player::P1, Player::P1}, {{0, 1}, {1, 0}, {1, 1}});
    MooreStrategy s(Player::P1, 2, 5);
    for (int q = 0; q < 5; ++q) {
        s.setUpdate(q, 0, (q + 1) % 5);
        s.setUpdate(q, 1, (q + 2) % 5);
        s.setNext(q, 0, 1);
        s.setNext(q, 1, 0);
    }
    MooreStrategy m = minimize(s);
    CHECK(m.size() == 1);
    CHECK(m.next(0, 0) == 1);
    CHECK(m.next(0, 1) == 0);
    checkStrategy(a, m);
}

TEST_CASE("minimal alternator is unchanged")
{
    MooreStrategy s(Player::P1, 2, 2);
    s.setUpdate(0, 1, 1);
    s.setUpdate(1, 1, 0);
    s.setNext(0, 1, 0);
    s.setNext(1, 1, 1);
    CHECK(minimize(s) == s);
}

TEST_CASE("unreachable states are dropped")
{
    MooreStrategy s(Player::P1, 1, 3, 1);
    s.setUpdate(1, 0, 1);
    s.setNext(1, 0, 0);
    s.setUpdate(0, 0, 2);
    s.setNext(2, 0, 0);
    MooreStrategy m = minimize(s);
    CHECK(m.size() == 1);
    CHECK(m.initial() == 0);
}

TEST_CASE("minimized strategies verify exactly when the originals do")
{
    int checked = 0;
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        for (auto kind : {ObjectiveKind::Buchi, ObjectiveKind::Reach, ObjectiveKind::Parity}) {
            GameFile f = randomGame(kind, 2, 5, seed);
            ThresholdAnswer ans = solveThreshold(f.game, *f.threshold, 0);
            // inflate the machine with a duplicate of every state, then minimize again
            const MooreStrategy& s = ans.strategy;
            MooreStrategy big(s.owner(), s.vertexCount(), 2 * s.size(), s.initial());
            for (int q = 0; q < s.size(); ++q)
                for (Vertex v = 0; v < s.vertexCount(); ++v)
                    for (int copy = 0; copy < 2; ++copy) {
                        const int from = q + copy * s.size();
                        const int to = s.update(q, v);
                        if (to >= 0) big.setUpdate(from, v, to + ((v + q) % 2) * s.size());
                        big.setNext(from, v, s.next(q, v));
                    }
            Verdict original = verifyThresholdStrategy(f.game, *f.threshold, 0, big);
            Verdict reduced = verifyThresholdStrategy(f.game, *f.threshold, 0, minimize(big));
            CHECK(original.verified == reduced.verified);
            CHECK(minimize(big).size() <= s.size());
            ++checked;
        }
    }
    CHECK(checked == 180);
}

TEST_CASE("minimizing random machines preserves the verdict")
{
    std::mt19937_64 rng(11);
    int failing = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        GameFile f = randomGame(seed % 2 ? ObjectiveKind::Buchi : ObjectiveKind::Reach, 2, 5, seed);
        const Arena& a = f.game.arena;
        const Player p = seed % 3 ? Player::P1 : Player::P2;
        MooreStrategy s(p, a.size(), 4);
        for (int q = 0; q < 4; ++q)
            for (Vertex v = 0; v < a.size(); ++v) {
                s.setUpdate(q, v, static_cast<int>(rng() % 2) * (q % 2 + 2));
                if (a.owner(v) == p) s.setNext(q, v, a.successors(v)[rng() % a.successors(v).size()]);
            }
        Verdict original = verifyThresholdStrategy(f.game, *f.threshold, 0, s);
        Verdict reduced = verifyThresholdStrategy(f.game, *f.threshold, 0, minimize(s));
        CHECK(original.verified == reduced.verified);
        if (!original.verified) ++failing;
    }
    CHECK(failing > 0);
}

TEST_CASE("outcomes replay through both machines")
{
    std::mt19937_64 rng(23);
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        GameFile f = randomGame(ObjectiveKind::Reach, 1, 6, seed);
        const Arena& a = f.game.arena;
        std::vector<MooreStrategy> machines;
        for (Player p : {Player::P1, Player::P2}) {
            const int states = 1 + static_cast<int>(rng() % 3);
            MooreStrategy s(p, a.size(), states);
            for (int q = 0; q < states; ++q)
                for (Vertex v = 0; v < a.size(); ++v) {
                    s.setUpdate(q, v, static_cast<int>(rng() % states));
                    if (a.owner(v) == p) s.setNext(q, v, a.successors(v)[rng() % a.successors(v).size()]);
                }
            machines.push_back(s);
        }
        const Vertex v0 = static_cast<Vertex>(seed % a.size());
        Lasso l = outcome(a, v0, machines[0], machines[1]);
        CHECK(l.prefix.size() + l.cycle.size() <= static_cast<std::size_t>(a.size() * machines[0].size() * machines[1].size()));
        std::vector<Vertex> word = l.prefix;
        for (int k = 0; k < machines[0].size() * machines[1].size() + 2; ++k)
            word.insert(word.end(), l.cycle.begin(), l.cycle.end());
        REQUIRE(word.front() == v0);
        int q1 = machines[0].initial();
        int q2 = machines[1].initial();
        for (std::size_t i = 0; i + 1 < word.size(); ++i) {
            const Vertex v = word[i];
            const Vertex move = a.owner(v) == Player::P1 ? machines[0].next(q1, v) : machines[1].next(q2, v);
            REQUIRE(move == word[i + 1]);
            q1 = machines[0].update(q1, v);
            q2 = machines[1].update(q2, v);
        }
    }
}
