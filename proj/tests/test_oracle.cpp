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

#include "ordgames/oracle.hpp"
#include "support.hpp"

using namespace ordgames;
using namespace ordgames::testing;

TEST_CASE("oracle on the figure games")
{
    CHECK(oracleWinner(fig1Game(), bitsOf("01"), 0) == Player::P1);
    CHECK(oracleWinner(fig1Game(), bitsOf("10"), 0) == Player::P2);
    CHECK(oracleWinner(fig1Game(), bitsOf("11"), 0) == Player::P2);
    CHECK(oracleWinner(fig3Game(), bitsOf("100"), 0) == Player::P2);
    CHECK(oracleWinner(fig3Game(), bitsOf("010"), 0) == Player::P1);
    CHECK(oracleWinner(fig3Game(), bitsOf("011"), 0) == Player::P1);
}

TEST_CASE("oracle on a self-loop")
{
    Arena a({Player::P2}, {{0, 0}});
    OrderedGame g{a, {Objective::buchi(a.fullSet()), Objective::buchi(a.fullSet())}, Preorder::counting()};
    for (std::uint64_t m = 0; m < 4; ++m) CHECK(oracleWinner(g, PayoffVector(2, m), 0) == Player::P1);
    OrderedGame never{a, {Objective::reach(a.emptySet())}, Preorder::lexicographic()};
    CHECK(oracleWinner(never, bitsOf("1"), 0) == Player::P2);
    CHECK(oracleWinner(never, bitsOf("0"), 0) == Player::P1);
}

TEST_CASE("oracle sides are consistent")
{
    for (std::uint64_t seed = 1; seed <= 60; ++seed)
        for (auto kind : {ObjectiveKind::Reach, ObjectiveKind::Safe, ObjectiveKind::Buchi, ObjectiveKind::CoBuchi,
                          ObjectiveKind::ExplMuller, ObjectiveKind::Rabin, ObjectiveKind::Streett, ObjectiveKind::Parity,
                          ObjectiveKind::Muller}) {
            GameFile f = randomGame(kind, 3, 5, seed, seed % 2 ? Preorder::lexicographic() : Preorder::counting());
            OracleResult r = oracleSolve(f.game, *f.threshold, 0);
            CHECK(r.consistent);
        }
}

TEST_CASE("oracle is monotone in the threshold")
{
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        GameFile f = randomGame(ObjectiveKind::Reach, 3, 5, seed);
        bool lost = false;
        for (std::uint64_t m = 0; m < 8; ++m) {
            const bool p1 = oracleWinner(f.game, PayoffVector(3, m), 0) == Player::P1;
            if (lost) CHECK_FALSE(p1);
            lost = lost || !p1;
        }
        CHECK(oracleWinner(f.game, bitsOf("000"), 0) == Player::P1);
    }
}

TEST_CASE("oracle budget")
{
    GameFile f = randomGame(ObjectiveKind::Buchi, 2, 9, 1);
    CHECK_THROWS_AS(oracleSolve(f.game, *f.threshold, 0), OracleBudgetExceeded);
    OracleBudget small;
    small.maxProductStates = 2;
    GameFile r = randomGame(ObjectiveKind::Reach, 3, 5, 1);
    CHECK_THROWS_AS(oracleSolve(r.game, bitsOf("111"), 0, small), OracleBudgetExceeded);
}
