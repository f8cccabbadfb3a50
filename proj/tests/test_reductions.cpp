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
#include "ordgames/solvers.hpp"
#include "ordgames/threshold.hpp"
#include "support.hpp"

using namespace ordgames;
using namespace ordgames::testing;

namespace {

const std::vector<BuchiRoute> allRoutes{BuchiRoute::Auto, BuchiRoute::GenericCnf, BuchiRoute::UIExpand,
                                        BuchiRoute::BooleanBuchi};

}  // namespace

TEST_CASE("fig1 upper set of 01 as a union of Buchi rows")
{
    OrderedGame g = fig1Game();
    ReducedGame r = thresholdToSingleObjective(g, bitsOf("01"), BuchiRoute::BooleanBuchi);
    REQUIRE(r.objective.kind == ObjectiveKind::UIBuchi);
    CHECK(r.objective.grid ==
          std::vector<std::vector<VertexSet>>{{makeSet(3, {2})}, {makeSet(3, {1})}});
    CHECK_FALSE(r.isProduct());
}

TEST_CASE("zero threshold accepts every play")
{
    OrderedGame g = fig3Game();
    ReducedGame r = thresholdToSingleObjective(g, bitsOf("000"));
    CHECK(r.objective == Objective::safe(g.arena.fullSet()));
    CHECK(r.route == "trivial");
    CHECK(thresholdToSingleObjective(fig1Game(), bitsOf("00")).route == "trivial");
}

TEST_CASE("subset threshold of reachability objectives is one row")
{
    OrderedGame g = fig3Game();
    g.objectives.pop_back();
    g.preorder = Preorder::subset();
    ReducedGame r = thresholdToSingleObjective(g, bitsOf("11"));
    REQUIRE(r.objective.kind == ObjectiveKind::UIReach);
    REQUIRE(r.objective.grid.size() == 1);
    CHECK(r.objective.grid[0].size() == 2);
}

TEST_CASE("reduced objectives hold exactly on the upper set")
{
    std::mt19937_64 rng(3);
    const std::vector<ObjectiveKind> kinds{ObjectiveKind::Reach,  ObjectiveKind::Safe,   ObjectiveKind::Buchi,
                                           ObjectiveKind::CoBuchi, ObjectiveKind::Parity, ObjectiveKind::Rabin,
                                           ObjectiveKind::Streett, ObjectiveKind::Muller, ObjectiveKind::ExplMuller};
    const std::vector<Preorder> preorders{Preorder::lexicographic(), Preorder::subset(), Preorder::counting(),
                                          Preorder::maximise()};
    for (std::uint64_t seed = 1; seed <= 30; ++seed)
        for (auto kind : kinds)
            for (const auto& pre : preorders) {
                GameFile f = randomGame(kind, 3, 4, seed, pre);
                const PayoffVector mu = *f.threshold;
                for (auto route : allRoutes) {
                    if (route != BuchiRoute::Auto && kind != ObjectiveKind::Buchi) continue;
                    ReducedGame r = thresholdToSingleObjective(f.game, mu, route);
                    REQUIRE_FALSE(r.isProduct());
                    forEachOccInf(4, [&](const VertexSet& occ, const VertexSet& inf) {
                        INFO(kindName(kind) << " " << pre.name() << " " << mu.str() << " " << r.route);
                        CHECK(satisfies(r.objective, occ, inf) == pre.leq(mu, payoff(f.game.objectives, occ, inf)));
                    });
                }
            }
}

TEST_CASE("distributed CNF matches the antichain")
{
    std::mt19937_64 rng(6);
    for (int round = 0; round < 300; ++round) {
        const int n = 1 + static_cast<int>(rng() % 6);
        PayoffVector mu(n, rng() % (std::uint64_t{1} << n));
        Antichain a = minimalThresholds(Preorder::counting(), mu);
        if (mu.isZero()) continue;
        for (bool subsume : {true, false}) {
            auto clauses = distributeCnf(a, subsume, 1 << 20);
            for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
                // CNF masks use bit i for objective i
                std::uint64_t set = 0;
                for (int i = 0; i < n; ++i)
                    if (PayoffVector(n, w).test(i)) set |= std::uint64_t{1} << i;
                bool cnf = true;
                for (auto c : clauses) cnf = cnf && (c & set) != 0;
                CHECK(cnf == Preorder::counting().leq(mu, PayoffVector(n, w)));
            }
            CHECK(clauses.size() <= (std::size_t{1} << n));
        }
        CHECK(distributeCnf(a, true, 1 << 20).size() <= distributeCnf(a, false, 1 << 20).size());
    }
    Antichain wide = minimalThresholds(Preorder::counting(), bitsOf("00000111"));
    CHECK_THROWS_AS(distributeCnf(wide, true, 4), ResourceLimit);
}

TEST_CASE("Buchi routes agree on the winner")
{
    for (std::uint64_t seed = 1; seed <= 80; ++seed) {
        for (const auto& pre : {Preorder::lexicographic(), Preorder::counting(), Preorder::subset()}) {
            GameFile f = randomGame(ObjectiveKind::Buchi, 3, 6, seed, pre);
            ThresholdOptions options;
            std::vector<VertexSet> regions;
            for (auto route : allRoutes) {
                options.route = route;
                regions.push_back(solveThresholdRegions(f.game, *f.threshold, options).win1);
            }
            if (pre.isLexicographic()) {
                options.route = BuchiRoute::LexCnf;
                regions.push_back(solveThresholdRegions(f.game, *f.threshold, options).win1);
            }
            for (const auto& r : regions) CHECK(r == regions.front());
        }
    }
}

TEST_CASE("lexicographic CNF route needs the lexicographic preorder")
{
    GameFile f = randomGame(ObjectiveKind::Buchi, 2, 4, 1, Preorder::subset());
    CHECK_THROWS_AS(thresholdToSingleObjective(f.game, bitsOf("01"), BuchiRoute::LexCnf), InvalidInput);
}

TEST_CASE("single-bit occurrence product")
{
    Arena a({Player::P1, Player::P2, Player::P1}, {{0, 1}, {1, 2}, {2, 0}, {1, 1}});
    Objective o = Objective::ui(ObjectiveKind::UIReach, {{makeSet(3, {2})}});
    ReducedGame r = uiOccurrenceProduct(a, o);
    CHECK(r.isProduct());
    CHECK(r.arena.size() <= 2 * a.size());
    CHECK(r.arena.size() > a.size());
    REQUIRE(r.objective.kind == ObjectiveKind::Reach);
    for (Vertex p = 0; p < r.arena.size(); ++p) CHECK(r.objective.sets[0].test(p) == (r.state[p] != 0));
    for (Vertex v = 0; v < a.size(); ++v) CHECK(r.base[r.entry[v]] == v);
}

TEST_CASE("duplicate target sets share a monitor bit")
{
    Arena a = fig3Arena();
    Objective once = Objective::ui(ObjectiveKind::UIReach, {{makeSet(6, {5})}});
    Objective twice = Objective::ui(ObjectiveKind::UIReach, {{makeSet(6, {5}), makeSet(6, {5})}, {makeSet(6, {5})}});
    CHECK(uiOccurrenceProduct(a, once).arena.size() == uiOccurrenceProduct(a, twice).arena.size());
}

TEST_CASE("fig3 cannot force all three reachability objectives")
{
    Arena a = fig3Arena();
    Objective all = Objective::ui(ObjectiveKind::UIReach, {{makeSet(6, {1}), makeSet(6, {2, 4}), makeSet(6, {5})}});
    CHECK(solve(a, all).win2.test(0));
}

TEST_CASE("Boolean Buchi to Muller colours")
{
    Arena a = fig1Arena();
    MullerReduction m = booleanBuchiToMuller(a, Objective::booleanBuchi(Formula::literal(0), {makeSet(3, {1})}));
    CHECK(m.colourAtoms.size() == 2);
    for (const auto& f : m.muller.colorFamily) {
        bool hit = false;
        for (int c : f) hit = hit || m.colourAtoms[c] == 1;
        CHECK(hit);
    }
    CHECK(m.muller.colorFamily.size() == 2);
}

TEST_CASE("Boolean Buchi to Muller preserves the winning plays")
{
    std::mt19937_64 rng(7);
    using F = Formula;
    const int n = 4;
    Arena a = Arena(std::vector<Player>(n, Player::P1), {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    for (int round = 0; round < 50; ++round) {
        Objective bb = Objective::booleanBuchi(F::conj({F::literal(0), F::literal(1, false)}),
                                               {randomSet(rng, n), randomSet(rng, n)});
        MullerReduction m = booleanBuchiToMuller(a, bb);
        forEachOccInf(n, [&](const VertexSet& occ, const VertexSet& inf) {
            CHECK(satisfies(m.muller, occ, inf) == satisfies(bb, occ, inf));
        });
    }
}

TEST_CASE("LAR product decides Muller games")
{
    std::mt19937_64 rng(19);
    for (int round = 0; round < 60; ++round) {
        GameFile f = randomGame(ObjectiveKind::Muller, 1, 5, 100 + round);
        const Objective& muller = f.game.objectives[0];
        ReducedGame lar = mullerToParityLAR(f.game.arena, muller);
        CHECK(lar.objective.kind == ObjectiveKind::Parity);
        SolveResult parity = solveParity(lar.arena, lar.objective.coloring);
        for (Vertex v = 0; v < f.game.arena.size(); ++v)
            CHECK(parity.win1.test(lar.entry[v]) == (oracleWinner(f.game, bitsOf("1"), v) == Player::P1));
    }
}

TEST_CASE("embeddings of generalized games")
{
    Arena a = fig1Arena();
    Embedding one = embedGenReachAsLex(a, {makeSet(3, {1})});
    CHECK(one.game.size() == 1);
    CHECK(one.mu == bitsOf("1"));
    CHECK(one.answer == Player::P1);
    CHECK(one.game.preorder.isLexicographic());

    std::mt19937_64 rng(2);
    for (int round = 0; round < 100; ++round) {
        const int n = 3 + static_cast<int>(rng() % 3);
        GameFile f = randomGame(ObjectiveKind::Buchi, 1, n, 500 + round);
        const Arena& arena = f.game.arena;
        std::vector<VertexSet> targets{randomSet(rng, n), randomSet(rng, n)};
        SolveResult reach = solve(arena, Objective::genReach(targets));
        SolveResult buchi = solveGenBuchi(arena, targets);
        for (Vertex v = 0; v < n; ++v) {
            const Player reachWinner = reach.winner(v);
            const Player buchiWinner = buchi.winner(v);
            for (const Embedding& e : {embedGenReachAsLex(arena, targets), embedGenReachAsLexSafety(arena, targets)}) {
                const bool answered = solveThreshold(e.game, e.mu, v).winner == e.answer;
                CHECK(answered == (reachWinner == Player::P1));
            }
            for (const Embedding& e : {embedGenBuchiAsLex(arena, targets), embedGenBuchiAsLexCoBuchi(arena, targets)}) {
                const bool answered = solveThreshold(e.game, e.mu, v).winner == e.answer;
                CHECK(answered == (buchiWinner == Player::P1));
            }
        }
    }
}

TEST_CASE("safety embedding uses threshold 0..01")
{
    Arena a = fig3Arena();
    Embedding e = embedGenReachAsLexSafety(a, {makeSet(6, {1}), makeSet(6, {5}), makeSet(6, {2})});
    CHECK(e.mu == bitsOf("001"));
    CHECK(e.answer == Player::P2);
    CHECK(e.game.objectives[0] == Objective::safe(makeSet(6, {0, 2, 3, 4, 5})));
}
