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
#include "ordgames/verify.hpp"
#include "support.hpp"

using namespace ordgames;
using namespace ordgames::testing;

namespace {

Arena randomArena(std::mt19937_64& rng, int n)
{
    std::vector<Player> owners;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int v = 0; v < n; ++v) {
        owners.push_back(rng() % 2 ? Player::P1 : Player::P2);
        bool any = false;
        for (int w = 0; w < n; ++w)
            if (rng() % 3 == 0) {
                edges.emplace_back(v, w);
                any = true;
            }
        if (!any) edges.emplace_back(v, static_cast<Vertex>(rng() % n));
    }
    return Arena(owners, edges);
}

// Both regions partition the arena and both strategies win everywhere on their region.
void checkRegions(const Arena& arena, const Objective& obj, const SolveResult& r)
{
    REQUIRE(r.win1.size() == static_cast<std::size_t>(arena.size()));
    CHECK((r.win1 & r.win2).none());
    CHECK((r.win1 | r.win2).all());
    for (Vertex v = 0; v < arena.size(); ++v) {
        const bool p1 = r.win1.test(v);
        const MooreStrategy& s = p1 ? r.strat1 : r.strat2;
        Verdict verdict = verifyStrategy(
            arena, {obj}, [&](const PayoffVector& p) { return p.test(0) == p1; }, v, s);
        INFO(kindName(obj.kind) << " vertex " << v << ": " << verdict.reason);
        CHECK(verdict.verified);
    }
}

VertexSet oracleRegion(const Arena& arena, const Objective& obj)
{
    OrderedGame g{arena, {obj}, Preorder::lexicographic()};
    VertexSet w(arena.size());
    for (Vertex v = 0; v < arena.size(); ++v)
        if (oracleWinner(g, PayoffVector::ones(1), v) == Player::P1) w.set(v);
    return w;
}

// Generalized Buchi decided through a round-robin counter product and a plain Buchi game.
VertexSet genBuchiByCounter(const Arena& arena, const std::vector<VertexSet>& targets)
{
    const int n = arena.size();
    const int m = static_cast<int>(targets.size());
    auto id = [&](Vertex v, int c) { return c * n + v; };
    std::vector<Player> owners;
    std::vector<std::pair<Vertex, Vertex>> edges;
    VertexSet accepting(n * m);
    for (int c = 0; c < m; ++c)
        for (Vertex v = 0; v < n; ++v) owners.push_back(arena.owner(v));
    for (int c = 0; c < m; ++c)
        for (Vertex v = 0; v < n; ++v) {
            const bool hit = targets[c].test(v);
            const int next = hit ? (c + 1) % m : c;
            if (hit && c == m - 1) accepting.set(id(v, c));
            for (Vertex w : arena.successors(v)) edges.emplace_back(id(v, c), id(w, next));
        }
    SolveResult r = solveBuchi(Arena(owners, edges), accepting);
    VertexSet w(n);
    for (Vertex v = 0; v < n; ++v)
        if (r.win1.test(id(v, 0))) w.set(v);
    return w;
}

}  // namespace

TEST_CASE("attractor examples")
{
    Arena a = fig3Arena();
    CHECK(attractor(a, Player::P1, a.fullSet()).set == a.fullSet());
    CHECK(attractor(a, Player::P1, a.emptySet()).set.none());
    Attractor at = attractor(a, Player::P1, makeSet(6, {5}));
    CHECK(at.set == makeSet(6, {0, 1, 2, 3, 5}));
    CHECK(at.strategy[3] == 5);
    Attractor at2 = attractor(a, Player::P2, makeSet(6, {2}));
    CHECK(at2.set == makeSet(6, {0, 2}));
    CHECK(at2.strategy[0] == 2);
}

TEST_CASE("attractor agrees with a naive fixpoint")
{
    std::mt19937_64 rng(1);
    for (int round = 0; round < 200; ++round) {
        Arena a = randomArena(rng, 7);
        VertexSet target = randomSet(rng, 7);
        for (Player p : {Player::P1, Player::P2}) {
            VertexSet x = target;
            bool changed = true;
            while (changed) {
                changed = false;
                for (Vertex v = 0; v < a.size(); ++v) {
                    if (x.test(v)) continue;
                    bool own = a.owner(v) == p;
                    bool in = !own;
                    for (Vertex w : a.successors(v)) in = own ? (in || x.test(w)) : (in && x.test(w));
                    if (in) {
                        x.set(v);
                        changed = true;
                    }
                }
            }
            Attractor at = attractor(a, p, target);
            CHECK(at.set == x);
            for (Vertex v = 0; v < a.size(); ++v)
                if (at.set.test(v) && !target.test(v) && a.owner(v) == p) CHECK(at.set.test(at.strategy[v]));
        }
    }
}

TEST_CASE("reachability and safety examples")
{
    Arena a = fig3Arena();
    CHECK(solveReach(a, makeSet(6, {0})).win1.test(0));
    CHECK(solveReach(a, makeSet(6, {1})).win2.test(0));
    CHECK(solveSafe(a, a.fullSet()).win1 == a.fullSet());
}

TEST_CASE("Buchi examples")
{
    Arena a = fig1Arena();
    SolveResult r = solveBuchi(a, makeSet(3, {1}));
    CHECK(r.win1 == makeSet(3, {1}));
    CHECK(solveBuchi(a, a.fullSet()).win1 == a.fullSet());
    CHECK(solveCoBuchi(a, a.emptySet()).win1.none());
    checkRegions(a, Objective::buchi(makeSet(3, {1})), r);
}

TEST_CASE("generalized Buchi examples")
{
    Arena a = fig1Arena();
    SolveResult r = solveGenBuchi(a, {makeSet(3, {1}), makeSet(3, {2})});
    CHECK(r.win2.test(0));
    SolveResult one = solveGenBuchi(a, {makeSet(3, {2})});
    CHECK(one.win1 == solveBuchi(a, makeSet(3, {2})).win1);
    SolveResult all = solveGenBuchi(a, {a.fullSet(), a.fullSet(), a.fullSet()});
    CHECK(all.win1 == a.fullSet());
    CHECK(minimize(all.strat1).size() == 1);
}

TEST_CASE("generalized Buchi agrees with the counter product")
{
    std::mt19937_64 rng(21);
    for (int round = 0; round < 300; ++round) {
        const int n = 4 + static_cast<int>(rng() % 5);
        Arena a = randomArena(rng, n);
        std::vector<VertexSet> targets;
        const int m = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < m; ++i) targets.push_back(randomSet(rng, n));
        SolveResult r = solveGenBuchi(a, targets);
        CHECK(r.win1 == genBuchiByCounter(a, targets));
        checkRegions(a, Objective::genBuchi(targets), r);
        CHECK(r.strat1.size() <= std::max(1, m));
    }
}

TEST_CASE("parity on a single vertex")
{
    Arena a({Player::P1}, {{0, 0}});
    CHECK(solveParity(a, {0}).win1 == a.fullSet());
    CHECK(solveParity(a, {1}).win2 == a.fullSet());
}

TEST_CASE("single-objective solvers agree with the oracle")
{
    std::mt19937_64 rng(33);
    for (int round = 0; round < 200; ++round) {
        const int n = 3 + static_cast<int>(rng() % 4);
        Arena a = randomArena(rng, n);
        std::vector<int> colouring(n);
        for (auto& c : colouring) c = static_cast<int>(rng() % 3);
        std::vector<std::vector<int>> family{{0}, {1, 2}};
        std::vector<VertexSet> vfamily{randomSet(rng, n), randomSet(rng, n)};
        for (auto& f : vfamily)
            if (f.none()) f.set(0);
        std::vector<Objective> objs{
            Objective::reach(randomSet(rng, n)),
            Objective::safe(randomSet(rng, n)),
            Objective::buchi(randomSet(rng, n)),
            Objective::coBuchi(randomSet(rng, n)),
            Objective::parity(colouring),
            Objective::rabin({{randomSet(rng, n), randomSet(rng, n)}, {randomSet(rng, n), randomSet(rng, n)}}),
            Objective::streett({{randomSet(rng, n), randomSet(rng, n)}, {randomSet(rng, n), randomSet(rng, n)}}),
            Objective::muller(colouring, family),
            Objective::explMuller(vfamily),
        };
        for (const auto& o : objs) {
            SolveResult r = solve(a, o);
            INFO(kindName(o.kind));
            CHECK(r.win1 == oracleRegion(a, o));
            checkRegions(a, o, r);
        }
    }
}

TEST_CASE("Rabin with one pair is a three-colour parity condition")
{
    std::mt19937_64 rng(8);
    for (int round = 0; round < 100; ++round) {
        const int n = 6;
        Arena a = randomArena(rng, n);
        VertexSet e = randomSet(rng, n);
        VertexSet f = randomSet(rng, n);
        std::vector<int> colouring(n);
        for (Vertex v = 0; v < n; ++v) colouring[v] = e.test(v) ? 1 : f.test(v) ? 2 : 3;
        CHECK(solve(a, Objective::rabin({{e, f}})).win1 == solveParity(a, colouring).win1);
    }
}

TEST_CASE("Streett regions are the complements of Rabin regions for the opponent")
{
    std::mt19937_64 rng(12);
    for (int round = 0; round < 100; ++round) {
        const int n = 6;
        Arena a = randomArena(rng, n);
        std::vector<std::pair<VertexSet, VertexSet>> pairs{{randomSet(rng, n), randomSet(rng, n)},
                                                           {randomSet(rng, n), randomSet(rng, n)}};
        SolveResult streett = solve(a, Objective::streett(pairs));
        SolveResult rabin = solve(a.withSwappedOwners(), Objective::rabin(pairs));
        CHECK(streett.win2 == rabin.win1);
        CHECK(streett.win1 == rabin.win2);
    }
}

TEST_CASE("Muller extremes")
{
    std::mt19937_64 rng(14);
    Arena a = randomArena(rng, 5);
    std::vector<int> colouring{0, 1, 2, 0, 1};
    std::vector<std::vector<int>> all;
    for (int m = 1; m < 8; ++m) {
        std::vector<int> f;
        for (int c = 0; c < 3; ++c)
            if ((m >> c) & 1) f.push_back(c);
        all.push_back(f);
    }
    CHECK(solve(a, Objective::muller(colouring, all)).win1.all());
    CHECK(solve(a, Objective::muller(colouring, {})).win2.all());
    CHECK(solve(a, Objective::muller({0, 0, 0, 0, 0}, {{0}})).win1.all());
}

TEST_CASE("duplicate generalized reachability targets collapse")
{
    std::mt19937_64 rng(15);
    for (int round = 0; round < 50; ++round) {
        Arena a = randomArena(rng, 6);
        VertexSet u = makeSet(6, {static_cast<Vertex>(rng() % 6)});
        CHECK(solve(a, Objective::genReach({u, u})).win1 == solveReach(a, u).win1);
    }
}

TEST_CASE("union-intersection kinds")
{
    std::mt19937_64 rng(16);
    for (int round = 0; round < 100; ++round) {
        const int n = 6;
        Arena a = randomArena(rng, n);
        std::vector<std::vector<VertexSet>> grid{{randomSet(rng, n), randomSet(rng, n)}, {randomSet(rng, n)}};
        Objective uiReach = Objective::ui(ObjectiveKind::UIReach, grid);
        Objective uiBuchi = Objective::ui(ObjectiveKind::UIBuchi, grid);
        Objective uiCoBuchi = Objective::ui(ObjectiveKind::UICoBuchi, grid);
        SolveResult reach = solve(a, uiReach);
        checkRegions(a, uiReach, reach);
        SolveResult buchi = solve(a, uiBuchi);
        checkRegions(a, uiBuchi, buchi);
        CHECK(buchi.win1 == solve(a, toBooleanBuchi(uiBuchi)).win1);
        SolveResult coBuchi = solve(a, uiCoBuchi);
        checkRegions(a, uiCoBuchi, coBuchi);
        CHECK(coBuchi.win1 == solve(a, toBooleanBuchi(uiCoBuchi)).win1);
        Objective uiSafe = Objective::ui(ObjectiveKind::UISafe, grid);
        checkRegions(a, uiSafe, solve(a, uiSafe));
        // a single row is generalized reachability
        Objective row = Objective::ui(ObjectiveKind::UIReach, {grid[0]});
        CHECK(solve(a, row).win1 == solve(a, Objective::genReach(grid[0])).win1);
    }
}

TEST_CASE("Boolean Buchi solving")
{
    std::mt19937_64 rng(18);
    using F = Formula;
    for (int round = 0; round < 100; ++round) {
        const int n = 5;
        Arena a = randomArena(rng, n);
        F phi = F::disj({F::conj({F::literal(0), F::literal(1, false)}), F::conj({F::literal(2), F::literal(1)})});
        Objective o = Objective::booleanBuchi(phi, {randomSet(rng, n), randomSet(rng, n), randomSet(rng, n)});
        SolveResult r = solve(a, o);
        checkRegions(a, o, r);
        // the opponent wins the negated formula exactly where P1 loses
        CHECK(solve(a.withSwappedOwners(), complement(o)).win1 == r.win2);
    }
}
