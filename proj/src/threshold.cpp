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

#include "ordgames/threshold.hpp"

namespace ordgames {

namespace {

std::vector<Vertex> firstMoves(const Arena& arena, Player p)
{
    std::vector<Vertex> choice(arena.size(), -1);
    for (Vertex v = 0; v < arena.size(); ++v)
        if (arena.owner(v) == p) choice[v] = arena.successors(v).front();
    return choice;
}

SolveResult solveReduced(const ReducedGame& reduced, const Limits& limits)
{
    if (reduced.route == "trivial") {
        SolveResult r;
        r.win1 = reduced.arena.fullSet();
        r.win2 = reduced.arena.emptySet();
        r.strat1 = MooreStrategy::memoryless(Player::P1, firstMoves(reduced.arena, Player::P1));
        r.strat2 = MooreStrategy::memoryless(Player::P2, std::vector<Vertex>(reduced.arena.size(), -1));
        r.route = "trivial";
        return r;
    }
    SolveResult r = solve(reduced.arena, reduced.objective, limits);
    r.strat1 = minimize(r.strat1);
    r.strat2 = minimize(r.strat2);
    r.route = reduced.route + " > " + r.route;
    return r;
}

void checkThreshold(const OrderedGame& game, const PayoffVector& mu)
{
    checkOrderedGame(game);
    if (mu.size() != game.size())
        throw InvalidInput("threshold " + mu.str() + " has length " + std::to_string(mu.size()) + ", expected " +
                           std::to_string(game.size()));
}

void checkVertex(const OrderedGame& game, Vertex v0)
{
    if (v0 < 0 || v0 >= game.arena.size()) throw InvalidInput("initial vertex out of range");
}

}  // namespace

SolveResult solveThresholdRegions(const OrderedGame& game, const PayoffVector& mu, const ThresholdOptions& options)
{
    checkThreshold(game, mu);
    return solveReduced(thresholdToSingleObjective(game, mu, options.route, options.limits), options.limits);
}

ThresholdAnswer solveThreshold(const OrderedGame& game, const PayoffVector& mu, Vertex v0,
                               const ThresholdOptions& options)
{
    checkVertex(game, v0);
    SolveResult r = solveThresholdRegions(game, mu, options);
    ThresholdAnswer a;
    a.winner = r.winner(v0);
    a.strategy = r.strategy(a.winner);
    a.route = r.route;
    return a;
}

SolveResult solveThresholdForP2(const OrderedGame& game, const PayoffVector& mu, const ThresholdOptions& options)
{
    checkThreshold(game, mu);
    const int n = game.size();
    if (n > options.limits.maxEnumerationBits)
        throw ResourceLimit("P2-side threshold enumerates 2^" + std::to_string(n) + " payoffs");
    // complemented payoffs P2 must reach: those of plays not above mu
    std::vector<PayoffVector> upper;
    for (std::uint64_t w = 0; w < (1ULL << n); ++w) {
        PayoffVector nu(n, w);
        if (!game.preorder.leq(mu, nu)) upper.push_back(complementBits(nu));
    }
    Antichain minimal;
    for (const auto& a : upper) {
        bool dominated = false;
        for (const auto& b : upper) dominated = dominated || (b != a && b.subsetOf(a));
        if (!dominated) minimal.push_back(a);
    }
    std::vector<Objective> complemented;
    for (const auto& o : game.objectives) complemented.push_back(complement(o));
    const Arena swappedArena = game.arena.withSwappedOwners();
    BuchiRoute route = options.route == BuchiRoute::LexCnf ? BuchiRoute::Auto : options.route;
    SolveResult r = solveReduced(reduceUpperSet(swappedArena, complemented, minimal, route, options.limits),
                                 options.limits);
    SolveResult out;
    out.win1 = r.win2;
    out.win2 = r.win1;
    out.strat1 = r.strat2.withOwner(Player::P1);
    out.strat2 = r.strat1.withOwner(Player::P2);
    out.route = "p2-side > " + r.route;
    return out;
}

ValueResult computeLexValue(const OrderedGame& game, Vertex v0, const ThresholdOptions& options)
{
    checkOrderedGame(game);
    checkVertex(game, v0);
    if (!game.preorder.isLexicographic()) throw InvalidInput("values are defined for the lexicographic preorder only");
    const int n = game.size();
    ValueResult out;
    out.value = PayoffVector::zeros(n);
    bool have1 = false;
    bool have2 = false;
    for (int i = 0; i < n; ++i) {
        PayoffVector query = out.value.with(i, true);
        ThresholdAnswer a = solveThreshold(game, query, v0, options);
        out.trace.push_back({query, a.winner});
        if (a.winner == Player::P1) {
            out.value = query;
            out.strat1 = a.strategy;
            have1 = true;
        } else {
            out.strat2 = a.strategy;
            have2 = true;
        }
    }
    if (!have1) out.strat1 = MooreStrategy::memoryless(Player::P1, firstMoves(game.arena, Player::P1));
    if (!have2) out.strat2 = MooreStrategy::memoryless(Player::P2, firstMoves(game.arena, Player::P2));
    return out;
}

std::pair<OrderedGame, PayoffVector> dualize(const OrderedGame& game, const PayoffVector& mu)
{
    checkThreshold(game, mu);
    if (!game.preorder.isLexicographic()) throw InvalidInput("dualize expects the lexicographic preorder");
    OrderedGame dual{game.arena, {}, game.preorder};
    for (const auto& o : game.objectives) dual.objectives.push_back(complement(o));
    return {std::move(dual), complementBits(mu)};
}

Player winnerViaDual(const OrderedGame& game, const PayoffVector& mu, Vertex v0, const ThresholdOptions& options)
{
    checkVertex(game, v0);
    if (mu.isZero()) return Player::P1;
    auto [dual, mubar] = dualize(game, mu);
    dual.arena = dual.arena.withSwappedOwners();
    ThresholdOptions o = options;
    if (o.route == BuchiRoute::LexCnf) o.route = BuchiRoute::Auto;
    ThresholdAnswer a = solveThreshold(dual, lexSuccessor(mubar), v0, o);
    return opponent(a.winner);
}

}  // namespace ordgames
