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

#include "ordgames/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>

namespace ordgames {

namespace {

using Region = std::vector<char>;

// Plain fixpoint iteration, deliberately independent of the solver attractor.
Region force(const Arena& arena, Player player, const Region& target, const Region& within)
{
    Region in(target);
    for (bool grew = true; grew;) {
        grew = false;
        for (Vertex v = 0; v < arena.size(); ++v) {
            if (!within[v] || in[v]) continue;
            bool mine = arena.owner(v) == player;
            bool any = false;
            bool all = true;
            for (Vertex w : arena.successors(v)) {
                if (!within[w]) continue;
                any = any || in[w];
                all = all && in[w];
            }
            if (mine ? any : all) {
                in[v] = 1;
                grew = true;
            }
        }
    }
    return in;
}

Region minus(const Region& a, const Region& b)
{
    Region r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] && !b[i];
    return r;
}

bool empty(const Region& a)
{
    return std::none_of(a.begin(), a.end(), [](char c) { return c != 0; });
}

/**
 * McNaughton's algorithm: returns the region of `sub` won by P1 when P1 wins
 * exactly the plays whose Inf set satisfies `good`.
 */
struct McNaughton {
    const Arena& arena;
    std::function<bool(const VertexSet&)> good;

    Region solve(const Region& sub)
    {
        const int n = arena.size();
        if (empty(sub)) return Region(n, 0);
        VertexSet all(n);
        for (Vertex v = 0; v < n; ++v)
            if (sub[v]) all.set(v);
        const Player sigma = good(all) ? Player::P1 : Player::P2;
        for (Vertex v = 0; v < n; ++v) {
            if (!sub[v]) continue;
            Region single(n, 0);
            single[v] = 1;
            Region rest = minus(sub, force(arena, sigma, single, sub));
            Region restP1 = solve(rest);
            Region tauWins = sigma == Player::P1 ? minus(rest, restP1) : restP1;
            if (empty(tauWins)) continue;
            Region lost = force(arena, opponent(sigma), tauWins, sub);
            Region p1 = solve(minus(sub, lost));
            if (sigma == Player::P2) {
                for (Vertex u = 0; u < n; ++u) p1[u] = p1[u] || lost[u];
            }
            return p1;
        }
        return sigma == Player::P1 ? sub : Region(n, 0);
    }
};

// Winning region of P1 in the Inf game on `arena` where P1 wins iff `good(Inf)`.
Region infRegion(const Arena& arena, const std::function<bool(const VertexSet&)>& good)
{
    McNaughton m{arena, good};
    return m.solve(Region(arena.size(), 1));
}

/**
 * Backward induction over (vertex, bits) reachable from v0, where bit i records
 * a visit to marks[i]. `player` wins the plays whose final bits satisfy `good`.
 */
bool occurrenceWins(const Arena& arena, Player player, const std::vector<VertexSet>& marks,
                    const std::function<bool(std::uint64_t)>& good, Vertex v0, const OracleBudget& budget)
{
    auto bitsOf = [&](Vertex v) {
        std::uint64_t b = 0;
        for (std::size_t i = 0; i < marks.size(); ++i)
            if (marks[i].test(v)) b |= 1ULL << i;
        return b;
    };
    std::map<std::pair<Vertex, std::uint64_t>, int> ids;
    std::vector<std::pair<Vertex, std::uint64_t>> states;
    std::vector<std::vector<int>> succ;
    auto intern = [&](Vertex v, std::uint64_t b) {
        auto [it, fresh] = ids.emplace(std::make_pair(v, b), static_cast<int>(states.size()));
        if (fresh) {
            if (states.size() >= budget.maxProductStates) throw OracleBudgetExceeded("oracle product over budget");
            states.emplace_back(v, b);
            succ.emplace_back();
        }
        return it->second;
    };
    intern(v0, bitsOf(v0));
    for (std::size_t i = 0; i < states.size(); ++i) {
        const auto [v, b] = states[i];
        for (Vertex w : arena.successors(v)) {
            const int j = intern(w, b | bitsOf(w));
            succ[i].push_back(j);
        }
    }
    // layers in order of decreasing bit count: edges only lead to the same or a later-decided layer
    std::map<std::uint64_t, std::vector<int>> layers;
    for (std::size_t i = 0; i < states.size(); ++i) layers[states[i].second].push_back(static_cast<int>(i));
    std::vector<std::uint64_t> order;
    for (const auto& [b, members] : layers) order.push_back(b);
    std::stable_sort(order.begin(), order.end(), [](std::uint64_t a, std::uint64_t b) {
        return std::popcount(a) > std::popcount(b);
    });

    std::vector<char> wins(states.size(), 0);
    for (std::uint64_t b : order) {
        const auto& members = layers[b];
        const bool stay = good(b);  // staying in the layer forever is won by `player` iff stay
        // `forcer` tries to reach exits it wins; whoever does not stay-win must leave
        const Player forcer = stay ? opponent(player) : player;
        std::vector<char> forced(states.size(), 0);
        auto exitWon = [&](int t) {
            const bool forPlayer = wins[t] != 0;
            return forcer == player ? forPlayer : !forPlayer;
        };
        for (bool grew = true; grew;) {
            grew = false;
            for (int s : members) {
                if (forced[s]) continue;
                const bool mine = arena.owner(states[s].first) == forcer;
                bool any = false;
                bool all = true;
                for (int t : succ[s]) {
                    const bool ok = states[t].second == b ? forced[t] != 0 : exitWon(t);
                    any = any || ok;
                    all = all && ok;
                }
                if (mine ? any : all) {
                    forced[s] = 1;
                    grew = true;
                }
            }
        }
        for (int s : members) wins[s] = (forcer == player) ? forced[s] : !forced[s];
    }
    return wins[0] != 0;
}

}  // namespace

OracleResult oracleSolve(const OrderedGame& game, const PayoffVector& mu, Vertex v0, const OracleBudget& budget)
{
    checkOrderedGame(game);
    if (mu.size() != game.size()) throw InvalidInput("threshold length differs from the number of objectives");
    if (v0 < 0 || v0 >= game.arena.size()) throw InvalidInput("initial vertex out of range");
    if (game.arena.size() > budget.maxVertices)
        throw OracleBudgetExceeded("oracle budget allows " + std::to_string(budget.maxVertices) + " vertices");

    const auto& objs = game.objectives;
    auto above = [&](const PayoffVector& p) { return game.preorder.leq(mu, p); };
    OracleResult r;
    const ObjectiveKind kind = objs.front().kind;
    if (kind == ObjectiveKind::Reach || kind == ObjectiveKind::Safe) {
        const bool reach = kind == ObjectiveKind::Reach;
        const int n = game.size();
        std::vector<VertexSet> marks;
        for (const auto& o : objs) marks.push_back(reach ? o.sets[0] : ~o.sets[0]);
        // bit i of the marks is objective i; payoff bit i is a visit (reach) or no violation (safe)
        auto payoffOf = [&](std::uint64_t bits) {
            PayoffVector p = PayoffVector::zeros(n);
            for (int i = 0; i < n; ++i) p = p.with(i, (((bits >> i) & 1U) != 0) == reach);
            return p;
        };
        const bool p1 = occurrenceWins(game.arena, Player::P1, marks,
                                       [&](std::uint64_t b) { return above(payoffOf(b)); }, v0, budget);
        const bool p2 = occurrenceWins(game.arena.withSwappedOwners(), Player::P1, marks,
                                       [&](std::uint64_t b) { return !above(payoffOf(b)); }, v0, budget);
        r.winner = p1 ? Player::P1 : Player::P2;
        r.consistent = p1 != p2;
        r.method = "backward induction over visited bits";
    } else {
        auto good = [&](const VertexSet& inf) { return above(payoff(objs, inf, inf)); };
        Region p1 = infRegion(game.arena, good);
        Region p2 = infRegion(game.arena.withSwappedOwners(), [&](const VertexSet& inf) { return !good(inf); });
        r.winner = p1[v0] ? Player::P1 : Player::P2;
        r.consistent = (p1[v0] != 0) != (p2[v0] != 0);
        r.method = "mcnaughton";
    }
    return r;
}

Player oracleWinner(const OrderedGame& game, const PayoffVector& mu, Vertex v0, const OracleBudget& budget)
{
    return oracleSolve(game, mu, v0, budget).winner;
}

}  // namespace ordgames
