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

#include "ordgames/solvers.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <utility>

#include "ordgames/reductions.hpp"

namespace ordgames {

Attractor attractor(const Arena& arena, Player player, const VertexSet& target, const VertexSet& within)
{
    const int n = arena.size();
    Attractor a{VertexSet(n), std::vector<Vertex>(n, -1)};
    std::vector<int> rank(n, -1);
    std::vector<int> count(n, 0);
    std::deque<Vertex> queue;
    for (auto v = within.find_first(); v != VertexSet::npos; v = within.find_next(v)) {
        for (Vertex w : arena.successors(static_cast<Vertex>(v)))
            if (within.test(w)) ++count[v];
        if (target.test(v)) {
            a.set.set(v);
            rank[v] = 0;
            queue.push_back(static_cast<Vertex>(v));
        }
    }
    while (!queue.empty()) {
        const Vertex w = queue.front();
        queue.pop_front();
        for (Vertex u : arena.predecessors(w)) {
            if (!within.test(u) || a.set.test(u)) continue;
            if (arena.owner(u) == player || --count[u] == 0) {
                a.set.set(u);
                rank[u] = rank[w] + 1;
                queue.push_back(u);
            }
        }
    }
    for (auto v = a.set.find_first(); v != VertexSet::npos; v = a.set.find_next(v)) {
        if (arena.owner(static_cast<Vertex>(v)) != player || rank[v] == 0) continue;
        for (Vertex w : arena.successors(static_cast<Vertex>(v))) {
            if (within.test(w) && a.set.test(w) && rank[w] < rank[v]) {
                a.strategy[v] = w;
                break;
            }
        }
    }
    return a;
}

Attractor attractor(const Arena& arena, Player player, const VertexSet& target)
{
    return attractor(arena, player, target, arena.fullSet());
}

namespace {

Vertex firstSuccessorIn(const Arena& arena, Vertex v, const VertexSet& region)
{
    for (Vertex w : arena.successors(v))
        if (region.test(w)) return w;
    return -1;
}

// Fills in a move staying in `region` for every vertex of `player` in `region` still without one.
void stayInside(const Arena& arena, Player player, const VertexSet& region, std::vector<Vertex>& choice)
{
    for (auto v = region.find_first(); v != VertexSet::npos; v = region.find_next(v))
        if (arena.owner(static_cast<Vertex>(v)) == player && choice[v] < 0)
            choice[v] = firstSuccessorIn(arena, static_cast<Vertex>(v), region);
}

// Moves outside a player's region are dropped unless `total` names that player, whose
// objective is then already met there and any move keeps it met.
SolveResult fromChoices(const Arena& arena, VertexSet win1, std::vector<Vertex> c1, std::vector<Vertex> c2,
                        std::string route, std::optional<Player> total = std::nullopt)
{
    SolveResult r;
    r.win2 = ~win1;
    r.win1 = std::move(win1);
    for (Vertex v = 0; v < arena.size(); ++v) {
        if ((!r.win1.test(v) && total != Player::P1) || arena.owner(v) != Player::P1) c1[v] = -1;
        if ((!r.win2.test(v) && total != Player::P2) || arena.owner(v) != Player::P2) c2[v] = -1;
    }
    r.strat1 = MooreStrategy::memoryless(Player::P1, c1);
    r.strat2 = MooreStrategy::memoryless(Player::P2, c2);
    r.route = std::move(route);
    return r;
}

}  // namespace

SolveResult solveReach(const Arena& arena, const VertexSet& target)
{
    Attractor a = attractor(arena, Player::P1, target);
    std::vector<Vertex> c1 = a.strategy;
    std::vector<Vertex> c2(arena.size(), -1);
    stayInside(arena, Player::P1, arena.fullSet(), c1);  // targets: any move
    stayInside(arena, Player::P2, ~a.set, c2);
    return fromChoices(arena, a.set, std::move(c1), std::move(c2), "reach", Player::P1);
}

SolveResult solveSafe(const Arena& arena, const VertexSet& safe)
{
    Attractor a = attractor(arena, Player::P2, ~safe);
    std::vector<Vertex> c1(arena.size(), -1);
    std::vector<Vertex> c2 = a.strategy;
    stayInside(arena, Player::P1, ~a.set, c1);
    stayInside(arena, Player::P2, arena.fullSet(), c2);
    return fromChoices(arena, ~a.set, std::move(c1), std::move(c2), "safe", Player::P2);
}

SolveResult solveGenBuchi(const Arena& arena, const std::vector<VertexSet>& targets, Player player)
{
    const int n = arena.size();
    const Player other = opponent(player);
    const int m = static_cast<int>(targets.size());
    VertexSet win = arena.fullSet();
    std::vector<Vertex> otherChoice(n, -1);

    bool changed = m > 0;
    while (changed) {
        changed = false;
        for (int c = 0; c < m && !changed; ++c) {
            Attractor a = attractor(arena, player, targets[c] & win, win);
            if (a.set == win) continue;
            // the opponent keeps the play in win \ a.set, away from targets[c]
            const VertexSet trap = win - a.set;
            stayInside(arena, other, trap, otherChoice);
            Attractor b = attractor(arena, other, trap, win);
            for (auto v = b.set.find_first(); v != VertexSet::npos; v = b.set.find_next(v))
                if (otherChoice[v] < 0) otherChoice[v] = b.strategy[v];
            win -= b.set;
            changed = true;
        }
    }

    SolveResult r;
    r.route = "gen-buchi[" + std::to_string(m) + "]";
    VertexSet lose = ~win;
    for (Vertex v = 0; v < n; ++v)
        if (!lose.test(v) || arena.owner(v) != other) otherChoice[v] = -1;
    MooreStrategy otherStrategy = MooreStrategy::memoryless(other, otherChoice);

    MooreStrategy mine(player, n, std::max(m, 1));
    if (m == 0) {
        for (Vertex v = 0; v < n; ++v) {
            mine.setUpdate(0, v, 0);
            if (arena.owner(v) == player) mine.setNext(0, v, arena.successors(v).front());
        }
    } else {
        std::vector<Attractor> reach;
        for (int c = 0; c < m; ++c) reach.push_back(attractor(arena, player, targets[c] & win, win));
        for (int c = 0; c < m; ++c) {
            for (Vertex v = 0; v < n; ++v) {
                const int after = targets[c].test(v) ? (c + 1) % m : c;
                mine.setUpdate(c, v, after);
                if (!win.test(v) || arena.owner(v) != player) continue;
                Vertex w = reach[after].strategy[v];
                if (w < 0) w = firstSuccessorIn(arena, v, win);
                mine.setNext(c, v, w);
            }
        }
    }

    if (player == Player::P1) {
        r.win1 = win;
        r.win2 = lose;
        r.strat1 = std::move(mine);
        r.strat2 = std::move(otherStrategy);
    } else {
        r.win2 = win;
        r.win1 = lose;
        r.strat2 = std::move(mine);
        r.strat1 = std::move(otherStrategy);
    }
    return r;
}

SolveResult solveBuchi(const Arena& arena, const VertexSet& target)
{
    SolveResult r = solveGenBuchi(arena, {target}, Player::P1);
    r.route = "buchi";
    return r;
}

SolveResult solveCoBuchi(const Arena& arena, const VertexSet& safe)
{
    SolveResult r = solveGenBuchi(arena, {~safe}, Player::P2);
    r.route = "cobuchi";
    return r;
}

namespace {

struct Zielonka {
    const Arena& arena;
    const std::vector<int>& coloring;
    std::vector<Vertex> choice[2];

    // Returns the winning regions {P1, P2} of the subgame induced by `sub`.
    std::pair<VertexSet, VertexSet> run(const VertexSet& sub)
    {
        const int n = arena.size();
        if (sub.none()) return {VertexSet(n), VertexSet(n)};
        int least = -1;
        for (auto v = sub.find_first(); v != VertexSet::npos; v = sub.find_next(v))
            if (least < 0 || coloring[v] < least) least = coloring[v];
        const Player alpha = least % 2 == 0 ? Player::P1 : Player::P2;
        const Player beta = opponent(alpha);
        VertexSet top(n);
        for (auto v = sub.find_first(); v != VertexSet::npos; v = sub.find_next(v))
            if (coloring[v] == least) top.set(v);

        Attractor a = attractor(arena, alpha, top, sub);
        auto first = run(sub - a.set);
        const VertexSet& betaWins = beta == Player::P1 ? first.first : first.second;
        if (betaWins.none()) {
            for (auto v = a.set.find_first(); v != VertexSet::npos; v = a.set.find_next(v)) {
                if (arena.owner(static_cast<Vertex>(v)) != alpha) continue;
                Vertex w = a.strategy[v];
                choice[index(alpha)][v] = w >= 0 ? w : firstSuccessorIn(arena, static_cast<Vertex>(v), sub);
            }
            VertexSet none(n);
            return alpha == Player::P1 ? std::make_pair(sub, none) : std::make_pair(none, sub);
        }
        Attractor b = attractor(arena, beta, betaWins, sub);
        const VertexSet rim = b.set - betaWins;
        for (auto v = rim.find_first(); v != VertexSet::npos; v = rim.find_next(v))
            if (arena.owner(static_cast<Vertex>(v)) == beta) choice[index(beta)][v] = b.strategy[v];
        auto second = run(sub - b.set);
        if (beta == Player::P1) second.first |= b.set;
        else second.second |= b.set;
        return second;
    }
};

}  // namespace

SolveResult solveParity(const Arena& arena, const std::vector<int>& coloring)
{
    if (static_cast<int>(coloring.size()) != arena.size()) throw InvalidInput("parity: colouring is not total");
    Zielonka z{arena, coloring, {std::vector<Vertex>(arena.size(), -1), std::vector<Vertex>(arena.size(), -1)}};
    auto regions = z.run(arena.fullSet());
    return fromChoices(arena, regions.first, std::move(z.choice[0]), std::move(z.choice[1]), "zielonka");
}

namespace {

// Solves the reduced game and transfers regions and strategies to the original arena.
SolveResult throughReduction(const Arena& arena, const ReducedGame& reduced, const SolveResult& inner)
{
    SolveResult r;
    r.win1 = arena.emptySet();
    for (Vertex v = 0; v < arena.size(); ++v)
        if (inner.win1.test(reduced.entry[v])) r.win1.set(v);
    r.win2 = ~r.win1;
    r.strat1 = minimize(foldStrategy(reduced, arena, inner.strat1));
    r.strat2 = minimize(foldStrategy(reduced, arena, inner.strat2));
    r.route = reduced.route + " > " + inner.route;
    return r;
}

}  // namespace

SolveResult solveMuller(const Arena& arena, const Objective& muller, const Limits& limits)
{
    ReducedGame lar = mullerToParityLAR(arena, muller, limits);
    return throughReduction(arena, lar, solveParity(lar.arena, lar.objective.coloring));
}

SolveResult solveExplMuller(const Arena& arena, const Objective& explMuller, const Limits& limits)
{
    // vertices outside every set of the family share one losing colour
    const int n = arena.size();
    VertexSet used(n);
    for (const auto& f : explMuller.sets) used |= f;
    std::vector<int> coloring(n);
    for (Vertex v = 0; v < n; ++v) coloring[v] = used.test(v) ? v : n;
    std::vector<std::vector<int>> family;
    for (const auto& f : explMuller.sets) {
        std::vector<int> colours;
        for (auto v = f.find_first(); v != VertexSet::npos; v = f.find_next(v)) colours.push_back(static_cast<int>(v));
        if (!colours.empty()) family.push_back(std::move(colours));
    }
    SolveResult r = solveMuller(arena, Objective::muller(std::move(coloring), std::move(family)), limits);
    r.route = "muller > " + r.route;
    return r;
}

SolveResult solveBooleanBuchi(const Arena& arena, const Objective& booleanBuchi, const Limits& limits)
{
    MullerReduction m = booleanBuchiToMuller(arena, booleanBuchi, limits);
    SolveResult r = solveMuller(arena, m.muller, limits);
    r.route = "muller[" + std::to_string(m.colourAtoms.size()) + " colours] > " + r.route;
    return r;
}

SolveResult solveOccurrence(const Arena& arena, const Objective& obj, const Limits& limits)
{
    ReducedGame product = uiOccurrenceProduct(arena, obj, limits);
    SolveResult inner = product.objective.kind == ObjectiveKind::Reach
                            ? solveReach(product.arena, product.objective.sets[0])
                            : solveSafe(product.arena, product.objective.sets[0]);
    return throughReduction(arena, product, inner);
}

SolveResult solve(const Arena& arena, const Objective& obj, const Limits& limits)
{
    checkObjective(arena, obj);
    switch (obj.kind) {
    case ObjectiveKind::Reach: return solveReach(arena, obj.sets[0]);
    case ObjectiveKind::Safe: return solveSafe(arena, obj.sets[0]);
    case ObjectiveKind::Buchi: return solveBuchi(arena, obj.sets[0]);
    case ObjectiveKind::CoBuchi: return solveCoBuchi(arena, obj.sets[0]);
    case ObjectiveKind::GenBuchi: return solveGenBuchi(arena, obj.sets, Player::P1);
    case ObjectiveKind::UICoBuchi: {
        // a union of co-Buchi rows is lost exactly when P2 wins the generalized Buchi game on the row complements
        std::vector<VertexSet> targets;
        for (const auto& row : obj.grid) {
            VertexSet meet = arena.fullSet();
            for (const auto& u : row) meet &= u;
            targets.push_back(~meet);
        }
        SolveResult r = solveGenBuchi(arena, targets, Player::P2);
        r.route = "gen-buchi[" + std::to_string(targets.size()) + "] for P2";
        return r;
    }
    case ObjectiveKind::Parity: return solveParity(arena, obj.coloring);
    case ObjectiveKind::Muller: return solveMuller(arena, obj, limits);
    case ObjectiveKind::ExplMuller: return solveExplMuller(arena, obj, limits);
    case ObjectiveKind::BooleanBuchi: return solveBooleanBuchi(arena, obj, limits);
    case ObjectiveKind::Rabin:
    case ObjectiveKind::Streett:
    case ObjectiveKind::UIBuchi: {
        Objective bb = toBooleanBuchi(obj);
        SolveResult r = solveBooleanBuchi(arena, bb, limits);
        r.route = "boolean-buchi[" + std::to_string(bb.sets.size()) + " vars] > " + r.route;
        return r;
    }
    case ObjectiveKind::GenReach:
    case ObjectiveKind::UIReach:
    case ObjectiveKind::UISafe: return solveOccurrence(arena, obj, limits);
    }
    throw InvalidInput("unknown objective kind");
}

}  // namespace ordgames
