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

#include "ordgames/verify.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace ordgames {

namespace {

// Colour classes: vertices contained in exactly the same atoms.
struct Colouring {
    std::vector<int> of;            // vertex -> colour
    std::vector<Vertex> representative;
};

Colouring colourVertices(const Arena& arena, const std::vector<Objective>& objectives)
{
    const auto n = static_cast<std::size_t>(arena.size());
    std::vector<VertexSet> atoms;
    for (const auto& o : objectives) {
        for (const auto& s : o.sets) atoms.push_back(s);
        for (const auto& [e, f] : o.pairs) {
            atoms.push_back(e);
            atoms.push_back(f);
        }
        for (const auto& row : o.grid)
            for (const auto& s : row) atoms.push_back(s);
        if (!o.coloring.empty()) {
            std::map<int, VertexSet> classes;
            for (std::size_t v = 0; v < n; ++v) {
                auto [it, fresh] = classes.try_emplace(o.coloring[v], n);
                it->second.set(v);
            }
            for (auto& [c, s] : classes) atoms.push_back(std::move(s));
        }
        if (o.kind == ObjectiveKind::ExplMuller) {
            for (std::size_t v = 0; v < n; ++v) {
                VertexSet s(n);
                s.set(v);
                atoms.push_back(std::move(s));
            }
        }
    }
    Colouring c;
    std::map<std::vector<bool>, int> ids;
    for (std::size_t v = 0; v < n; ++v) {
        std::vector<bool> sig;
        for (const auto& a : atoms) sig.push_back(a.test(v));
        auto [it, fresh] = ids.emplace(sig, static_cast<int>(ids.size()));
        if (fresh) c.representative.push_back(static_cast<Vertex>(v));
        c.of.push_back(it->second);
    }
    return c;
}

// Explicit graph of the arena with the strategy fixed, optionally tracking visited colours.
struct FixedGraph {
    std::vector<Vertex> base;
    std::vector<std::uint32_t> seen;
    std::vector<std::vector<int>> succ;
};

// Tarjan's algorithm on the nodes accepted by `allowed`; -1 for the others.
std::vector<int> components(const FixedGraph& g, const std::vector<char>& allowed)
{
    const int n = static_cast<int>(g.base.size());
    std::vector<int> comp(n, -1), low(n, 0), num(n, -1), stack;
    std::vector<char> onStack(n, 0);
    int counter = 0;
    int comps = 0;
    for (int root = 0; root < n; ++root) {
        if (!allowed[root] || num[root] >= 0) continue;
        std::vector<std::pair<int, std::size_t>> call{{root, 0}};
        num[root] = low[root] = counter++;
        stack.push_back(root);
        onStack[root] = 1;
        while (!call.empty()) {
            auto& [u, i] = call.back();
            if (i < g.succ[u].size()) {
                const int w = g.succ[u][i++];
                if (!allowed[w]) continue;
                if (num[w] < 0) {
                    num[w] = low[w] = counter++;
                    stack.push_back(w);
                    onStack[w] = 1;
                    call.emplace_back(w, 0);
                } else if (onStack[w]) {
                    low[u] = std::min(low[u], num[w]);
                }
                continue;
            }
            if (low[u] == num[u]) {
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    onStack[w] = 0;
                    comp[w] = comps;
                } while (w != u);
                ++comps;
            }
            const int done = u;
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
        }
    }
    return comp;
}

// Shortest path from `from` to `to` (both included) through nodes accepted by `inside`, requiring at least one step.
std::vector<int> path(const FixedGraph& g, int from, int to, const std::function<bool(int)>& inside)
{
    std::unordered_map<int, int> parent;
    std::deque<int> queue;
    for (int w : g.succ[from]) {
        if (!inside(w) || parent.count(w)) continue;
        parent[w] = from;
        queue.push_back(w);
    }
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        if (u == to) break;
        for (int w : g.succ[u]) {
            if (!inside(w) || parent.count(w)) continue;
            parent[w] = u;
            queue.push_back(w);
        }
    }
    if (!parent.count(to)) throw std::logic_error("verification: broken component path");
    std::vector<int> out{to};
    int u = to;
    do {
        u = parent.at(u);
        out.push_back(u);
    } while (u != from);
    std::reverse(out.begin(), out.end());
    return out;
}

bool nontrivial(const FixedGraph& g, const std::vector<int>& comp, int x)
{
    for (int w : g.succ[x])
        if (comp[w] == comp[x]) return true;
    return false;
}

// Lasso reaching x and then walking through every node of x's component.
Lasso lassoThrough(const FixedGraph& g, const std::vector<int>& comp, int x, bool cover)
{
    // prefix: breadth-first path from the initial node
    std::vector<int> parent(g.base.size(), -2);
    std::deque<int> queue{0};
    parent[0] = -1;
    while (!queue.empty() && parent[x] == -2) {
        const int u = queue.front();
        queue.pop_front();
        for (int w : g.succ[u]) {
            if (parent[w] != -2) continue;
            parent[w] = u;
            queue.push_back(w);
        }
    }
    Lasso l;
    for (int u = parent[x]; u >= 0; u = parent[u]) l.prefix.push_back(g.base[u]);
    std::reverse(l.prefix.begin(), l.prefix.end());

    auto inside = [&](int w) { return comp[w] == comp[x]; };
    std::vector<int> walk{x};
    if (cover) {
        std::vector<char> visited(g.base.size(), 0);
        visited[x] = 1;
        for (std::size_t t = 0; t < g.base.size(); ++t) {
            if (comp[t] != comp[x] || visited[t]) continue;
            auto p = path(g, walk.back(), static_cast<int>(t), inside);
            for (std::size_t i = 1; i < p.size(); ++i) {
                walk.push_back(p[i]);
                visited[p[i]] = 1;
            }
        }
    }
    auto back = path(g, walk.back(), x, inside);
    walk.insert(walk.end(), back.begin() + 1, back.end() - 1);
    for (int u : walk) l.cycle.push_back(g.base[u]);
    return l;
}

}  // namespace

Verdict verifyStrategy(const Arena& arena, const std::vector<Objective>& objectives,
                       const std::function<bool(const PayoffVector&)>& accept, Vertex v0,
                       const MooreStrategy& strategy, const Limits& limits)
{
    checkHomogeneous(objectives);
    for (const auto& o : objectives) checkObjective(arena, o);
    checkStrategy(arena, strategy);
    if (v0 < 0 || v0 >= arena.size()) throw InvalidInput("initial vertex out of range");

    const Colouring colours = colourVertices(arena, objectives);
    const int k = static_cast<int>(colours.representative.size());
    const int maxColours = std::min(limits.maxMonitorBits, 31);
    if (k > maxColours)
        throw ResourceLimit("verification over " + std::to_string(k) + " vertex colours, over the bound of " +
                            std::to_string(maxColours));
    const bool occurrence = isOccurrenceKind(objectives.front().kind);

    auto evaluate = [&](std::uint32_t mask) {
        VertexSet s = arena.emptySet();
        for (int c = 0; c < k; ++c)
            if ((mask >> c) & 1U) s.set(colours.representative[c]);
        return payoff(objectives, s, s);
    };

    // build the fixed graph: (vertex, memory, visited colours)
    FixedGraph g;
    std::vector<int> memory;
    std::unordered_map<std::uint64_t, int> ids;
    const auto bit = [&](Vertex v) { return occurrence ? 1U << colours.of[v] : 0U; };
    auto intern = [&](Vertex v, int q, std::uint32_t seen) {
        const std::uint64_t key = ((static_cast<std::uint64_t>(v) * strategy.size() + q) << 32) | seen;
        auto [it, fresh] = ids.emplace(key, static_cast<int>(g.base.size()));
        if (fresh) {
            if (g.base.size() >= limits.maxProductStates)
                throw ResourceLimit("verification graph exceeds " + std::to_string(limits.maxProductStates) +
                                    " states");
            g.base.push_back(v);
            g.seen.push_back(seen);
            g.succ.emplace_back();
            memory.push_back(q);
        }
        return it->second;
    };
    intern(v0, strategy.initial(), bit(v0));
    for (std::size_t i = 0; i < g.base.size(); ++i) {
        const Vertex v = g.base[i];
        const int q = memory[i];
        const int q2 = strategy.update(q, v);
        std::vector<Vertex> moves;
        if (arena.owner(v) == strategy.owner()) {
            if (strategy.next(q, v) >= 0) moves.push_back(strategy.next(q, v));
        } else {
            moves = arena.successors(v);
        }
        if (q2 < 0 || moves.empty()) {
            Verdict bad;
            bad.reason = "strategy undefined at " + arena.name(v) + " in memory state " + std::to_string(q);
            return bad;
        }
        for (Vertex w : moves) {
            const int j = intern(w, q2, g.seen[i] | bit(w));
            g.succ[i].push_back(j);
        }
    }

    auto found = [&](const Lasso& l) {
        Verdict bad;
        bad.counterexample = l;
        bad.payoff = payoff(arena, objectives, l);
        if (accept(bad.payoff)) throw std::logic_error("verification: counterexample has an accepted payoff");
        bad.reason = "counterexample with payoff " + bad.payoff.str();
        return bad;
    };

    const std::size_t nodes = g.base.size();
    if (occurrence) {
        std::vector<char> all(nodes, 1);
        auto comp = components(g, all);
        for (std::size_t x = 0; x < nodes; ++x) {
            if (!nontrivial(g, comp, static_cast<int>(x)) || accept(evaluate(g.seen[x]))) continue;
            return found(lassoThrough(g, comp, static_cast<int>(x), false));
        }
    } else {
        std::uint32_t present = 0;
        for (Vertex v : g.base) present |= 1U << colours.of[v];
        for (std::uint32_t mask = present;; mask = (mask - 1) & present) {
            if (mask == 0) break;
            if (accept(evaluate(mask))) continue;
            std::vector<char> allowed(nodes, 0);
            for (std::size_t x = 0; x < nodes; ++x) allowed[x] = ((mask >> colours.of[g.base[x]]) & 1U) != 0;
            auto comp = components(g, allowed);
            std::map<int, std::uint32_t> covered;
            for (std::size_t x = 0; x < nodes; ++x)
                if (comp[x] >= 0) covered[comp[x]] |= 1U << colours.of[g.base[x]];
            for (std::size_t x = 0; x < nodes; ++x) {
                if (comp[x] < 0 || covered[comp[x]] != mask || !nontrivial(g, comp, static_cast<int>(x))) continue;
                return found(lassoThrough(g, comp, static_cast<int>(x), true));
            }
        }
    }
    Verdict ok;
    ok.verified = true;
    ok.reason = "verified over " + std::to_string(nodes) + " states";
    return ok;
}

Verdict verifyThresholdStrategy(const OrderedGame& game, const PayoffVector& mu, Vertex v0,
                                const MooreStrategy& strategy, const Limits& limits)
{
    checkOrderedGame(game);
    if (mu.size() != game.size()) throw InvalidInput("threshold length differs from the number of objectives");
    const bool forP1 = strategy.owner() == Player::P1;
    auto accept = [&](const PayoffVector& p) { return game.preorder.leq(mu, p) == forP1; };
    return verifyStrategy(game.arena, game.objectives, accept, v0, strategy, limits);
}

}  // namespace ordgames
