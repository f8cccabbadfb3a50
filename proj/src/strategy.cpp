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

#include "ordgames/strategy.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace ordgames {

MooreStrategy::MooreStrategy(Player owner, int vertices, int states, int initial)
    : owner_(owner), vertices_(vertices), states_(states), initial_(initial),
      update_(static_cast<std::size_t>(vertices) * states, -1), next_(static_cast<std::size_t>(vertices) * states, -1)
{
    if (states < 1 || initial < 0 || initial >= states) throw InvalidInput("strategy: bad state count or initial state");
}

MooreStrategy MooreStrategy::memoryless(Player owner, const std::vector<Vertex>& choice)
{
    const int n = static_cast<int>(choice.size());
    MooreStrategy s(owner, n, 1);
    for (Vertex v = 0; v < n; ++v) {
        s.setUpdate(0, v, 0);
        s.setNext(0, v, choice[v]);
    }
    return s;
}

void checkStrategy(const Arena& arena, const MooreStrategy& strategy)
{
    if (strategy.vertexCount() != arena.size()) throw InvalidInput("strategy does not match the arena size");
    for (int q = 0; q < strategy.size(); ++q) {
        for (Vertex v = 0; v < arena.size(); ++v) {
            int u = strategy.update(q, v);
            if (u < -1 || u >= strategy.size()) throw InvalidInput("strategy: update leads to an unknown state");
            Vertex w = strategy.next(q, v);
            if (w == -1) continue;
            if (arena.owner(v) != strategy.owner())
                throw InvalidInput("strategy moves at " + arena.name(v) + ", which its player does not own");
            if (!arena.hasEdge(v, w))
                throw InvalidInput("strategy move " + arena.name(v) + " -> " +
                                   (w >= 0 && w < arena.size() ? arena.name(w) : std::to_string(w)) +
                                   " is not an edge");
        }
    }
}

int memoryAfter(const MooreStrategy& strategy, const std::vector<Vertex>& history)
{
    int q = strategy.initial();
    for (Vertex v : history) {
        q = strategy.update(q, v);
        if (q < 0) return -1;
    }
    return q;
}

Lasso outcome(const Arena& arena, Vertex v0, const MooreStrategy& s1, const MooreStrategy& s2)
{
    if (s1.owner() == s2.owner()) throw InvalidInput("outcome needs strategies of both players");
    const MooreStrategy& p1 = s1.owner() == Player::P1 ? s1 : s2;
    const MooreStrategy& p2 = s1.owner() == Player::P1 ? s2 : s1;
    if (p1.vertexCount() != arena.size() || p2.vertexCount() != arena.size())
        throw InvalidInput("strategy does not match the arena size");

    std::map<std::tuple<Vertex, int, int>, std::size_t> seen;
    std::vector<Vertex> play;
    Vertex v = v0;
    int q1 = p1.initial();
    int q2 = p2.initial();
    while (true) {
        auto [it, fresh] = seen.emplace(std::make_tuple(v, q1, q2), play.size());
        if (!fresh) {
            Lasso l;
            l.prefix.assign(play.begin(), play.begin() + static_cast<std::ptrdiff_t>(it->second));
            l.cycle.assign(play.begin() + static_cast<std::ptrdiff_t>(it->second), play.end());
            // memory may settle after the vertices already repeat: fold that tail into the cycle
            while (!l.prefix.empty() && l.prefix.back() == l.cycle.back()) {
                std::rotate(l.cycle.rbegin(), l.cycle.rbegin() + 1, l.cycle.rend());
                l.prefix.pop_back();
            }
            return l;
        }
        play.push_back(v);
        const MooreStrategy& mover = arena.owner(v) == Player::P1 ? p1 : p2;
        Vertex w = mover.next(mover.owner() == Player::P1 ? q1 : q2, v);
        if (w < 0 || !arena.hasEdge(v, w))
            throw InvalidInput(std::string(toString(mover.owner())) + " strategy has no valid move at " +
                               arena.name(v));
        q1 = p1.update(q1, v);
        q2 = p2.update(q2, v);
        if (q1 < 0 || q2 < 0) throw InvalidInput("strategy memory undefined after " + arena.name(v));
        v = w;
    }
}

MooreStrategy minimize(const MooreStrategy& strategy)
{
    const int n = strategy.vertexCount();
    // states reachable from the initial one
    std::vector<int> order{strategy.initial()};
    std::vector<int> local(strategy.size(), -1);
    local[strategy.initial()] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (Vertex v = 0; v < n; ++v) {
            int t = strategy.update(order[i], v);
            if (t >= 0 && local[t] < 0) {
                local[t] = static_cast<int>(order.size());
                order.push_back(t);
            }
        }
    }
    const int k = static_cast<int>(order.size());

    // partition refinement, starting from the move tables
    std::vector<int> block(k, 0);
    int blocks = 0;
    {
        std::map<std::vector<Vertex>, int> ids;
        for (int i = 0; i < k; ++i) {
            std::vector<Vertex> sig(n);
            for (Vertex v = 0; v < n; ++v) sig[v] = strategy.next(order[i], v);
            block[i] = ids.emplace(sig, static_cast<int>(ids.size())).first->second;
        }
        blocks = static_cast<int>(ids.size());
    }
    while (true) {
        std::map<std::vector<int>, int> ids;
        std::vector<int> refined(k);
        for (int i = 0; i < k; ++i) {
            std::vector<int> sig(n + 1);
            sig[0] = block[i];
            for (Vertex v = 0; v < n; ++v) {
                int t = strategy.update(order[i], v);
                sig[v + 1] = t < 0 ? -1 : block[local[t]];
            }
            refined[i] = ids.emplace(sig, static_cast<int>(ids.size())).first->second;
        }
        const int count = static_cast<int>(ids.size());
        block = std::move(refined);
        if (count == blocks) break;
        blocks = count;
    }

    MooreStrategy out(strategy.owner(), n, blocks, block[0]);
    for (int i = 0; i < k; ++i) {
        for (Vertex v = 0; v < n; ++v) {
            int t = strategy.update(order[i], v);
            out.setUpdate(block[i], v, t < 0 ? -1 : block[local[t]]);
            out.setNext(block[i], v, strategy.next(order[i], v));
        }
    }
    return out;
}

}  // namespace ordgames
