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

#include "ordgames/arena.hpp"

#include <algorithm>
#include <sstream>

namespace ordgames {

VertexSet makeSet(std::size_t n, const std::vector<Vertex>& vs)
{
    VertexSet s(n);
    for (Vertex v : vs) {
        if (v < 0 || static_cast<std::size_t>(v) >= n)
            throw InvalidInput("vertex id " + std::to_string(v) + " out of range");
        s.set(v);
    }
    return s;
}

std::vector<Vertex> members(const VertexSet& s)
{
    std::vector<Vertex> out;
    for (auto i = s.find_first(); i != VertexSet::npos; i = s.find_next(i))
        out.push_back(static_cast<Vertex>(i));
    return out;
}

Arena::Arena(std::vector<Player> owners, const std::vector<std::pair<Vertex, Vertex>>& edges,
             std::vector<std::string> names)
    : owners_(std::move(owners)), names_(std::move(names)), raw_(edges)
{
    const int n = size();
    succ_.resize(n);
    pred_.resize(n);
    if (names_.empty()) {
        for (int v = 0; v < n; ++v) names_.push_back("v" + std::to_string(v));
    }
    if (static_cast<int>(names_.size()) != n)
        throw InvalidInput("arena: name count does not match vertex count");
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) continue;  // reported by validate()
        succ_[u].push_back(v);
    }
    for (int u = 0; u < n; ++u) {
        auto& s = succ_[u];
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        for (Vertex v : s) pred_[v].push_back(u);
    }
}

bool Arena::hasEdge(Vertex u, Vertex v) const
{
    const auto& s = succ_[u];
    return std::binary_search(s.begin(), s.end(), v);
}

std::size_t Arena::edgeCount() const
{
    std::size_t m = 0;
    for (const auto& s : succ_) m += s.size();
    return m;
}

std::optional<Vertex> Arena::find(const std::string& name) const
{
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<Vertex>(it - names_.begin());
}

Arena Arena::withSwappedOwners() const
{
    Arena a = *this;
    for (auto& o : a.owners_) o = opponent(o);
    return a;
}

std::optional<std::string> validate(const Arena& arena)
{
    const int n = arena.size();
    for (auto [u, v] : arena.rawEdges()) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            std::ostringstream os;
            os << "edge (" << u << ", " << v << ") references a missing vertex";
            return os.str();
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        if (arena.successors(v).empty()) return "deadlock at " + arena.name(v);
    }
    return std::nullopt;
}

void checkLasso(const Arena& arena, const Lasso& lasso)
{
    if (lasso.cycle.empty()) throw InvalidInput("lasso: empty cycle");
    std::vector<Vertex> seq = lasso.prefix;
    seq.insert(seq.end(), lasso.cycle.begin(), lasso.cycle.end());
    seq.push_back(lasso.cycle.front());
    for (Vertex v : seq) {
        if (v < 0 || v >= arena.size()) throw InvalidInput("lasso: vertex out of range");
    }
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        if (!arena.hasEdge(seq[i], seq[i + 1]))
            throw InvalidInput("lasso: " + arena.name(seq[i]) + " -> " + arena.name(seq[i + 1]) +
                               " is not an edge");
    }
}

VertexSet occ(const Arena& arena, const Lasso& lasso)
{
    checkLasso(arena, lasso);
    VertexSet s = arena.emptySet();
    for (Vertex v : lasso.prefix) s.set(v);
    for (Vertex v : lasso.cycle) s.set(v);
    return s;
}

VertexSet inf(const Arena& arena, const Lasso& lasso)
{
    checkLasso(arena, lasso);
    VertexSet s = arena.emptySet();
    for (Vertex v : lasso.cycle) s.set(v);
    return s;
}

std::string formatLasso(const Arena& arena, const Lasso& lasso)
{
    std::ostringstream os;
    for (Vertex v : lasso.prefix) os << arena.name(v) << ' ';
    os << '(';
    for (std::size_t i = 0; i < lasso.cycle.size(); ++i) {
        if (i) os << ' ';
        os << arena.name(lasso.cycle[i]);
    }
    os << ")^w";
    return os.str();
}

SubArena subarena(const Arena& arena, const VertexSet& keep)
{
    SubArena sub;
    sub.fromParent.assign(arena.size(), -1);
    for (Vertex v = 0; v < arena.size(); ++v) {
        if (!keep.test(v)) continue;
        sub.fromParent[v] = static_cast<Vertex>(sub.toParent.size());
        sub.toParent.push_back(v);
    }
    std::vector<Player> owners;
    std::vector<std::string> names;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v : sub.toParent) {
        owners.push_back(arena.owner(v));
        names.push_back(arena.name(v));
        bool any = false;
        for (Vertex w : arena.successors(v)) {
            if (!keep.test(w)) continue;
            edges.emplace_back(sub.fromParent[v], sub.fromParent[w]);
            any = true;
        }
        if (!any) throw DeadlockError(v, "subarena: " + arena.name(v) + " has no successor in the kept set");
    }
    sub.arena = Arena(std::move(owners), edges, std::move(names));
    return sub;
}

}  // namespace ordgames
