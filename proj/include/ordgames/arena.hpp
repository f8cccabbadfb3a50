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

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordgames/types.hpp"

namespace ordgames {

/**
 * A finite game structure: vertices with dense ids, each owned by one of the
 * two players, and a set of directed edges. Immutable after construction.
 *
 * Construction does not enforce the no-deadlock invariant so that malformed
 * input can be reported by validate(); every solver assumes a validated arena.
 */
class Arena {
public:
    Arena() = default;
    Arena(std::vector<Player> owners, const std::vector<std::pair<Vertex, Vertex>>& edges,
          std::vector<std::string> names = {});

    int size() const { return static_cast<int>(owners_.size()); }
    Player owner(Vertex v) const { return owners_[v]; }
    const std::vector<Vertex>& successors(Vertex v) const { return succ_[v]; }
    const std::vector<Vertex>& predecessors(Vertex v) const { return pred_[v]; }
    bool hasEdge(Vertex u, Vertex v) const;
    std::size_t edgeCount() const;

    const std::string& name(Vertex v) const { return names_[v]; }
    std::optional<Vertex> find(const std::string& name) const;

    /// Edges as given, including any that reference missing vertices.
    const std::vector<std::pair<Vertex, Vertex>>& rawEdges() const { return raw_; }

    /// Same graph with the two players exchanged.
    Arena withSwappedOwners() const;

    VertexSet emptySet() const { return VertexSet(owners_.size()); }
    VertexSet fullSet() const { return ~VertexSet(owners_.size()); }

private:
    std::vector<Player> owners_;
    std::vector<std::vector<Vertex>> succ_;
    std::vector<std::vector<Vertex>> pred_;
    std::vector<std::string> names_;
    std::vector<std::pair<Vertex, Vertex>> raw_;
};

/// Returns the first violated arena invariant, or nothing when the arena is legal.
std::optional<std::string> validate(const Arena& arena);

/// The ultimately periodic play prefix . cycle^omega.
struct Lasso {
    std::vector<Vertex> prefix;
    std::vector<Vertex> cycle;

    bool operator==(const Lasso&) const = default;
};

/// Throws InvalidInput unless every step of the lasso (including the wrap-around) is an edge.
void checkLasso(const Arena& arena, const Lasso& lasso);

VertexSet occ(const Arena& arena, const Lasso& lasso);
VertexSet inf(const Arena& arena, const Lasso& lasso);

std::string formatLasso(const Arena& arena, const Lasso& lasso);

/// Thrown by subarena when the kept set leaves a vertex without successors.
struct DeadlockError : InvalidInput {
    DeadlockError(Vertex v, const std::string& what) : InvalidInput(what), vertex(v) {}
    Vertex vertex;
};

struct SubArena {
    Arena arena;
    std::vector<Vertex> toParent;    // sub id -> parent id
    std::vector<Vertex> fromParent;  // parent id -> sub id, or -1
};

/// Induced sub-game on `keep`, with vertices renumbered densely in increasing parent order.
SubArena subarena(const Arena& arena, const VertexSet& keep);

}  // namespace ordgames
