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

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/functional/hash.hpp>

#include "ordgames/objectives.hpp"
#include "ordgames/preorders.hpp"
#include "ordgames/strategy.hpp"

namespace ordgames {

/// An arena with n homogeneous objectives ordered by a monotonic preorder.
struct OrderedGame {
    Arena arena;
    std::vector<Objective> objectives;
    Preorder preorder;

    int size() const { return static_cast<int>(objectives.size()); }
};

/// Throws InvalidInput on a deadlock, heterogeneous or ill-formed objectives, or a preorder of the wrong size.
void checkOrderedGame(const OrderedGame& game);

/**
 * Deterministic automaton reading vertices. States are opaque 64-bit keys; the
 * state stored with a product vertex is the one reached after reading its base vertex.
 */
struct Monitor {
    std::uint64_t initial = 0;
    std::function<std::uint64_t(std::uint64_t, Vertex)> step;
};

/**
 * A single-objective game derived from an arena. For a product the reduced
 * vertex p stands for base[p] with monitor state state[p]; a play from v in the
 * original arena starts at entry[v]. Identity reductions have no monitor.
 */
struct ReducedGame {
    Arena arena;
    Objective objective;
    std::vector<Vertex> base;
    std::vector<Vertex> entry;
    std::vector<std::uint64_t> state;
    Monitor monitor;
    std::string route;

    bool isProduct() const { return static_cast<bool>(monitor.step); }
    /// Reduced vertex for (v, key), or -1 if unreachable.
    Vertex find(Vertex v, std::uint64_t key) const;

    std::unordered_map<std::pair<Vertex, std::uint64_t>, Vertex, boost::hash<std::pair<Vertex, std::uint64_t>>> index;
};

ReducedGame identityReduction(const Arena& arena, Objective objective, std::string route = {});

/// Product of the arena with a monitor, restricted to what is reachable from the entries of all vertices.
ReducedGame productWith(const Arena& arena, const Monitor& monitor, const Limits& limits);

/**
 * Moore strategy on the original arena that plays `inner` (a strategy on the
 * reduced arena) while tracking the monitor in its memory.
 */
MooreStrategy foldStrategy(const ReducedGame& reduced, const Arena& original, const MooreStrategy& inner);

/// How a threshold over Buchi objectives is turned into one objective.
enum class BuchiRoute {
    Auto,          // lexicographic CNF when lexicographic, otherwise generic CNF
    LexCnf,        // closed-form clauses, one generalized Buchi condition per clause
    GenericCnf,    // distributed clauses with subsumption, capped, falling back to BooleanBuchi
    UIExpand,      // distributed clauses without subsumption (up to 2^n clauses)
    BooleanBuchi,  // union-intersection objective solved as Boolean Buchi
};

/**
 * Single objective on the same arena satisfied exactly by the plays whose payoff
 * lies in the upward inclusion closure of `antichain`: the union over nu of the
 * intersection of the objectives in nu. An antichain containing 0^n yields Safe(V).
 */
ReducedGame reduceUpperSet(const Arena& arena, const std::vector<Objective>& objectives, const Antichain& antichain,
                           BuchiRoute route = BuchiRoute::Auto, const Limits& limits = {});

/// reduceUpperSet on M(mu); lexicographic Buchi games use the closed-form clauses.
ReducedGame thresholdToSingleObjective(const OrderedGame& game, const PayoffVector& mu,
                                       BuchiRoute route = BuchiRoute::Auto, const Limits& limits = {});

/// Clauses (as objective index masks, bit i = objective i) of the distributed CNF of an antichain.
std::vector<std::uint64_t> distributeCnf(const Antichain& antichain, bool subsume, std::size_t cap);

/**
 * Product with the set of distinct target sets visited so far; the objective
 * becomes Reach (UIReach, GenReach) or Safe (UISafe) on the product.
 */
ReducedGame uiOccurrenceProduct(const Arena& arena, const Objective& grid, const Limits& limits = {});

struct MullerReduction {
    Objective muller;                       // on the same arena, colours 0..c-1
    std::vector<std::uint64_t> colourAtoms; // colour -> set of atoms containing its vertices
};

/// Colour each vertex by the atoms containing it; the family holds the colour sets whose assignment satisfies phi.
MullerReduction booleanBuchiToMuller(const Arena& arena, const Objective& booleanBuchi, const Limits& limits = {});

/// Latest appearance record product turning a Muller condition into min-even parity.
ReducedGame mullerToParityLAR(const Arena& arena, const Objective& muller, const Limits& limits = {});

/// An ordered game built from a generalized game, with the threshold and the side that answers.
struct Embedding {
    OrderedGame game;
    PayoffVector mu;
    Player answer = Player::P1;  // the generalized game is won by P1 iff `answer` wins this threshold game
};

/// Lexicographic reachability with mu = 1^n.
Embedding embedGenReachAsLex(const Arena& arena, const std::vector<VertexSet>& targets);
/// Lexicographic safety on the owner-swapped arena with Safe(U_i^c) and mu = 0^{n-1}1, answered by P2.
Embedding embedGenReachAsLexSafety(const Arena& arena, const std::vector<VertexSet>& targets);
/// Lexicographic Buchi with mu = 1^n.
Embedding embedGenBuchiAsLex(const Arena& arena, const std::vector<VertexSet>& targets);
/// Lexicographic co-Buchi on the owner-swapped arena with CoBuchi(U_i^c) and mu = 0^{n-1}1, answered by P2.
Embedding embedGenBuchiAsLexCoBuchi(const Arena& arena, const std::vector<VertexSet>& targets);

}  // namespace ordgames
