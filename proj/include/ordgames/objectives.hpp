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
#include <string>
#include <utility>
#include <vector>

#include "ordgames/arena.hpp"
#include "ordgames/payoff.hpp"

namespace ordgames {

/**
 * Negation-normal Boolean formula over variables x_0, x_1, ... . Negation only
 * appears on literals. Built through the static constructors, which flatten
 * nested connectives of the same kind and fold constants.
 */
class Formula {
public:
    enum class Op : std::uint8_t { True, False, Literal, And, Or };

    Formula() = default;
    static Formula constant(bool value);
    static Formula literal(int var, bool positive = true);
    static Formula conj(std::vector<Formula> parts);
    static Formula disj(std::vector<Formula> parts);

    Op op() const { return op_; }
    int var() const { return var_; }
    bool positive() const { return positive_; }
    const std::vector<Formula>& children() const { return children_; }

    /// Bit i of `assignment` is the value of x_i.
    bool eval(std::uint64_t assignment) const;

    /// Number of binary conjunctions and disjunctions: an n-ary node counts n - 1.
    int size() const;
    /// One more than the largest variable index, 0 for a constant.
    int variableCount() const;

    Formula negated() const;
    /// Renames x_i to x_{to[i]}.
    Formula mapVariables(const std::vector<int>& to) const;

    std::string str() const;

    bool operator==(const Formula&) const = default;

private:
    Op op_ = Op::True;
    int var_ = 0;
    bool positive_ = true;
    std::vector<Formula> children_;
};

enum class ObjectiveKind {
    Reach,
    Safe,
    Buchi,
    CoBuchi,
    ExplMuller,
    Rabin,
    Streett,
    Parity,
    Muller,
    BooleanBuchi,
    GenReach,
    GenBuchi,
    UIReach,
    UISafe,
    UIBuchi,
    UICoBuchi,  // union over rows of intersections of co-Buchi conditions
};

std::string kindName(ObjectiveKind kind);

/// Conditions on Occ(pi) rather than Inf(pi).
bool isOccurrenceKind(ObjectiveKind kind);

/**
 * An omega-regular objective over a fixed arena. Only the fields used by the
 * kind are populated:
 *
 *   Reach/Safe/Buchi/CoBuchi   sets = {U}
 *   GenReach/GenBuchi          sets = U_1..U_m
 *   ExplMuller                 sets = the family F
 *   BooleanBuchi               sets = U_1..U_m, formula over x_0..x_{m-1}
 *   Rabin/Streett              pairs = (E_i, F_i)
 *   Parity                     coloring
 *   Muller                     coloring, colorFamily (sorted, duplicate-free colour sets)
 *   UI kinds                   grid (rows are unions, columns intersections)
 */
struct Objective {
    ObjectiveKind kind = ObjectiveKind::Safe;
    std::vector<VertexSet> sets;
    std::vector<std::pair<VertexSet, VertexSet>> pairs;
    std::vector<int> coloring;
    std::vector<std::vector<int>> colorFamily;
    std::vector<std::vector<VertexSet>> grid;
    Formula formula;

    static Objective reach(VertexSet u);
    static Objective safe(VertexSet u);
    static Objective buchi(VertexSet u);
    static Objective coBuchi(VertexSet u);
    static Objective genReach(std::vector<VertexSet> us);
    static Objective genBuchi(std::vector<VertexSet> us);
    static Objective explMuller(std::vector<VertexSet> family);
    static Objective rabin(std::vector<std::pair<VertexSet, VertexSet>> pairs);
    static Objective streett(std::vector<std::pair<VertexSet, VertexSet>> pairs);
    static Objective parity(std::vector<int> coloring);
    static Objective muller(std::vector<int> coloring, std::vector<std::vector<int>> family);
    /// Identical atoms are merged and unused atoms dropped.
    static Objective booleanBuchi(const Formula& phi, const std::vector<VertexSet>& atoms);
    static Objective ui(ObjectiveKind kind, std::vector<std::vector<VertexSet>> grid);

    bool operator==(const Objective&) const = default;
};

/// Throws InvalidInput unless every set, colouring and formula fits the arena.
void checkObjective(const Arena& arena, const Objective& obj);

bool satisfies(const Objective& obj, const VertexSet& occ, const VertexSet& inf);
bool satisfies(const Arena& arena, const Objective& obj, const Lasso& lasso);

/// Throws InvalidInput on an empty or heterogeneous list.
void checkHomogeneous(const std::vector<Objective>& objs);

PayoffVector payoff(const std::vector<Objective>& objs, const VertexSet& occ, const VertexSet& inf);
PayoffVector payoff(const Arena& arena, const std::vector<Objective>& objs, const Lasso& lasso);

/**
 * Objective satisfied by exactly the plays that do not satisfy `obj`.
 * Reach/Safe and Buchi/CoBuchi swap with complemented sets, Rabin/Streett swap
 * with the same pairs, parity shifts every colour by one, the Muller kinds take
 * the complementary family, and Boolean Buchi negates its formula.
 */
Objective complement(const Objective& obj);

/// Largest colour or vertex count for which complement() enumerates a family.
inline constexpr int maxComplementFamilyBits = 12;

/**
 * Equivalent Boolean Buchi objective. Accepts Buchi, CoBuchi, Parity, Rabin,
 * Streett, Muller, GenBuchi, UIBuchi, UICoBuchi and BooleanBuchi.
 */
Objective toBooleanBuchi(const Objective& obj);

/// Union over rows of the intersection over columns, for Boolean Buchi parts.
Objective booleanBuchiUnionIntersection(const std::vector<std::vector<Objective>>& parts);

/// Union over rows of the intersection over columns, for explicit Muller parts.
Objective explMullerUnionIntersection(const std::vector<std::vector<Objective>>& parts);

/// Assignment of a Boolean Buchi formula induced by an Inf set: x_i iff Inf meets U_i.
std::uint64_t assignmentOf(const Objective& booleanBuchi, const VertexSet& inf);

}  // namespace ordgames
