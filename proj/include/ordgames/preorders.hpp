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

#include <string>
#include <utility>
#include <vector>

#include "ordgames/payoff.hpp"

namespace ordgames {

/**
 * A monotonic preorder over {0,1}^n. The four classical kinds are defined for
 * every n; a Table preorder carries an explicit relation for a fixed n <= 10 and
 * is checked for reflexivity, transitivity and monotonicity when built.
 */
class Preorder {
public:
    enum class Kind { Counting, Subset, Maximise, Lexicographic, Table };

    static constexpr int maxTableSize = 10;

    Preorder() = default;
    static Preorder counting() { return Preorder(Kind::Counting); }
    static Preorder subset() { return Preorder(Kind::Subset); }
    static Preorder maximise() { return Preorder(Kind::Maximise); }
    static Preorder lexicographic() { return Preorder(Kind::Lexicographic); }

    /// Explicit relation given as (x, y) pairs meaning x <= y. Throws InvalidInput
    /// naming the first reflexivity, transitivity or monotonicity violation.
    static Preorder table(int n, const std::vector<std::pair<PayoffVector, PayoffVector>>& pairs);

    Kind kind() const { return kind_; }
    bool isLexicographic() const { return kind_ == Kind::Lexicographic; }
    /// Fixed payoff length of a Table preorder; 0 for the built-in kinds.
    int tableSize() const { return tableN_; }

    bool leq(const PayoffVector& x, const PayoffVector& y) const;

    /// The (x, y) pairs of a Table preorder, x-major.
    std::vector<std::pair<PayoffVector, PayoffVector>> tablePairs() const;

    std::string name() const;
    static Preorder fromName(const std::string& name);

private:
    explicit Preorder(Kind k) : kind_(k) {}

    Kind kind_ = Kind::Lexicographic;
    int tableN_ = 0;
    std::vector<bool> relation_;  // index (x << n) | y
};

/// A set of pairwise inclusion-incomparable payoffs, sorted by word().
using Antichain = std::vector<PayoffVector>;

/**
 * The inclusion-minimal elements of {nu | mu <= nu}. Lexicographic uses the closed
 * form; the other kinds enumerate all 2^n payoffs, bounded by limits.maxEnumerationBits.
 */
Antichain minimalThresholds(const Preorder& pre, const PayoffVector& mu, const Limits& limits = {});

/// Generic enumeration path of minimalThresholds, for any preorder.
Antichain minimalThresholdsByEnumeration(const Preorder& pre, const PayoffVector& mu,
                                         const Limits& limits = {});

/// Closed form for the lexicographic preorder: {x} plus x_1..x_{j-1} 1 0^{n-j}
/// for every 0 bit j before Last1(x).
Antichain lexMinimalThresholds(const PayoffVector& mu);

/**
 * Clause generators of the conjunctive normal form of the lexicographic threshold
 * objective: Payoff >= mu iff every clause in the result meets the payoff. Equals
 * M(complementBits(mu) + 1); empty (no clause) for mu = 0^n.
 */
Antichain lexCnfThresholds(const PayoffVector& mu);

/// Exhaustive monotonicity check over {0,1}^n.
bool isMonotonic(const Preorder& pre, int n);

}  // namespace ordgames
