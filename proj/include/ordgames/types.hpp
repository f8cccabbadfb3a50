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

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace ordgames {

enum class Player : std::uint8_t { P1 = 0, P2 = 1 };

inline Player opponent(Player p) { return p == Player::P1 ? Player::P2 : Player::P1; }
inline int index(Player p) { return static_cast<int>(p); }
inline const char* toString(Player p) { return p == Player::P1 ? "P1" : "P2"; }

/// Dense vertex id.
using Vertex = int;

/// A subset of an arena's vertices, indexed by dense vertex id.
using VertexSet = boost::dynamic_bitset<>;

VertexSet makeSet(std::size_t n, const std::vector<Vertex>& members);
std::vector<Vertex> members(const VertexSet& s);

/// Malformed input: bad arena, ill-formed objective, length mismatch, ...
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A construction would exceed one of the configured size bounds.
struct ResourceLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * Size bounds for the exponential constructions. Every construction checks
 * its blowup factor against these before allocating and throws ResourceLimit
 * naming the factor otherwise.
 */
struct Limits {
    int maxEnumerationBits = 16;      // 2^n payoff enumeration for generic preorders
    int maxMonitorBits = 20;          // K distinct target sets in the occurrence product
    int maxLarColors = 7;             // c! latest appearance records
    int maxFormulaVariables = 24;     // 2^m Boolean-Buchi colours
    int maxCnfClauses = 4096;         // s'(n) cap for generic Buchi CNF
    std::size_t maxProductStates = 4'000'000;
};

}  // namespace ordgames
