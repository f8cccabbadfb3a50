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

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "ordgames/types.hpp"

namespace ordgames {

/**
 * Payoff vector over n <= 63 objectives. Objective 1 is the leftmost character of
 * the bit-string form and the most significant bit of word(), so the integer order
 * on word() is the lexicographic order on payoffs.
 *
 * Accessors take 0-based objective indices; last1() follows the 1-based convention
 * of the bit-string form.
 */
class PayoffVector {
public:
    static constexpr int maxSize = 63;

    PayoffVector() = default;
    PayoffVector(int n, std::uint64_t word);

    static PayoffVector zeros(int n) { return PayoffVector(n, 0); }
    static PayoffVector ones(int n);
    static PayoffVector parse(const std::string& bits);

    int size() const { return n_; }
    std::uint64_t word() const { return word_; }

    bool test(int i) const { return (word_ >> (n_ - 1 - i)) & 1U; }
    PayoffVector with(int i, bool value) const;
    int count() const;
    bool isZero() const { return word_ == 0; }
    bool isOnes() const;

    /// 0-based indices of the satisfied objectives (the set delta).
    std::vector<int> oneIndices() const;

    /// Componentwise inclusion.
    bool subsetOf(const PayoffVector& other) const;

    std::string str() const;

    auto operator<=>(const PayoffVector&) const = default;

private:
    int n_ = 0;
    std::uint64_t word_ = 0;
};

/// Binary-counter successor; rejects 1^n.
PayoffVector lexSuccessor(const PayoffVector& x);
/// Binary-counter predecessor; rejects 0^n.
PayoffVector lexPredecessor(const PayoffVector& x);
PayoffVector complementBits(const PayoffVector& x);
/// 1-based index of the last 1 bit; rejects 0^n.
int last1(const PayoffVector& x);

}  // namespace ordgames
