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

#include "ordgames/payoff.hpp"

#include <bit>

namespace ordgames {

namespace {

std::uint64_t mask(int n) { return n == 64 ? ~0ULL : ((1ULL << n) - 1); }

}  // namespace

PayoffVector::PayoffVector(int n, std::uint64_t word) : n_(n), word_(word)
{
    if (n < 0 || n > maxSize) throw InvalidInput("payoff length must be in [0, 63]");
    if (word & ~mask(n)) throw InvalidInput("payoff word has bits beyond its length");
}

PayoffVector PayoffVector::ones(int n) { return PayoffVector(n, mask(n)); }

PayoffVector PayoffVector::parse(const std::string& bits)
{
    if (bits.empty() || static_cast<int>(bits.size()) > maxSize)
        throw InvalidInput("payoff bit-string must have 1 to 63 characters");
    std::uint64_t w = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') throw InvalidInput("payoff bit-string '" + bits + "' has a non-binary character");
        w = (w << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return PayoffVector(static_cast<int>(bits.size()), w);
}

PayoffVector PayoffVector::with(int i, bool value) const
{
    const std::uint64_t bit = 1ULL << (n_ - 1 - i);
    return PayoffVector(n_, value ? (word_ | bit) : (word_ & ~bit));
}

int PayoffVector::count() const { return std::popcount(word_); }

bool PayoffVector::isOnes() const { return word_ == mask(n_); }

std::vector<int> PayoffVector::oneIndices() const
{
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
        if (test(i)) out.push_back(i);
    return out;
}

bool PayoffVector::subsetOf(const PayoffVector& other) const
{
    if (n_ != other.n_) throw InvalidInput("payoff length mismatch");
    return (word_ & ~other.word_) == 0;
}

std::string PayoffVector::str() const
{
    std::string s(n_, '0');
    for (int i = 0; i < n_; ++i)
        if (test(i)) s[i] = '1';
    return s;
}

PayoffVector lexSuccessor(const PayoffVector& x)
{
    if (x.isOnes()) throw InvalidInput("lexSuccessor: 1^n has no successor");
    return PayoffVector(x.size(), x.word() + 1);
}

PayoffVector lexPredecessor(const PayoffVector& x)
{
    if (x.isZero()) throw InvalidInput("lexPredecessor: 0^n has no predecessor");
    return PayoffVector(x.size(), x.word() - 1);
}

PayoffVector complementBits(const PayoffVector& x)
{
    return PayoffVector(x.size(), ~x.word() & mask(x.size()));
}

int last1(const PayoffVector& x)
{
    if (x.isZero()) throw InvalidInput("last1: 0^n has no 1 bit");
    // the lowest set bit of the word is the rightmost 1 of the string
    return x.size() - std::countr_zero(x.word());
}

}  // namespace ordgames
