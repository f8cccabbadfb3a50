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

#include "ordgames/preorders.hpp"

#include <algorithm>
#include <bit>

namespace ordgames {

namespace {

// Highest 1-based index of a satisfied objective, 0 when none.
int maxIndex(const PayoffVector& x)
{
    return x.isZero() ? 0 : last1(x);
}

void checkLengths(const PayoffVector& x, const PayoffVector& y)
{
    if (x.size() != y.size()) throw InvalidInput("preorder: payoff length mismatch");
}

}  // namespace

Preorder Preorder::table(int n, const std::vector<std::pair<PayoffVector, PayoffVector>>& pairs)
{
    if (n < 1 || n > maxTableSize) throw InvalidInput("table preorder: n must be in [1, 10]");
    Preorder p(Kind::Table);
    p.tableN_ = n;
    const std::uint64_t count = 1ULL << n;
    p.relation_.assign(count * count, false);
    for (const auto& [x, y] : pairs) {
        if (x.size() != n || y.size() != n) throw InvalidInput("table preorder: pair length differs from n");
        p.relation_[(x.word() << n) | y.word()] = true;
    }
    auto rel = [&](std::uint64_t x, std::uint64_t y) { return p.relation_[(x << n) | y]; };
    auto str = [&](std::uint64_t x) { return PayoffVector(n, x).str(); };
    for (std::uint64_t x = 0; x < count; ++x) {
        if (!rel(x, x)) throw InvalidInput("table preorder is not reflexive at " + str(x));
    }
    for (std::uint64_t x = 0; x < count; ++x) {
        for (std::uint64_t y = 0; y < count; ++y) {
            if ((x & ~y) == 0 && !rel(x, y))
                throw InvalidInput("table preorder is not monotonic: " + str(x) + " <= " + str(y) + " missing");
        }
    }
    for (std::uint64_t x = 0; x < count; ++x) {
        for (std::uint64_t y = 0; y < count; ++y) {
            if (!rel(x, y)) continue;
            for (std::uint64_t z = 0; z < count; ++z) {
                if (rel(y, z) && !rel(x, z))
                    throw InvalidInput("table preorder is not transitive: " + str(x) + " <= " + str(y) +
                                       " <= " + str(z));
            }
        }
    }
    return p;
}

bool Preorder::leq(const PayoffVector& x, const PayoffVector& y) const
{
    checkLengths(x, y);
    switch (kind_) {
    case Kind::Counting: return x.count() <= y.count();
    case Kind::Subset: return x.subsetOf(y);
    case Kind::Maximise: return maxIndex(x) <= maxIndex(y);
    case Kind::Lexicographic: return x.word() <= y.word();
    case Kind::Table:
        if (x.size() != tableN_) throw InvalidInput("table preorder: payoff length differs from n");
        return relation_[(x.word() << tableN_) | y.word()];
    }
    return false;
}

std::vector<std::pair<PayoffVector, PayoffVector>> Preorder::tablePairs() const
{
    std::vector<std::pair<PayoffVector, PayoffVector>> out;
    const std::uint64_t count = 1ULL << tableN_;
    for (std::uint64_t x = 0; x < count && kind_ == Kind::Table; ++x)
        for (std::uint64_t y = 0; y < count; ++y)
            if (relation_[(x << tableN_) | y]) out.emplace_back(PayoffVector(tableN_, x), PayoffVector(tableN_, y));
    return out;
}

std::string Preorder::name() const
{
    switch (kind_) {
    case Kind::Counting: return "counting";
    case Kind::Subset: return "subset";
    case Kind::Maximise: return "maximise";
    case Kind::Lexicographic: return "lexicographic";
    case Kind::Table: return "table";
    }
    return "?";
}

Preorder Preorder::fromName(const std::string& name)
{
    if (name == "counting") return counting();
    if (name == "subset") return subset();
    if (name == "maximise") return maximise();
    if (name == "lexicographic") return lexicographic();
    throw InvalidInput("unknown preorder '" + name + "'");
}

Antichain minimalThresholdsByEnumeration(const Preorder& pre, const PayoffVector& mu, const Limits& limits)
{
    const int n = mu.size();
    if (n > limits.maxEnumerationBits)
        throw ResourceLimit("minimal thresholds: 2^" + std::to_string(n) + " payoffs exceed the enumeration bound 2^" +
                            std::to_string(limits.maxEnumerationBits));
    std::vector<PayoffVector> upper;
    for (std::uint64_t w = 0; w < (1ULL << n); ++w) {
        PayoffVector nu(n, w);
        if (pre.leq(mu, nu)) upper.push_back(nu);
    }
    Antichain out;
    for (const auto& a : upper) {
        bool minimal = std::none_of(upper.begin(), upper.end(), [&](const PayoffVector& b) {
            return b != a && b.subsetOf(a);
        });
        if (minimal) out.push_back(a);
    }
    return out;
}

Antichain lexMinimalThresholds(const PayoffVector& mu)
{
    Antichain out{mu};
    if (mu.isZero()) return out;
    const int n = mu.size();
    const int last = last1(mu);
    for (int j = 1; j < last; ++j) {
        if (mu.test(j - 1)) continue;
        // keep the prefix x_1..x_{j-1}, set bit j, clear the tail
        std::uint64_t prefix = mu.word() >> (n - j + 1) << (n - j + 1);
        out.push_back(PayoffVector(n, prefix | (1ULL << (n - j))));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Antichain minimalThresholds(const Preorder& pre, const PayoffVector& mu, const Limits& limits)
{
    switch (pre.kind()) {
    case Preorder::Kind::Lexicographic: return lexMinimalThresholds(mu);
    case Preorder::Kind::Subset: return {mu};
    default: return minimalThresholdsByEnumeration(pre, mu, limits);
    }
}

Antichain lexCnfThresholds(const PayoffVector& mu)
{
    if (mu.isZero()) return {};
    return lexMinimalThresholds(lexSuccessor(complementBits(mu)));
}

bool isMonotonic(const Preorder& pre, int n)
{
    const std::uint64_t count = 1ULL << n;
    for (std::uint64_t x = 0; x < count; ++x)
        for (std::uint64_t y = 0; y < count; ++y)
            if ((x & ~y) == 0 && !pre.leq(PayoffVector(n, x), PayoffVector(n, y))) return false;
    return true;
}

}  // namespace ordgames
