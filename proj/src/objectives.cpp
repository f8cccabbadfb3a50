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

#include "ordgames/objectives.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ordgames {

// --- Formula ---------------------------------------------------------------

Formula Formula::constant(bool value)
{
    Formula f;
    f.op_ = value ? Op::True : Op::False;
    return f;
}

Formula Formula::literal(int var, bool positive)
{
    if (var < 0 || var >= 64) throw InvalidInput("formula variable index out of range");
    Formula f;
    f.op_ = Op::Literal;
    f.var_ = var;
    f.positive_ = positive;
    return f;
}

namespace {

void dropDuplicates(std::vector<Formula>& parts)
{
    std::vector<Formula> kept;
    for (auto& p : parts)
        if (std::find(kept.begin(), kept.end(), p) == kept.end()) kept.push_back(std::move(p));
    parts = std::move(kept);
}

// Shared body of conj/disj: `unit` is the neutral constant, the other one absorbs.
Formula connective(Formula::Op op, std::vector<Formula> parts, bool unit)
{
    std::vector<Formula> flat;
    for (auto& p : parts) {
        if (p.op() == Formula::Op::True || p.op() == Formula::Op::False) {
            bool value = p.op() == Formula::Op::True;
            if (value == unit) continue;
            return Formula::constant(!unit);
        }
        if (p.op() == op) {
            for (const auto& c : p.children()) flat.push_back(c);
        } else {
            flat.push_back(std::move(p));
        }
    }
    if (flat.empty()) return Formula::constant(unit);
    if (flat.size() == 1) return flat.front();
    return Formula::Op::And == op ? Formula::conj(std::move(flat)) : Formula::disj(std::move(flat));
}

}  // namespace

Formula Formula::conj(std::vector<Formula> parts)
{
    bool flat = parts.size() >= 2 && std::all_of(parts.begin(), parts.end(), [](const Formula& p) {
        return p.op() == Op::Literal || p.op() == Op::Or;
    });
    if (!flat) return connective(Op::And, std::move(parts), true);
    dropDuplicates(parts);
    if (parts.size() == 1) return parts.front();
    Formula f;
    f.op_ = Op::And;
    f.children_ = std::move(parts);
    return f;
}

Formula Formula::disj(std::vector<Formula> parts)
{
    bool flat = parts.size() >= 2 && std::all_of(parts.begin(), parts.end(), [](const Formula& p) {
        return p.op() == Op::Literal || p.op() == Op::And;
    });
    if (!flat) return connective(Op::Or, std::move(parts), false);
    dropDuplicates(parts);
    if (parts.size() == 1) return parts.front();
    Formula f;
    f.op_ = Op::Or;
    f.children_ = std::move(parts);
    return f;
}

bool Formula::eval(std::uint64_t assignment) const
{
    switch (op_) {
    case Op::True: return true;
    case Op::False: return false;
    case Op::Literal: return (((assignment >> var_) & 1U) != 0) == positive_;
    case Op::And:
        for (const auto& c : children_)
            if (!c.eval(assignment)) return false;
        return true;
    case Op::Or:
        for (const auto& c : children_)
            if (c.eval(assignment)) return true;
        return false;
    }
    return false;
}

int Formula::size() const
{
    if (op_ != Op::And && op_ != Op::Or) return 0;
    int s = static_cast<int>(children_.size()) - 1;
    for (const auto& c : children_) s += c.size();
    return s;
}

int Formula::variableCount() const
{
    if (op_ == Op::Literal) return var_ + 1;
    int m = 0;
    for (const auto& c : children_) m = std::max(m, c.variableCount());
    return m;
}

Formula Formula::negated() const
{
    switch (op_) {
    case Op::True: return constant(false);
    case Op::False: return constant(true);
    case Op::Literal: return literal(var_, !positive_);
    case Op::And:
    case Op::Or: {
        std::vector<Formula> parts;
        for (const auto& c : children_) parts.push_back(c.negated());
        return op_ == Op::And ? disj(std::move(parts)) : conj(std::move(parts));
    }
    }
    return *this;
}

Formula Formula::mapVariables(const std::vector<int>& to) const
{
    if (op_ == Op::Literal) return literal(to.at(var_), positive_);
    if (op_ != Op::And && op_ != Op::Or) return *this;
    std::vector<Formula> parts;
    for (const auto& c : children_) parts.push_back(c.mapVariables(to));
    return op_ == Op::And ? conj(std::move(parts)) : disj(std::move(parts));
}

std::string Formula::str() const
{
    switch (op_) {
    case Op::True: return "true";
    case Op::False: return "false";
    case Op::Literal: return (positive_ ? "x" : "!x") + std::to_string(var_ + 1);
    case Op::And:
    case Op::Or: {
        std::string s = "(";
        for (std::size_t i = 0; i < children_.size(); ++i) {
            if (i) s += op_ == Op::And ? " & " : " | ";
            s += children_[i].str();
        }
        return s + ")";
    }
    }
    return "?";
}

// --- Objective -------------------------------------------------------------

std::string kindName(ObjectiveKind kind)
{
    switch (kind) {
    case ObjectiveKind::Reach: return "reach";
    case ObjectiveKind::Safe: return "safe";
    case ObjectiveKind::Buchi: return "buchi";
    case ObjectiveKind::CoBuchi: return "cobuchi";
    case ObjectiveKind::ExplMuller: return "explicit-muller";
    case ObjectiveKind::Rabin: return "rabin";
    case ObjectiveKind::Streett: return "streett";
    case ObjectiveKind::Parity: return "parity";
    case ObjectiveKind::Muller: return "muller";
    case ObjectiveKind::BooleanBuchi: return "boolean-buchi";
    case ObjectiveKind::GenReach: return "gen-reach";
    case ObjectiveKind::GenBuchi: return "gen-buchi";
    case ObjectiveKind::UIReach: return "ui-reach";
    case ObjectiveKind::UISafe: return "ui-safe";
    case ObjectiveKind::UIBuchi: return "ui-buchi";
    case ObjectiveKind::UICoBuchi: return "ui-cobuchi";
    }
    return "?";
}

bool isOccurrenceKind(ObjectiveKind kind)
{
    switch (kind) {
    case ObjectiveKind::Reach:
    case ObjectiveKind::Safe:
    case ObjectiveKind::GenReach:
    case ObjectiveKind::UIReach:
    case ObjectiveKind::UISafe: return true;
    default: return false;
    }
}

namespace {

Objective single(ObjectiveKind kind, VertexSet u)
{
    Objective o;
    o.kind = kind;
    o.sets.push_back(std::move(u));
    return o;
}

Objective multi(ObjectiveKind kind, std::vector<VertexSet> us)
{
    Objective o;
    o.kind = kind;
    o.sets = std::move(us);
    return o;
}

std::vector<int> sortedUnique(std::vector<int> v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<int> distinctColors(const std::vector<int>& coloring)
{
    return sortedUnique(coloring);
}

std::vector<VertexSet> canonicalFamily(std::vector<VertexSet> family)
{
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    return family;
}

void collectVariables(const Formula& f, std::set<int>& out)
{
    if (f.op() == Formula::Op::Literal) out.insert(f.var());
    for (const auto& c : f.children()) collectVariables(c, out);
}

}  // namespace

Objective Objective::reach(VertexSet u) { return single(ObjectiveKind::Reach, std::move(u)); }
Objective Objective::safe(VertexSet u) { return single(ObjectiveKind::Safe, std::move(u)); }
Objective Objective::buchi(VertexSet u) { return single(ObjectiveKind::Buchi, std::move(u)); }
Objective Objective::coBuchi(VertexSet u) { return single(ObjectiveKind::CoBuchi, std::move(u)); }
Objective Objective::genReach(std::vector<VertexSet> us) { return multi(ObjectiveKind::GenReach, std::move(us)); }
Objective Objective::genBuchi(std::vector<VertexSet> us) { return multi(ObjectiveKind::GenBuchi, std::move(us)); }

Objective Objective::explMuller(std::vector<VertexSet> family)
{
    return multi(ObjectiveKind::ExplMuller, canonicalFamily(std::move(family)));
}

Objective Objective::rabin(std::vector<std::pair<VertexSet, VertexSet>> pairs)
{
    Objective o;
    o.kind = ObjectiveKind::Rabin;
    o.pairs = std::move(pairs);
    return o;
}

Objective Objective::streett(std::vector<std::pair<VertexSet, VertexSet>> pairs)
{
    Objective o = rabin(std::move(pairs));
    o.kind = ObjectiveKind::Streett;
    return o;
}

Objective Objective::parity(std::vector<int> coloring)
{
    Objective o;
    o.kind = ObjectiveKind::Parity;
    o.coloring = std::move(coloring);
    return o;
}

Objective Objective::muller(std::vector<int> coloring, std::vector<std::vector<int>> family)
{
    Objective o;
    o.kind = ObjectiveKind::Muller;
    o.coloring = std::move(coloring);
    for (auto& f : family) f = sortedUnique(std::move(f));
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    o.colorFamily = std::move(family);
    return o;
}

Objective Objective::booleanBuchi(const Formula& phi, const std::vector<VertexSet>& atoms)
{
    if (phi.variableCount() > static_cast<int>(atoms.size()))
        throw InvalidInput("boolean buchi: formula uses more variables than target sets");
    std::set<int> used;
    collectVariables(phi, used);
    Objective o;
    o.kind = ObjectiveKind::BooleanBuchi;
    std::vector<int> to(atoms.size(), -1);
    for (int v : used) {
        auto it = std::find(o.sets.begin(), o.sets.end(), atoms[v]);
        if (it == o.sets.end()) {
            to[v] = static_cast<int>(o.sets.size());
            o.sets.push_back(atoms[v]);
        } else {
            to[v] = static_cast<int>(it - o.sets.begin());
        }
    }
    o.formula = phi.mapVariables(to);
    return o;
}

Objective Objective::ui(ObjectiveKind kind, std::vector<std::vector<VertexSet>> grid)
{
    if (kind != ObjectiveKind::UIReach && kind != ObjectiveKind::UISafe && kind != ObjectiveKind::UIBuchi &&
        kind != ObjectiveKind::UICoBuchi)
        throw InvalidInput("ui: not a union-intersection kind");
    Objective o;
    o.kind = kind;
    o.grid = std::move(grid);
    return o;
}

void checkObjective(const Arena& arena, const Objective& obj)
{
    const auto n = static_cast<std::size_t>(arena.size());
    auto fits = [&](const VertexSet& s) {
        if (s.size() != n) throw InvalidInput(kindName(obj.kind) + ": target set does not match the arena");
    };
    for (const auto& s : obj.sets) fits(s);
    for (const auto& [e, f] : obj.pairs) {
        fits(e);
        fits(f);
    }
    for (const auto& row : obj.grid)
        for (const auto& s : row) fits(s);
    switch (obj.kind) {
    case ObjectiveKind::Reach:
    case ObjectiveKind::Safe:
    case ObjectiveKind::Buchi:
    case ObjectiveKind::CoBuchi:
        if (obj.sets.size() != 1) throw InvalidInput(kindName(obj.kind) + ": expects exactly one target set");
        break;
    case ObjectiveKind::Parity:
    case ObjectiveKind::Muller:
        if (obj.coloring.size() != n) throw InvalidInput(kindName(obj.kind) + ": colouring is not total");
        if (obj.kind == ObjectiveKind::Parity &&
            std::any_of(obj.coloring.begin(), obj.coloring.end(), [](int c) { return c < 0; }))
            throw InvalidInput("parity: negative colour");
        break;
    case ObjectiveKind::BooleanBuchi:
        if (obj.formula.variableCount() > static_cast<int>(obj.sets.size()))
            throw InvalidInput("boolean buchi: formula uses more variables than target sets");
        break;
    default: break;
    }
}

bool satisfies(const Objective& obj, const VertexSet& occ, const VertexSet& inf)
{
    auto meets = [](const VertexSet& a, const VertexSet& b) { return a.intersects(b); };
    auto within = [](const VertexSet& a, const VertexSet& b) { return a.is_subset_of(b); };
    auto uiHolds = [&](const VertexSet& play, auto test) {
        return std::any_of(obj.grid.begin(), obj.grid.end(), [&](const std::vector<VertexSet>& row) {
            return std::all_of(row.begin(), row.end(), [&](const VertexSet& u) { return test(play, u); });
        });
    };
    switch (obj.kind) {
    case ObjectiveKind::Reach: return meets(occ, obj.sets[0]);
    case ObjectiveKind::Safe: return within(occ, obj.sets[0]);
    case ObjectiveKind::Buchi: return meets(inf, obj.sets[0]);
    case ObjectiveKind::CoBuchi: return within(inf, obj.sets[0]);
    case ObjectiveKind::GenReach:
        return std::all_of(obj.sets.begin(), obj.sets.end(), [&](const VertexSet& u) { return meets(occ, u); });
    case ObjectiveKind::GenBuchi:
        return std::all_of(obj.sets.begin(), obj.sets.end(), [&](const VertexSet& u) { return meets(inf, u); });
    case ObjectiveKind::ExplMuller: return std::find(obj.sets.begin(), obj.sets.end(), inf) != obj.sets.end();
    case ObjectiveKind::Rabin:
        return std::any_of(obj.pairs.begin(), obj.pairs.end(),
                           [&](const auto& p) { return !meets(inf, p.first) && meets(inf, p.second); });
    case ObjectiveKind::Streett:
        return std::all_of(obj.pairs.begin(), obj.pairs.end(),
                           [&](const auto& p) { return meets(inf, p.first) || !meets(inf, p.second); });
    case ObjectiveKind::Parity: {
        int least = -1;
        for (auto v = inf.find_first(); v != VertexSet::npos; v = inf.find_next(v))
            if (least < 0 || obj.coloring[v] < least) least = obj.coloring[v];
        return least >= 0 && least % 2 == 0;
    }
    case ObjectiveKind::Muller: {
        std::vector<int> seen;
        for (auto v = inf.find_first(); v != VertexSet::npos; v = inf.find_next(v)) seen.push_back(obj.coloring[v]);
        seen = sortedUnique(std::move(seen));
        return std::binary_search(obj.colorFamily.begin(), obj.colorFamily.end(), seen);
    }
    case ObjectiveKind::BooleanBuchi: return obj.formula.eval(assignmentOf(obj, inf));
    case ObjectiveKind::UIReach: return uiHolds(occ, meets);
    case ObjectiveKind::UISafe: return uiHolds(occ, within);
    case ObjectiveKind::UIBuchi: return uiHolds(inf, meets);
    case ObjectiveKind::UICoBuchi: return uiHolds(inf, within);
    }
    return false;
}

bool satisfies(const Arena& arena, const Objective& obj, const Lasso& lasso)
{
    checkLasso(arena, lasso);
    return satisfies(obj, occ(arena, lasso), inf(arena, lasso));
}

void checkHomogeneous(const std::vector<Objective>& objs)
{
    if (objs.empty()) throw InvalidInput("at least one objective is required");
    for (const auto& o : objs) {
        if (o.kind != objs.front().kind)
            throw InvalidInput("objectives are not homogeneous: " + kindName(objs.front().kind) + " and " +
                               kindName(o.kind));
    }
    if (static_cast<int>(objs.size()) > PayoffVector::maxSize) throw InvalidInput("too many objectives");
}

PayoffVector payoff(const std::vector<Objective>& objs, const VertexSet& occ, const VertexSet& inf)
{
    checkHomogeneous(objs);
    const int n = static_cast<int>(objs.size());
    PayoffVector p = PayoffVector::zeros(n);
    for (int i = 0; i < n; ++i)
        if (satisfies(objs[i], occ, inf)) p = p.with(i, true);
    return p;
}

PayoffVector payoff(const Arena& arena, const std::vector<Objective>& objs, const Lasso& lasso)
{
    checkLasso(arena, lasso);
    return payoff(objs, occ(arena, lasso), inf(arena, lasso));
}

std::uint64_t assignmentOf(const Objective& booleanBuchi, const VertexSet& inf)
{
    std::uint64_t a = 0;
    for (std::size_t i = 0; i < booleanBuchi.sets.size() && i < 64; ++i)
        if (inf.intersects(booleanBuchi.sets[i])) a |= 1ULL << i;
    return a;
}

namespace {

// Nonempty subsets of {0..k-1} as bitmasks, excluding `drop`.
std::vector<std::uint32_t> complementMasks(int k, const std::set<std::uint32_t>& drop)
{
    std::vector<std::uint32_t> out;
    for (std::uint32_t m = 1; m < (1U << k); ++m)
        if (!drop.count(m)) out.push_back(m);
    return out;
}

}  // namespace

Objective complement(const Objective& obj)
{
    switch (obj.kind) {
    case ObjectiveKind::Reach: return Objective::safe(~obj.sets[0]);
    case ObjectiveKind::Safe: return Objective::reach(~obj.sets[0]);
    case ObjectiveKind::Buchi: return Objective::coBuchi(~obj.sets[0]);
    case ObjectiveKind::CoBuchi: return Objective::buchi(~obj.sets[0]);
    case ObjectiveKind::Rabin: return Objective::streett(obj.pairs);
    case ObjectiveKind::Streett: return Objective::rabin(obj.pairs);
    case ObjectiveKind::Parity: {
        auto p = obj.coloring;
        for (int& c : p) ++c;
        return Objective::parity(std::move(p));
    }
    case ObjectiveKind::Muller: {
        auto colors = distinctColors(obj.coloring);
        const int k = static_cast<int>(colors.size());
        if (k > maxComplementFamilyBits)
            throw ResourceLimit("muller complement: 2^" + std::to_string(k) + " colour sets");
        std::set<std::uint32_t> present;
        for (const auto& f : obj.colorFamily) {
            std::uint32_t m = 0;
            bool realizable = true;
            for (int c : f) {
                auto it = std::lower_bound(colors.begin(), colors.end(), c);
                if (it == colors.end() || *it != c) realizable = false;
                else m |= 1U << (it - colors.begin());
            }
            if (realizable) present.insert(m);
        }
        std::vector<std::vector<int>> family;
        for (auto m : complementMasks(k, present)) {
            std::vector<int> f;
            for (int i = 0; i < k; ++i)
                if ((m >> i) & 1U) f.push_back(colors[i]);
            family.push_back(std::move(f));
        }
        return Objective::muller(obj.coloring, std::move(family));
    }
    case ObjectiveKind::ExplMuller: {
        if (obj.sets.empty()) throw InvalidInput("explicit muller complement: empty family has no arena size");
        const auto n = obj.sets.front().size();
        if (n > static_cast<std::size_t>(maxComplementFamilyBits))
            throw ResourceLimit("explicit muller complement: 2^" + std::to_string(n) + " vertex sets");
        std::set<std::uint32_t> present;
        for (const auto& f : obj.sets) present.insert(static_cast<std::uint32_t>(f.to_ulong()));
        std::vector<VertexSet> family;
        for (auto m : complementMasks(static_cast<int>(n), present)) family.emplace_back(n, m);
        return Objective::explMuller(std::move(family));
    }
    case ObjectiveKind::BooleanBuchi: return Objective::booleanBuchi(obj.formula.negated(), obj.sets);
    case ObjectiveKind::GenReach: {
        std::vector<std::vector<VertexSet>> rows;
        for (const auto& u : obj.sets) rows.push_back({~u});
        return Objective::ui(ObjectiveKind::UISafe, std::move(rows));
    }
    case ObjectiveKind::GenBuchi: {
        std::vector<std::vector<VertexSet>> rows;
        for (const auto& u : obj.sets) rows.push_back({~u});
        return Objective::ui(ObjectiveKind::UICoBuchi, std::move(rows));
    }
    case ObjectiveKind::UIBuchi:
    case ObjectiveKind::UICoBuchi: return complement(toBooleanBuchi(obj));
    default: break;
    }
    throw InvalidInput("complement is not supported for " + kindName(obj.kind));
}

Objective toBooleanBuchi(const Objective& obj)
{
    using F = Formula;
    std::vector<VertexSet> atoms;
    auto atom = [&](const VertexSet& s) {
        atoms.push_back(s);
        return static_cast<int>(atoms.size()) - 1;
    };
    F phi;
    switch (obj.kind) {
    case ObjectiveKind::BooleanBuchi: return obj;
    case ObjectiveKind::Buchi: phi = F::literal(atom(obj.sets[0])); break;
    case ObjectiveKind::CoBuchi: phi = F::literal(atom(~obj.sets[0]), false); break;
    case ObjectiveKind::GenBuchi: {
        std::vector<F> parts;
        for (const auto& u : obj.sets) parts.push_back(F::literal(atom(u)));
        phi = F::conj(std::move(parts));
        break;
    }
    case ObjectiveKind::UIBuchi:
    case ObjectiveKind::UICoBuchi: {
        const bool co = obj.kind == ObjectiveKind::UICoBuchi;
        std::vector<F> rows;
        for (const auto& row : obj.grid) {
            std::vector<F> cols;
            for (const auto& u : row) cols.push_back(co ? F::literal(atom(~u), false) : F::literal(atom(u)));
            rows.push_back(F::conj(std::move(cols)));
        }
        phi = F::disj(std::move(rows));
        break;
    }
    case ObjectiveKind::Rabin:
    case ObjectiveKind::Streett: {
        const bool rabin = obj.kind == ObjectiveKind::Rabin;
        std::vector<F> parts;
        for (const auto& [e, f] : obj.pairs) {
            F xe = F::literal(atom(e), !rabin);
            F xf = F::literal(atom(f), rabin);
            parts.push_back(rabin ? F::conj({xe, xf}) : F::disj({xe, xf}));
        }
        phi = rabin ? F::disj(std::move(parts)) : F::conj(std::move(parts));
        break;
    }
    case ObjectiveKind::Parity:
    case ObjectiveKind::Muller: {
        auto colors = distinctColors(obj.coloring);
        const auto n = obj.coloring.size();
        for (int c : colors) {
            VertexSet s(n);
            for (std::size_t v = 0; v < n; ++v)
                if (obj.coloring[v] == c) s.set(v);
            atom(s);
        }
        const int k = static_cast<int>(colors.size());
        std::vector<F> parts;
        if (obj.kind == ObjectiveKind::Parity) {
            // an even colour is seen infinitely often and no smaller one is
            for (int i = 0; i < k; ++i) {
                if (colors[i] % 2 != 0) continue;
                std::vector<F> lits{F::literal(i)};
                for (int j = 0; j < i; ++j) lits.push_back(F::literal(j, false));
                parts.push_back(F::conj(std::move(lits)));
            }
        } else {
            for (const auto& f : obj.colorFamily) {
                std::vector<F> lits;
                bool realizable = true;
                for (int c : f) realizable = realizable && std::binary_search(colors.begin(), colors.end(), c);
                if (!realizable || f.empty()) continue;
                for (int i = 0; i < k; ++i)
                    lits.push_back(F::literal(i, std::binary_search(f.begin(), f.end(), colors[i])));
                parts.push_back(F::conj(std::move(lits)));
            }
        }
        phi = F::disj(std::move(parts));
        break;
    }
    case ObjectiveKind::ExplMuller: {
        if (obj.sets.empty()) return Objective::booleanBuchi(F::constant(false), {});
        const auto n = obj.sets.front().size();
        for (std::size_t v = 0; v < n; ++v) {
            VertexSet s(n);
            s.set(v);
            atom(s);
        }
        std::vector<F> parts;
        for (const auto& f : obj.sets) {
            if (f.none()) continue;
            std::vector<F> lits;
            for (std::size_t v = 0; v < n; ++v) lits.push_back(F::literal(static_cast<int>(v), f.test(v)));
            parts.push_back(F::conj(std::move(lits)));
        }
        phi = F::disj(std::move(parts));
        break;
    }
    default: throw InvalidInput(kindName(obj.kind) + " is not a condition on Inf and has no Boolean Buchi form");
    }
    return Objective::booleanBuchi(phi, atoms);
}

Objective booleanBuchiUnionIntersection(const std::vector<std::vector<Objective>>& parts)
{
    std::vector<VertexSet> atoms;
    std::vector<Formula> rows;
    for (const auto& row : parts) {
        std::vector<Formula> cols;
        for (const auto& p : row) {
            Objective b = toBooleanBuchi(p);
            std::vector<int> shift(b.sets.size());
            for (std::size_t i = 0; i < b.sets.size(); ++i) {
                shift[i] = static_cast<int>(atoms.size());
                atoms.push_back(b.sets[i]);
            }
            cols.push_back(b.formula.mapVariables(shift));
        }
        rows.push_back(Formula::conj(std::move(cols)));
    }
    return Objective::booleanBuchi(Formula::disj(std::move(rows)), atoms);
}

Objective explMullerUnionIntersection(const std::vector<std::vector<Objective>>& parts)
{
    std::vector<VertexSet> family;
    for (const auto& row : parts) {
        if (row.empty()) throw InvalidInput("explicit muller intersection of no objectives");
        std::vector<VertexSet> common = canonicalFamily(row.front().sets);
        for (std::size_t j = 1; j < row.size(); ++j) {
            auto other = canonicalFamily(row[j].sets);
            std::vector<VertexSet> both;
            std::set_intersection(common.begin(), common.end(), other.begin(), other.end(), std::back_inserter(both));
            common = std::move(both);
        }
        family.insert(family.end(), common.begin(), common.end());
    }
    return Objective::explMuller(std::move(family));
}

}  // namespace ordgames
