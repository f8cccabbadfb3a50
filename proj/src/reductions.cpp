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

#include "ordgames/reductions.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace ordgames {

void checkOrderedGame(const OrderedGame& game)
{
    if (auto bad = validate(game.arena)) throw InvalidInput(*bad);
    checkHomogeneous(game.objectives);
    switch (game.objectives.front().kind) {
    case ObjectiveKind::Reach:
    case ObjectiveKind::Safe:
    case ObjectiveKind::Buchi:
    case ObjectiveKind::CoBuchi:
    case ObjectiveKind::ExplMuller:
    case ObjectiveKind::Rabin:
    case ObjectiveKind::Streett:
    case ObjectiveKind::Parity:
    case ObjectiveKind::Muller: break;
    default: throw InvalidInput(kindName(game.objectives.front().kind) + " objectives cannot be ordered");
    }
    for (const auto& o : game.objectives) checkObjective(game.arena, o);
    if (game.preorder.kind() == Preorder::Kind::Table && game.preorder.tableSize() != game.size())
        throw InvalidInput("table preorder is defined for " + std::to_string(game.preorder.tableSize()) +
                           " objectives, the game has " + std::to_string(game.size()));
}

// --- products --------------------------------------------------------------

Vertex ReducedGame::find(Vertex v, std::uint64_t key) const
{
    if (!isProduct()) return v;
    auto it = index.find({v, key});
    return it == index.end() ? -1 : it->second;
}

ReducedGame identityReduction(const Arena& arena, Objective objective, std::string route)
{
    ReducedGame r;
    r.arena = arena;
    r.objective = std::move(objective);
    r.route = std::move(route);
    for (Vertex v = 0; v < arena.size(); ++v) {
        r.base.push_back(v);
        r.entry.push_back(v);
    }
    r.state.assign(arena.size(), 0);
    return r;
}

ReducedGame productWith(const Arena& arena, const Monitor& monitor, const Limits& limits)
{
    ReducedGame r;
    r.monitor = monitor;
    auto intern = [&](Vertex v, std::uint64_t key) {
        auto [it, fresh] = r.index.emplace(std::make_pair(v, key), static_cast<Vertex>(r.base.size()));
        if (fresh) {
            if (r.base.size() >= limits.maxProductStates)
                throw ResourceLimit("product exceeds " + std::to_string(limits.maxProductStates) + " states");
            r.base.push_back(v);
            r.state.push_back(key);
        }
        return it->second;
    };
    for (Vertex v = 0; v < arena.size(); ++v) r.entry.push_back(intern(v, monitor.step(monitor.initial, v)));
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t p = 0; p < r.base.size(); ++p) {
        const Vertex v = r.base[p];
        const std::uint64_t key = r.state[p];
        for (Vertex w : arena.successors(v))
            edges.emplace_back(static_cast<Vertex>(p), intern(w, monitor.step(key, w)));
    }
    std::vector<Player> owners;
    std::vector<std::string> names;
    for (std::size_t p = 0; p < r.base.size(); ++p) {
        owners.push_back(arena.owner(r.base[p]));
        names.push_back(arena.name(r.base[p]) + "#" + std::to_string(r.state[p]));
    }
    r.arena = Arena(std::move(owners), edges, std::move(names));
    return r;
}

MooreStrategy foldStrategy(const ReducedGame& reduced, const Arena& original, const MooreStrategy& inner)
{
    if (!reduced.isProduct()) return inner;
    const int n = original.size();
    std::map<std::pair<std::uint64_t, int>, int> ids;
    std::vector<std::pair<std::uint64_t, int>> states;
    auto intern = [&](std::uint64_t key, int m) {
        auto [it, fresh] = ids.emplace(std::make_pair(key, m), static_cast<int>(states.size()));
        if (fresh) states.emplace_back(key, m);
        return it->second;
    };
    intern(reduced.monitor.initial, inner.initial());
    std::vector<std::vector<int>> update;
    std::vector<std::vector<Vertex>> next;
    for (std::size_t i = 0; i < states.size(); ++i) {
        std::vector<int> up(n, -1);
        std::vector<Vertex> nx(n, -1);
        for (Vertex v = 0; v < n; ++v) {
            const auto [key, m] = states[i];
            const std::uint64_t key2 = reduced.monitor.step(key, v);
            const Vertex p = reduced.find(v, key2);
            if (p < 0) continue;
            const Vertex choice = inner.next(m, p);
            if (original.owner(v) == inner.owner() && choice >= 0) nx[v] = reduced.base[choice];
            const int m2 = inner.update(m, p);
            if (m2 >= 0) up[v] = intern(key2, m2);
        }
        update.push_back(std::move(up));
        next.push_back(std::move(nx));
    }
    MooreStrategy out(inner.owner(), n, static_cast<int>(states.size()));
    for (std::size_t i = 0; i < states.size(); ++i) {
        for (Vertex v = 0; v < n; ++v) {
            out.setUpdate(static_cast<int>(i), v, update[i][v]);
            out.setNext(static_cast<int>(i), v, next[i][v]);
        }
    }
    return out;
}

// --- antichain reduction ---------------------------------------------------

namespace {

std::uint64_t objectiveMask(const PayoffVector& nu)
{
    std::uint64_t m = 0;
    for (int i : nu.oneIndices()) m |= 1ULL << i;
    return m;
}

std::vector<std::vector<Objective>> rowsOf(const std::vector<Objective>& objectives, const Antichain& antichain)
{
    std::vector<std::vector<Objective>> rows;
    for (const auto& nu : antichain) {
        std::vector<Objective> row;
        for (int i : nu.oneIndices()) row.push_back(objectives[i]);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::vector<VertexSet>> gridOf(const std::vector<Objective>& objectives, const Antichain& antichain,
                                           bool complemented = false)
{
    std::vector<std::vector<VertexSet>> grid;
    for (const auto& row : rowsOf(objectives, antichain)) {
        std::vector<VertexSet> sets;
        for (const auto& o : row) sets.push_back(complemented ? ~o.sets[0] : o.sets[0]);
        grid.push_back(std::move(sets));
    }
    return grid;
}

Objective genBuchiOfClauses(const std::vector<Objective>& objectives, const std::vector<std::uint64_t>& clauses,
                            std::size_t vertices)
{
    std::vector<VertexSet> targets;
    for (auto clause : clauses) {
        VertexSet u(vertices);
        for (std::size_t i = 0; i < objectives.size(); ++i)
            if ((clause >> i) & 1U) u |= objectives[i].sets[0];
        targets.push_back(std::move(u));
    }
    return Objective::genBuchi(std::move(targets));
}

}  // namespace

std::vector<std::uint64_t> distributeCnf(const Antichain& antichain, bool subsume, std::size_t cap)
{
    std::set<std::uint64_t> clauses{0};
    for (const auto& nu : antichain) {
        std::set<std::uint64_t> next;
        for (auto c : clauses)
            for (int i : nu.oneIndices()) next.insert(c | (1ULL << i));
        if (subsume) {
            std::set<std::uint64_t> kept;
            for (auto c : next) {
                bool covered = std::any_of(next.begin(), next.end(),
                                           [&](std::uint64_t d) { return d != c && (d & ~c) == 0; });
                if (!covered) kept.insert(c);
            }
            next = std::move(kept);
        }
        if (next.size() > cap)
            throw ResourceLimit("CNF has more than " + std::to_string(cap) + " clauses");
        clauses = std::move(next);
    }
    return {clauses.begin(), clauses.end()};
}

ReducedGame reduceUpperSet(const Arena& arena, const std::vector<Objective>& objectives, const Antichain& antichain,
                           BuchiRoute route, const Limits& limits)
{
    checkHomogeneous(objectives);
    const auto n = static_cast<std::size_t>(arena.size());
    for (const auto& nu : antichain)
        if (nu.size() != static_cast<int>(objectives.size())) throw InvalidInput("threshold length differs from n");
    if (antichain.empty()) return identityReduction(arena, Objective::reach(arena.emptySet()), "empty");
    if (std::any_of(antichain.begin(), antichain.end(), [](const PayoffVector& nu) { return nu.isZero(); }))
        return identityReduction(arena, Objective::safe(arena.fullSet()), "trivial");

    const std::string width = "[" + std::to_string(antichain.size()) + " rows]";
    switch (objectives.front().kind) {
    case ObjectiveKind::Reach:
        return identityReduction(arena, Objective::ui(ObjectiveKind::UIReach, gridOf(objectives, antichain)),
                                 "ui-reach" + width);
    case ObjectiveKind::Safe:
        return identityReduction(arena, Objective::ui(ObjectiveKind::UISafe, gridOf(objectives, antichain)),
                                 "ui-safe" + width);
    case ObjectiveKind::CoBuchi:
        return identityReduction(arena, Objective::ui(ObjectiveKind::UICoBuchi, gridOf(objectives, antichain)),
                                 "ui-cobuchi" + width);
    case ObjectiveKind::Buchi: {
        auto clausesRoute = [&](bool subsume, std::size_t cap, const char* name) {
            auto clauses = distributeCnf(antichain, subsume, cap);
            return identityReduction(arena, genBuchiOfClauses(objectives, clauses, n),
                                     std::string(name) + "[" + std::to_string(clauses.size()) + " clauses]");
        };
        switch (route) {
        case BuchiRoute::UIExpand: return clausesRoute(false, limits.maxProductStates, "ui-expand");
        case BuchiRoute::BooleanBuchi:
            return identityReduction(arena, Objective::ui(ObjectiveKind::UIBuchi, gridOf(objectives, antichain)),
                                     "ui-buchi" + width);
        case BuchiRoute::LexCnf:
            throw InvalidInput("the lexicographic CNF route needs a lexicographic threshold");
        default:
            try {
                return clausesRoute(true, static_cast<std::size_t>(limits.maxCnfClauses), "generic-cnf");
            } catch (const ResourceLimit&) {
                return identityReduction(arena,
                                         Objective::ui(ObjectiveKind::UIBuchi, gridOf(objectives, antichain)),
                                         "ui-buchi" + width + " (CNF over cap)");
            }
        }
    }
    case ObjectiveKind::ExplMuller:
        return identityReduction(arena, explMullerUnionIntersection(rowsOf(objectives, antichain)),
                                 "explicit-muller" + width);
    case ObjectiveKind::Parity:
    case ObjectiveKind::Rabin:
    case ObjectiveKind::Streett:
    case ObjectiveKind::Muller:
        return identityReduction(arena, booleanBuchiUnionIntersection(rowsOf(objectives, antichain)),
                                 "boolean-buchi" + width);
    default: break;
    }
    throw InvalidInput(kindName(objectives.front().kind) + " objectives cannot be ordered");
}

ReducedGame thresholdToSingleObjective(const OrderedGame& game, const PayoffVector& mu, BuchiRoute route,
                                       const Limits& limits)
{
    if (mu.size() != game.size())
        throw InvalidInput("threshold " + mu.str() + " has length " + std::to_string(mu.size()) + ", expected " +
                           std::to_string(game.size()));
    const bool buchi = game.objectives.front().kind == ObjectiveKind::Buchi;
    const bool lex = game.preorder.isLexicographic();
    if (buchi && (route == BuchiRoute::LexCnf || (route == BuchiRoute::Auto && lex))) {
        if (!lex) throw InvalidInput("the lexicographic CNF route needs the lexicographic preorder");
        if (mu.isZero()) return identityReduction(game.arena, Objective::safe(game.arena.fullSet()), "trivial");
        std::vector<std::uint64_t> clauses;
        for (const auto& nu : lexCnfThresholds(mu)) clauses.push_back(objectiveMask(nu));
        return identityReduction(game.arena,
                                 genBuchiOfClauses(game.objectives, clauses, static_cast<std::size_t>(game.arena.size())),
                                 "lex-cnf[" + std::to_string(clauses.size()) + " clauses]");
    }
    return reduceUpperSet(game.arena, game.objectives, minimalThresholds(game.preorder, mu, limits), route, limits);
}

// --- occurrence product ----------------------------------------------------

ReducedGame uiOccurrenceProduct(const Arena& arena, const Objective& obj, const Limits& limits)
{
    std::vector<std::vector<VertexSet>> grid;
    bool safety = false;
    switch (obj.kind) {
    case ObjectiveKind::GenReach: grid.push_back(obj.sets); break;
    case ObjectiveKind::UIReach: grid = obj.grid; break;
    case ObjectiveKind::UISafe:
        safety = true;
        // track visits to the complement of each safe set
        for (const auto& row : obj.grid) {
            std::vector<VertexSet> bad;
            for (const auto& u : row) bad.push_back(~u);
            grid.push_back(std::move(bad));
        }
        break;
    default: throw InvalidInput("occurrence product expects a gen-reach, ui-reach or ui-safe objective");
    }

    std::vector<VertexSet> distinct;
    std::vector<std::uint64_t> rowMask;
    for (const auto& row : grid) {
        std::uint64_t m = 0;
        for (const auto& u : row) {
            auto it = std::find(distinct.begin(), distinct.end(), u);
            if (it == distinct.end()) {
                distinct.push_back(u);
                it = distinct.end() - 1;
            }
            m |= 1ULL << (it - distinct.begin());
            if (distinct.size() > static_cast<std::size_t>(std::min(limits.maxMonitorBits, 63)))
                throw ResourceLimit("occurrence product needs 2^" + std::to_string(distinct.size()) +
                                    " monitor states, over the bound 2^" + std::to_string(limits.maxMonitorBits));
        }
        rowMask.push_back(m);
    }
    std::vector<std::uint64_t> membership(arena.size(), 0);
    for (std::size_t k = 0; k < distinct.size(); ++k)
        for (auto v = distinct[k].find_first(); v != VertexSet::npos; v = distinct[k].find_next(v))
            membership[v] |= 1ULL << k;

    Monitor monitor;
    monitor.initial = 0;
    monitor.step = [membership](std::uint64_t bits, Vertex v) { return bits | membership[v]; };
    ReducedGame r = productWith(arena, monitor, limits);

    VertexSet target(r.arena.size());
    for (std::size_t p = 0; p < r.base.size(); ++p) {
        const std::uint64_t bits = r.state[p];
        bool hit = std::any_of(rowMask.begin(), rowMask.end(), [&](std::uint64_t m) {
            return safety ? (bits & m) == 0 : (bits & m) == m;
        });
        if (hit) target.set(p);
    }
    r.objective = safety ? Objective::safe(target) : Objective::reach(target);
    r.route = "occurrence-product[" + std::to_string(distinct.size()) + " bits, " + std::to_string(r.base.size()) +
              " states]";
    return r;
}

// --- Boolean Buchi to Muller to parity -------------------------------------

MullerReduction booleanBuchiToMuller(const Arena& arena, const Objective& bb, const Limits& limits)
{
    if (bb.kind != ObjectiveKind::BooleanBuchi) throw InvalidInput("expected a boolean buchi objective");
    const int m = static_cast<int>(bb.sets.size());
    if (m > std::min(limits.maxFormulaVariables, 63))
        throw ResourceLimit("boolean buchi with " + std::to_string(m) + " variables has 2^" + std::to_string(m) +
                            " colours, over the bound 2^" + std::to_string(limits.maxFormulaVariables));
    std::vector<std::uint64_t> signature(arena.size(), 0);
    for (int i = 0; i < m; ++i)
        for (auto v = bb.sets[i].find_first(); v != VertexSet::npos; v = bb.sets[i].find_next(v))
            signature[v] |= 1ULL << i;

    MullerReduction out;
    out.colourAtoms = signature;
    std::sort(out.colourAtoms.begin(), out.colourAtoms.end());
    out.colourAtoms.erase(std::unique(out.colourAtoms.begin(), out.colourAtoms.end()), out.colourAtoms.end());
    const int c = static_cast<int>(out.colourAtoms.size());
    if (c > limits.maxEnumerationBits)
        throw ResourceLimit("muller family over " + std::to_string(c) + " realized colours needs 2^" +
                            std::to_string(c) + " sets, over the bound 2^" + std::to_string(limits.maxEnumerationBits));

    std::vector<int> coloring(arena.size());
    for (Vertex v = 0; v < arena.size(); ++v)
        coloring[v] = static_cast<int>(std::lower_bound(out.colourAtoms.begin(), out.colourAtoms.end(), signature[v]) -
                                       out.colourAtoms.begin());
    std::vector<std::vector<int>> family;
    for (std::uint64_t s = 1; s < (1ULL << c); ++s) {
        std::uint64_t assignment = 0;
        std::vector<int> colours;
        for (int k = 0; k < c; ++k) {
            if ((s >> k) & 1U) {
                assignment |= out.colourAtoms[k];
                colours.push_back(k);
            }
        }
        if (bb.formula.eval(assignment)) family.push_back(std::move(colours));
    }
    out.muller = Objective::muller(std::move(coloring), std::move(family));
    return out;
}

ReducedGame mullerToParityLAR(const Arena& arena, const Objective& muller, const Limits& limits)
{
    if (muller.kind != ObjectiveKind::Muller) throw InvalidInput("expected a muller objective");
    std::vector<int> colours = muller.coloring;
    std::sort(colours.begin(), colours.end());
    colours.erase(std::unique(colours.begin(), colours.end()), colours.end());
    const int c = static_cast<int>(colours.size());
    if (c > std::min(limits.maxLarColors, 15)) {
        throw ResourceLimit("latest appearance record over " + std::to_string(c) + " colours has " +
                            std::to_string(c) + "! permutations, over the bound of " +
                            std::to_string(limits.maxLarColors) + " colours");
    }
    std::vector<int> dense(arena.size());
    for (Vertex v = 0; v < arena.size(); ++v)
        dense[v] = static_cast<int>(std::lower_bound(colours.begin(), colours.end(), muller.coloring[v]) - colours.begin());
    std::set<std::uint32_t> family;
    for (const auto& f : muller.colorFamily) {
        std::uint32_t m = 0;
        bool realizable = true;
        for (int col : f) {
            auto it = std::lower_bound(colours.begin(), colours.end(), col);
            if (it == colours.end() || *it != col) realizable = false;
            else m |= 1U << (it - colours.begin());
        }
        if (realizable && m != 0) family.insert(m);
    }

    // key: 4 bits per record position (most recent first), hit position in the top 4 bits
    auto at = [](std::uint64_t key, int pos) { return static_cast<int>((key >> (4 * pos)) & 0xF); };
    std::uint64_t initial = 0;
    for (int k = 0; k < c; ++k) initial |= static_cast<std::uint64_t>(k) << (4 * k);

    Monitor monitor;
    monitor.initial = initial;
    monitor.step = [dense, c, at](std::uint64_t key, Vertex v) {
        const int x = dense[v];
        int h = 0;
        while (at(key, h) != x) ++h;
        std::uint64_t out = static_cast<std::uint64_t>(x);
        for (int pos = 0, put = 1; pos < c; ++pos) {
            if (pos == h) continue;
            out |= static_cast<std::uint64_t>(at(key, pos)) << (4 * put++);
        }
        return out | (static_cast<std::uint64_t>(h) << 60);
    };
    ReducedGame r = productWith(arena, monitor, limits);

    std::vector<int> priority(r.base.size());
    for (std::size_t p = 0; p < r.base.size(); ++p) {
        const std::uint64_t key = r.state[p];
        const int h = static_cast<int>(key >> 60);
        std::uint32_t hitSet = 0;
        for (int pos = 0; pos <= h; ++pos) hitSet |= 1U << at(key, pos);
        priority[p] = 2 * (c - 1 - h) + (family.count(hitSet) ? 0 : 1);
    }
    r.objective = Objective::parity(std::move(priority));
    r.route = "lar[" + std::to_string(c) + " colours, " + std::to_string(r.base.size()) + " states]";
    return r;
}

// --- embeddings -------------------------------------------------------------

namespace {

Embedding embed(const Arena& arena, const std::vector<VertexSet>& targets, ObjectiveKind kind, bool swapped)
{
    if (targets.empty()) throw InvalidInput("embedding needs at least one target set");
    Embedding e;
    e.game.arena = swapped ? arena.withSwappedOwners() : arena;
    e.game.preorder = Preorder::lexicographic();
    const int n = static_cast<int>(targets.size());
    for (const auto& u : targets) {
        Objective o;
        o.kind = kind;
        o.sets.push_back(swapped ? ~u : u);
        e.game.objectives.push_back(std::move(o));
    }
    e.mu = swapped ? PayoffVector(n, 1) : PayoffVector::ones(n);
    e.answer = swapped ? Player::P2 : Player::P1;
    return e;
}

}  // namespace

Embedding embedGenReachAsLex(const Arena& arena, const std::vector<VertexSet>& targets)
{
    return embed(arena, targets, ObjectiveKind::Reach, false);
}

Embedding embedGenReachAsLexSafety(const Arena& arena, const std::vector<VertexSet>& targets)
{
    return embed(arena, targets, ObjectiveKind::Safe, true);
}

Embedding embedGenBuchiAsLex(const Arena& arena, const std::vector<VertexSet>& targets)
{
    return embed(arena, targets, ObjectiveKind::Buchi, false);
}

Embedding embedGenBuchiAsLexCoBuchi(const Arena& arena, const std::vector<VertexSet>& targets)
{
    return embed(arena, targets, ObjectiveKind::CoBuchi, true);
}

}  // namespace ordgames
