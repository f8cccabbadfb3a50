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

#include "ordgames/generate.hpp"

#include <random>

namespace ordgames {

namespace {

class Draw {
public:
    explicit Draw(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t below(std::uint64_t k) { return rng_() % k; }
    bool chance(double p) { return below(1'000'000) < static_cast<std::uint64_t>(p * 1'000'000); }

    VertexSet subset(int n, bool nonEmpty)
    {
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
            if (below(3) == 0) s.set(v);
        if (nonEmpty && s.none()) s.set(below(n));
        return s;
    }

private:
    std::mt19937_64 rng_;
};

Objective randomObjective(Draw& draw, const GenOptions& o)
{
    const int n = o.vertices;
    switch (o.kind) {
    case ObjectiveKind::Reach: return Objective::reach(draw.subset(n, false));
    case ObjectiveKind::Safe: return Objective::safe(draw.subset(n, false));
    case ObjectiveKind::Buchi: return Objective::buchi(draw.subset(n, false));
    case ObjectiveKind::CoBuchi: return Objective::coBuchi(draw.subset(n, false));
    case ObjectiveKind::ExplMuller: {
        std::vector<VertexSet> family;
        for (int i = 0; i < o.familySize; ++i) family.push_back(draw.subset(n, true));
        return Objective::explMuller(std::move(family));
    }
    case ObjectiveKind::Rabin:
    case ObjectiveKind::Streett: {
        std::vector<std::pair<VertexSet, VertexSet>> pairs;
        for (int i = 0; i < o.pairs; ++i) {
            VertexSet e = draw.subset(n, false);
            pairs.emplace_back(e, draw.subset(n, false));
        }
        return o.kind == ObjectiveKind::Rabin ? Objective::rabin(std::move(pairs)) : Objective::streett(std::move(pairs));
    }
    case ObjectiveKind::Parity:
    case ObjectiveKind::Muller: {
        std::vector<int> colouring(n);
        for (auto& c : colouring) c = static_cast<int>(draw.below(o.colours));
        if (o.kind == ObjectiveKind::Parity) return Objective::parity(std::move(colouring));
        std::vector<std::vector<int>> family;
        for (int i = 0; i < o.familySize; ++i) {
            std::vector<int> f;
            for (int c = 0; c < o.colours; ++c)
                if (draw.below(2) == 0) f.push_back(c);
            if (f.empty()) f.push_back(static_cast<int>(draw.below(o.colours)));
            family.push_back(std::move(f));
        }
        return Objective::muller(std::move(colouring), std::move(family));
    }
    default: throw InvalidInput("cannot generate " + kindName(o.kind) + " objectives");
    }
}

}  // namespace

GameFile generateGame(const GenOptions& o)
{
    if (o.vertices < 1) throw InvalidInput("a game needs at least one vertex");
    if (o.objectives < 1 || o.objectives > PayoffVector::maxSize) throw InvalidInput("objective count out of range");
    if (o.colours < 1 || o.pairs < 1 || o.familySize < 1) throw InvalidInput("colours, pairs and family size must be positive");
    Draw draw(o.seed);
    std::vector<Player> owners;
    std::vector<std::string> names;
    for (int v = 0; v < o.vertices; ++v) {
        owners.push_back(draw.below(2) == 0 ? Player::P1 : Player::P2);
        names.push_back("v" + std::to_string(v));
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int u = 0; u < o.vertices; ++u) {
        bool any = false;
        for (int v = 0; v < o.vertices; ++v) {
            if (draw.chance(o.edgeProbability)) {
                edges.emplace_back(u, v);
                any = true;
            }
        }
        if (!any) edges.emplace_back(u, u);
    }
    GameFile file;
    file.game.arena = Arena(owners, edges, names);
    for (int i = 0; i < o.objectives; ++i) file.game.objectives.push_back(randomObjective(draw, o));
    file.game.preorder = o.preorder;
    file.threshold = PayoffVector(o.objectives, draw.below(std::uint64_t{1} << o.objectives));
    file.initial = 0;
    checkOrderedGame(file.game);
    return file;
}

}  // namespace ordgames
