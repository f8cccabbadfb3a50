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

#include "ordgames/io.hpp"

namespace ordgames {

struct GenOptions {
    ObjectiveKind kind = ObjectiveKind::Buchi;
    int objectives = 2;
    int vertices = 6;
    std::uint64_t seed = 1;
    double edgeProbability = 0.35;
    Preorder preorder = Preorder::lexicographic();
    int colours = 3;
    int pairs = 2;
    int familySize = 2;
};

/**
 * Random ordered game with a random threshold and initial vertex v0. The output
 * depends only on the options: the generator draws from mt19937_64 by plain
 * modulo so the same seed gives the same file on every platform. Vertices left
 * without successors get a self-loop.
 */
GameFile generateGame(const GenOptions& options);

}  // namespace ordgames
