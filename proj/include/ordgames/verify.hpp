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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ordgames/reductions.hpp"

namespace ordgames {

struct Verdict {
    bool verified = false;
    std::optional<Lasso> counterexample;  // a consistent play with a rejected payoff
    PayoffVector payoff;                  // payoff of the counterexample
    std::string reason;
};

/**
 * Checks that every play from v0 consistent with `strategy` has an accepted
 * payoff. The strategy is fixed into the arena (product with its memory) and
 * the adversary's best response is searched exactly: over the colour sets of
 * strongly connected parts for conditions on Inf, and over the reachable
 * visited-colour states for conditions on Occ. A vertex colour is the set of
 * objective atoms containing it.
 */
Verdict verifyStrategy(const Arena& arena, const std::vector<Objective>& objectives,
                       const std::function<bool(const PayoffVector&)>& accept, Vertex v0,
                       const MooreStrategy& strategy, const Limits& limits = {});

/// A P1 strategy must ensure payoff >= mu; a P2 strategy must avoid it.
Verdict verifyThresholdStrategy(const OrderedGame& game, const PayoffVector& mu, Vertex v0,
                                const MooreStrategy& strategy, const Limits& limits = {});

}  // namespace ordgames
