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

#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ordgames/threshold.hpp"
#include "support.hpp"

using namespace ordgames;
using namespace ordgames::testing;

namespace {

std::string errorOf(const std::string& text)
{
    try {
        parseGame(text);
    } catch (const InvalidInput& e) {
        return e.what();
    }
    return "";
}

std::string shipped(const std::string& name)
{
    return std::string(ORDGAMES_GAMES_DIR) + "/" + name;
}

const char* fig1Text = R"(vertex v0 P2
vertex v1 P1
vertex v2 P1
edge v0 v1
edge v0 v2
edge v1 v1
edge v2 v0
edge v2 v2
preorder lexicographic
objective buchi { v1 }
objective buchi { v2 }
)";

}  // namespace

TEST_CASE("shipped fig1 parses")
{
    GameFile f = readGameFile(shipped("fig1"));
    CHECK(f.game.size() == 2);
    CHECK(f.game.preorder.isLexicographic());
    CHECK(f.game.arena.size() == 3);
    CHECK(f.game.objectives == fig1Game().objectives);
    CHECK(f.threshold == bitsOf("01"));
    CHECK(f.initial == 0);
}

TEST_CASE("shipped games round-trip and solve quickly")
{
    for (const auto& entry : std::filesystem::directory_iterator(ORDGAMES_GAMES_DIR)) {
        INFO(entry.path().string());
        GameFile f = readGameFile(entry.path().string());
        const std::string canonical = emitGame(f);
        CHECK(emitGame(parseGame(canonical)) == canonical);
        auto start = std::chrono::steady_clock::now();
        if (f.threshold && f.initial) solveThreshold(f.game, *f.threshold, *f.initial);
        if (f.initial && f.game.preorder.isLexicographic()) computeLexValue(f.game, *f.initial);
        CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(1));
    }
}

TEST_CASE("statements may come in any order and comments are ignored")
{
    GameFile f = parseGame(R"(
objective buchi { v1 }   # first objective
edge v0 v1
initial v1
vertex v0 P1
vertex v1 P2
edge v1 v1
objective buchi { }
preorder subset
threshold 10
)");
    CHECK(f.game.arena.size() == 2);
    CHECK(f.game.preorder.kind() == Preorder::Kind::Subset);
    CHECK(f.initial == 1);
    CHECK(f.threshold == bitsOf("10"));
    CHECK(f.game.objectives[1] == Objective::buchi(makeSet(2, {})));
}

TEST_CASE("every objective kind round-trips")
{
    for (auto kind : {ObjectiveKind::Reach, ObjectiveKind::Safe, ObjectiveKind::Buchi, ObjectiveKind::CoBuchi,
                      ObjectiveKind::ExplMuller, ObjectiveKind::Rabin, ObjectiveKind::Streett, ObjectiveKind::Parity,
                      ObjectiveKind::Muller})
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            GameFile f = randomGame(kind, 3, 5, seed, seed % 2 ? Preorder::maximise() : Preorder::lexicographic());
            const std::string text = emitGame(f);
            GameFile back = parseGame(text);
            CHECK(back.game.objectives == f.game.objectives);
            CHECK(back.threshold == f.threshold);
            CHECK(back.initial == f.initial);
            CHECK(emitGame(back) == text);
        }
}

TEST_CASE("table preorders round-trip")
{
    std::string text = fig1Text;
    text += "preorder table {\n";
    text.replace(text.find("preorder lexicographic\n"), 23, "");
    for (std::uint64_t x = 0; x < 4; ++x)
        for (std::uint64_t y = 0; y < 4; ++y)
            if ((x & ~y) == 0) text += "  " + PayoffVector(2, x).str() + " <= " + PayoffVector(2, y).str() + "\n";
    text += "}\n";
    GameFile f = parseGame(text);
    CHECK(f.game.preorder.kind() == Preorder::Kind::Table);
    CHECK(emitGame(parseGame(emitGame(f))) == emitGame(f));
}

TEST_CASE("parse errors carry line and column")
{
    CHECK(errorOf("vertex v0 P3\n") == "1:11: owner must be P1 or P2");
    CHECK(errorOf("vertex v0 P1\nedge v0 v9\npreorder counting\nobjective reach { v0 }\n") ==
          "2:9: unknown vertex 'v9'");
    CHECK(errorOf("vertex v0 P1\nvertex v0 P2\n").find("2:8: vertex 'v0' declared twice") == 0);
    CHECK(errorOf("frobnicate\n") == "1:1: unknown statement 'frobnicate'");
    CHECK(errorOf("vertex v0 P1\nedge v0 v0\npreorder counting\nobjective reach { v0 \n").find("unexpected end") !=
          std::string::npos);
    CHECK(errorOf("vertex v0 P1\nedge v0 v0\npreorder fancy\nobjective reach { v0 }\n").find("3:1:") == 0);
}

TEST_CASE("deadlocks name the vertex")
{
    std::string e = errorOf("vertex a P1\nvertex b P2\nedge a b\npreorder counting\nobjective reach { a }\n");
    CHECK(e.find("'b' has no outgoing edge") != std::string::npos);
    CHECK(e.find("2:8:") == 0);
}

TEST_CASE("objective and threshold checks")
{
    std::string base = "vertex a P1\nedge a a\npreorder lexicographic\n";
    CHECK(errorOf(base + "objective reach { a }\nobjective buchi { a }\n").find("not homogeneous") != std::string::npos);
    CHECK(errorOf(base + "objective reach { a }\nthreshold 01\n").find("threshold has 2 bits") != std::string::npos);
    CHECK(errorOf(base).find("no objectives") != std::string::npos);
    CHECK(errorOf("vertex a P1\nedge a a\nobjective reach { a }\n").find("no preorder") != std::string::npos);
    CHECK(errorOf(base + "objective parity { }\n").find("has no colour") != std::string::npos);
    CHECK(errorOf(base + "objective rabin { }\n").find("no pairs") != std::string::npos);
    CHECK(errorOf(base + "objective omega { a }\n").find("unknown objective kind") != std::string::npos);
}

TEST_CASE("non-monotonic table preorders are rejected")
{
    std::string text = "vertex a P1\nedge a a\nobjective reach { a }\npreorder table {\n 0 <= 0\n 1 <= 1\n 1 <= 0\n}\n";
    std::string e = errorOf(text);
    CHECK(e.find("4:1:") == 0);
    CHECK(e.find("monoton") != std::string::npos);
}

TEST_CASE("strategy files round-trip")
{
    OrderedGame g = fig3Game();
    ValueResult r = computeLexValue(g, 0);
    for (const auto& s : {r.strat1, r.strat2}) {
        const std::string text = emitStrategy(s, g.arena);
        CHECK(parseStrategy(text, g.arena) == s);
    }
}

TEST_CASE("strategy file errors")
{
    Arena a = fig1Arena();
    CHECK_THROWS_AS(parseStrategy("states 1\n", a), InvalidInput);
    CHECK_THROWS_AS(parseStrategy("strategy P1\nstates 1\nnext 0 v1 v0\n", a), InvalidInput);
    CHECK_THROWS_AS(parseStrategy("strategy P1\nstates 1\nnext 0 v7 v0\n", a), InvalidInput);
    CHECK_THROWS_AS(parseStrategy("strategy P1\nstates 1\nupdate 0 v1 3\n", a), InvalidInput);
    CHECK_NOTHROW(parseStrategy("strategy P1\nstates 1\nupdate 0 v1 0\nnext 0 v1 v1\n", a));
}

TEST_CASE("generator is reproducible and deadlock free")
{
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        GameFile a = randomGame(ObjectiveKind::Streett, 3, 7, seed);
        GameFile b = randomGame(ObjectiveKind::Streett, 3, 7, seed);
        CHECK(emitGame(a) == emitGame(b));
        CHECK_FALSE(validate(a.game.arena));
    }
    CHECK(emitGame(randomGame(ObjectiveKind::Buchi, 2, 6, 1)) != emitGame(randomGame(ObjectiveKind::Buchi, 2, 6, 2)));
    GenOptions sparse;
    sparse.edgeProbability = 0.0;
    GameFile f = generateGame(sparse);
    for (Vertex v = 0; v < f.game.arena.size(); ++v) CHECK(f.game.arena.successors(v) == std::vector<Vertex>{v});
}
