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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

#include "ordgames/generate.hpp"
#include "ordgames/io.hpp"
#include "ordgames/oracle.hpp"
#include "ordgames/threshold.hpp"
#include "ordgames/verify.hpp"

using namespace ordgames;

namespace {

constexpr int exitP1 = 0;
constexpr int exitError = 1;
constexpr int exitP2 = 2;

int exitFor(Player p)
{
    return p == Player::P1 ? exitP1 : exitP2;
}

struct Query {
    std::string file;
    std::string mu;
    std::string from;
    std::string route = "auto";
};

void addQuery(CLI::App* cmd, Query& q, bool needsMu)
{
    cmd->add_option("game", q.file, "Game file")->required();
    cmd->add_option("--from", q.from, "Initial vertex (default: the file's initial vertex)");
    if (needsMu) cmd->add_option("--mu", q.mu, "Threshold bit-string (default: the file's threshold)");
}

BuchiRoute parseRoute(const std::string& name)
{
    static const std::map<std::string, BuchiRoute> routes{
        {"auto", BuchiRoute::Auto},
        {"lex-cnf", BuchiRoute::LexCnf},
        {"generic-cnf", BuchiRoute::GenericCnf},
        {"ui-expand", BuchiRoute::UIExpand},
        {"boolean-buchi", BuchiRoute::BooleanBuchi},
    };
    auto it = routes.find(name);
    if (it == routes.end()) throw InvalidInput("unknown route '" + name + "'");
    return it->second;
}

struct Loaded {
    GameFile file;
    PayoffVector mu;
    Vertex v0 = 0;
};

Loaded load(const Query& q, bool needsMu)
{
    Loaded l{readGameFile(q.file), {}, 0};
    const Arena& arena = l.file.game.arena;
    if (!q.from.empty()) {
        auto v = arena.find(q.from);
        if (!v) throw InvalidInput("unknown vertex '" + q.from + "'");
        l.v0 = *v;
    } else if (l.file.initial) {
        l.v0 = *l.file.initial;
    } else {
        throw InvalidInput("no initial vertex: pass --from or add 'initial' to the file");
    }
    if (needsMu) {
        if (!q.mu.empty()) {
            l.mu = PayoffVector::parse(q.mu);
        } else if (l.file.threshold) {
            l.mu = *l.file.threshold;
        } else {
            throw InvalidInput("no threshold: pass --mu or add 'threshold' to the file");
        }
        if (l.mu.size() != l.file.game.size())
            throw InvalidInput("threshold has " + std::to_string(l.mu.size()) + " bits, the game has " +
                               std::to_string(l.file.game.size()) + " objectives");
    }
    return l;
}

void writeFile(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write " + path);
    out << text;
}

int runSolve(const Query& q, bool synthesize, const std::string& out)
{
    Loaded l = load(q, true);
    ThresholdOptions options;
    options.route = parseRoute(q.route);
    ThresholdAnswer a = solveThreshold(l.file.game, l.mu, l.v0, options);
    std::cout << "route: " << a.route << "\n";
    if (synthesize) {
        const std::string path = out.empty() ? q.file + "." + toString(a.winner) + ".strategy" : out;
        writeFile(path, emitStrategy(a.strategy, l.file.game.arena));
        std::cout << "strategy: " << path << " (" << a.strategy.size() << " states)\n";
    }
    std::cout << "RESULT: " << toString(a.winner) << "\n";
    return exitFor(a.winner);
}

int runValue(const Query& q, const std::string& prefix)
{
    Loaded l = load(q, false);
    ThresholdOptions options;
    options.route = parseRoute(q.route);
    ValueResult r = computeLexValue(l.file.game, l.v0, options);
    const Arena& arena = l.file.game.arena;
    for (const auto& step : r.trace) std::cout << "threshold " << step.threshold.str() << ": " << toString(step.winner) << "\n";
    const std::string base = prefix.empty() ? q.file : prefix;
    writeFile(base + ".p1.strategy", emitStrategy(r.strat1, arena));
    writeFile(base + ".p2.strategy", emitStrategy(r.strat2, arena));
    std::cout << "strategies: " << base << ".p1.strategy " << base << ".p2.strategy\n";
    const Lasso play = outcome(arena, l.v0, r.strat1, r.strat2);
    std::cout << "outcome: " << formatLasso(arena, play) << " payoff " << payoff(arena, l.file.game.objectives, play).str()
              << "\n";
    std::cout << "RESULT: " << r.value.str() << "\n";
    return exitP1;
}

int runVerify(const Query& q, const std::string& strategyPath)
{
    Loaded l = load(q, true);
    const MooreStrategy s = readStrategyFile(strategyPath, l.file.game.arena);
    Verdict v = verifyThresholdStrategy(l.file.game, l.mu, l.v0, s);
    if (v.verified) {
        std::cout << "RESULT: verified\n";
        return exitP1;
    }
    if (!v.counterexample) throw InvalidInput("strategy cannot be checked: " + v.reason);
    std::cout << "payoff: " << v.payoff.str() << "\n";
    std::cout << "RESULT: counterexample " << formatLasso(l.file.game.arena, *v.counterexample) << "\n";
    return exitP2;
}

int runOracle(const Query& q)
{
    Loaded l = load(q, true);
    OracleResult r = oracleSolve(l.file.game, l.mu, l.v0);
    std::cout << "method: " << r.method << "\n";
    if (!r.consistent) throw InvalidInput("oracle computations from the two sides disagree");
    std::cout << "RESULT: " << toString(r.winner) << "\n";
    return exitFor(r.winner);
}

ObjectiveKind kindFromName(const std::string& name)
{
    for (auto k : {ObjectiveKind::Reach, ObjectiveKind::Safe, ObjectiveKind::Buchi, ObjectiveKind::CoBuchi,
                   ObjectiveKind::ExplMuller, ObjectiveKind::Rabin, ObjectiveKind::Streett, ObjectiveKind::Parity,
                   ObjectiveKind::Muller})
        if (kindName(k) == name) return k;
    throw InvalidInput("unknown objective kind '" + name + "'");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Solver for games with several omega-regular objectives ordered by a preorder."};
    app.footer(
        "Payoffs and thresholds are bit-strings whose leftmost bit is objective 1, the most\n"
        "significant bit for the lexicographic order: with objectives A, B, C the string 011\n"
        "means B and C are satisfied.\n\n"
        "Exit codes: 0 when P1 wins or a strategy is verified, 2 when P2 wins or a\n"
        "counterexample is found, 1 on any error.");
    app.require_subcommand(1);

    Query q;
    std::string out;
    std::string strategyPath;

    auto* solve = app.add_subcommand("solve", "Decide the threshold problem from a vertex");
    addQuery(solve, q, true);
    solve->add_option("--route", q.route, "Buchi reduction: auto, lex-cnf, generic-cnf, ui-expand, boolean-buchi");

    auto* synth = app.add_subcommand("synthesize", "Solve and write the winner's strategy");
    addQuery(synth, q, true);
    synth->add_option("--route", q.route, "Buchi reduction");
    synth->add_option("--out", out, "Strategy file (default: <game>.<winner>.strategy)");

    auto* value = app.add_subcommand("value", "Lexicographic value and optimal strategies of both players");
    addQuery(value, q, false);
    value->add_option("--route", q.route, "Buchi reduction");
    value->add_option("--out", out, "Prefix of the strategy files (default: the game file)");

    auto* verify = app.add_subcommand("verify", "Check a strategy against the threshold");
    addQuery(verify, q, true);
    verify->add_option("--strategy", strategyPath, "Strategy file")->required();

    auto* oracle = app.add_subcommand("oracle", "Decide the threshold problem with the reference solver");
    addQuery(oracle, q, true);

    GenOptions gen;
    std::string kind = "buchi";
    std::string preorder = "lexicographic";
    auto* g = app.add_subcommand("gen", "Emit a random game file");
    g->add_option("--kind", kind, "Objective kind")->capture_default_str();
    g->add_option("--n", gen.objectives, "Number of objectives")->capture_default_str();
    g->add_option("--vertices", gen.vertices, "Number of vertices")->capture_default_str();
    g->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
    g->add_option("--preorder", preorder, "Preorder name")->capture_default_str();
    g->add_option("--edge-probability", gen.edgeProbability, "Probability of each edge")->capture_default_str();
    g->add_option("--colours", gen.colours, "Colours of parity and muller objectives")->capture_default_str();
    g->add_option("--pairs", gen.pairs, "Pairs of rabin and streett objectives")->capture_default_str();
    g->add_option("--family-size", gen.familySize, "Sets in muller families")->capture_default_str();
    g->add_option("--out", out, "Output file (default: standard output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exitError;
    }

    try {
        if (solve->parsed()) return runSolve(q, false, out);
        if (synth->parsed()) return runSolve(q, true, out);
        if (value->parsed()) return runValue(q, out);
        if (verify->parsed()) return runVerify(q, strategyPath);
        if (oracle->parsed()) return runOracle(q);
        if (g->parsed()) {
            gen.kind = kindFromName(kind);
            gen.preorder = Preorder::fromName(preorder);
            const std::string text = emitGame(generateGame(gen));
            if (out.empty()) {
                std::cout << text;
            } else {
                writeFile(out, text);
                std::cout << "RESULT: " << out << "\n";
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exitError;
    }
    return exitError;
}
