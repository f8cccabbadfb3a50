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

#include "ordgames/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace ordgames {

namespace {

struct Token {
    std::string text;
    int line = 0;
    int col = 0;
};

[[noreturn]] void fail(const Token& at, const std::string& message)
{
    throw InvalidInput(std::to_string(at.line) + ":" + std::to_string(at.col) + ": " + message);
}

bool special(char c)
{
    return c == '{' || c == '}' || c == '(' || c == ')' || c == ':' || c == '#' || c == '<';
}

std::vector<Token> tokenize(const std::string& text, Token& end)
{
    std::vector<Token> out;
    int line = 1;
    int col = 1;
    for (std::size_t i = 0; i < text.size();) {
        const char c = text[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            ++col;
            ++i;
        } else if (c == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
        } else if (c == '<') {
            if (i + 1 >= text.size() || text[i + 1] != '=') fail({"<", line, col}, "expected '<='");
            out.push_back({"<=", line, col});
            i += 2;
            col += 2;
        } else if (special(c)) {
            out.push_back({std::string(1, c), line, col});
            ++i;
            ++col;
        } else {
            Token t{"", line, col};
            while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && !special(text[i])) {
                t.text += text[i++];
                ++col;
            }
            out.push_back(std::move(t));
        }
    }
    end = {"end of file", line, col};
    return out;
}

struct RawObjective {
    Token at;
    ObjectiveKind kind = ObjectiveKind::Reach;
    std::vector<std::vector<Token>> sets;
    std::vector<std::pair<std::vector<Token>, std::vector<Token>>> pairs;
    std::vector<std::pair<Token, Token>> colouring;
    std::vector<std::vector<Token>> family;
};

class Parser {
public:
    explicit Parser(const std::string& text) : tokens_(tokenize(text, end_)) {}

    GameFile parse();

private:
    const Token& peek() const { return pos_ < tokens_.size() ? tokens_[pos_] : end_; }
    bool atEnd() const { return pos_ >= tokens_.size(); }

    Token next()
    {
        if (atEnd()) fail(end_, "unexpected end of file");
        return tokens_[pos_++];
    }

    Token expect(const std::string& text)
    {
        Token t = next();
        if (t.text != text) fail(t, "expected '" + text + "', found '" + t.text + "'");
        return t;
    }

    Token word()
    {
        Token t = next();
        if (t.text.size() == 1 && special(t.text[0])) fail(t, "expected a name, found '" + t.text + "'");
        if (t.text == "<=") fail(t, "expected a name, found '<='");
        return t;
    }

    std::vector<Token> nameSet()
    {
        expect("{");
        std::vector<Token> names;
        while (peek().text != "}") names.push_back(word());
        expect("}");
        return names;
    }

    RawObjective objective(const Token& at);

    Token end_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

ObjectiveKind kindFromToken(const Token& t)
{
    static const std::map<std::string, ObjectiveKind> kinds{
        {"reach", ObjectiveKind::Reach},       {"safe", ObjectiveKind::Safe},
        {"buchi", ObjectiveKind::Buchi},       {"cobuchi", ObjectiveKind::CoBuchi},
        {"explicit-muller", ObjectiveKind::ExplMuller},
        {"rabin", ObjectiveKind::Rabin},       {"streett", ObjectiveKind::Streett},
        {"parity", ObjectiveKind::Parity},     {"muller", ObjectiveKind::Muller},
    };
    auto it = kinds.find(t.text);
    if (it == kinds.end()) fail(t, "unknown objective kind '" + t.text + "'");
    return it->second;
}

RawObjective Parser::objective(const Token& at)
{
    RawObjective o;
    o.at = at;
    o.kind = kindFromToken(word());
    switch (o.kind) {
    case ObjectiveKind::Reach:
    case ObjectiveKind::Safe:
    case ObjectiveKind::Buchi:
    case ObjectiveKind::CoBuchi: o.sets.push_back(nameSet()); break;
    case ObjectiveKind::ExplMuller:
        expect("{");
        while (peek().text != "}") o.sets.push_back(nameSet());
        expect("}");
        break;
    case ObjectiveKind::Rabin:
    case ObjectiveKind::Streett:
        expect("{");
        while (peek().text != "}") {
            expect("(");
            auto e = nameSet();
            auto f = nameSet();
            expect(")");
            o.pairs.emplace_back(std::move(e), std::move(f));
        }
        expect("}");
        break;
    case ObjectiveKind::Parity:
    case ObjectiveKind::Muller:
        expect("{");
        while (peek().text != "}") {
            Token v = word();
            expect(":");
            o.colouring.emplace_back(v, word());
        }
        expect("}");
        if (o.kind == ObjectiveKind::Muller) {
            expect("{");
            while (peek().text != "}") o.family.push_back(nameSet());
            expect("}");
        }
        break;
    default: break;
    }
    return o;
}

int integer(const Token& t)
{
    int value = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || p != t.text.data() + t.text.size()) fail(t, "expected an integer, found '" + t.text + "'");
    return value;
}

PayoffVector bits(const Token& t)
{
    try {
        return PayoffVector::parse(t.text);
    } catch (const InvalidInput& e) {
        fail(t, e.what());
    }
}

GameFile Parser::parse()
{
    std::vector<std::pair<Token, Player>> vertices;
    std::vector<std::pair<Token, Token>> edges;
    std::optional<Token> preorderAt;
    std::string preorderName;
    std::vector<std::pair<Token, Token>> tablePairs;
    std::vector<RawObjective> objectives;
    std::optional<Token> thresholdAt;
    std::optional<Token> initialAt;

    while (!atEnd()) {
        Token kw = next();
        if (kw.text == "vertex") {
            Token name = word();
            Token owner = word();
            if (owner.text != "P1" && owner.text != "P2") fail(owner, "owner must be P1 or P2");
            vertices.emplace_back(name, owner.text == "P1" ? Player::P1 : Player::P2);
        } else if (kw.text == "edge") {
            Token a = word();
            edges.emplace_back(a, word());
        } else if (kw.text == "preorder") {
            if (preorderAt) fail(kw, "preorder given twice");
            preorderAt = kw;
            preorderName = word().text;
            if (preorderName == "table") {
                expect("{");
                while (peek().text != "}") {
                    Token x = word();
                    expect("<=");
                    tablePairs.emplace_back(x, word());
                }
                expect("}");
            }
        } else if (kw.text == "objective") {
            objectives.push_back(objective(kw));
        } else if (kw.text == "threshold") {
            if (thresholdAt) fail(kw, "threshold given twice");
            thresholdAt = word();
        } else if (kw.text == "initial") {
            if (initialAt) fail(kw, "initial vertex given twice");
            initialAt = word();
        } else {
            fail(kw, "unknown statement '" + kw.text + "'");
        }
    }

    if (vertices.empty()) fail(end_, "no vertices declared");
    std::map<std::string, Vertex> ids;
    std::vector<Player> owners;
    std::vector<std::string> names;
    for (const auto& [name, owner] : vertices) {
        if (!ids.emplace(name.text, static_cast<Vertex>(owners.size())).second)
            fail(name, "vertex '" + name.text + "' declared twice");
        owners.push_back(owner);
        names.push_back(name.text);
    }
    const auto n = owners.size();
    auto resolve = [&](const Token& t) {
        auto it = ids.find(t.text);
        if (it == ids.end()) fail(t, "unknown vertex '" + t.text + "'");
        return it->second;
    };
    auto setOf = [&](const std::vector<Token>& ts) {
        VertexSet s(n);
        for (const auto& t : ts) s.set(resolve(t));
        return s;
    };

    std::vector<std::pair<Vertex, Vertex>> edgeList;
    for (const auto& [a, b] : edges) edgeList.emplace_back(resolve(a), resolve(b));
    GameFile out;
    out.game.arena = Arena(owners, edgeList, names);
    for (Vertex v = 0; v < static_cast<Vertex>(n); ++v)
        if (out.game.arena.successors(v).empty()) fail(vertices[v].first, "vertex '" + names[v] + "' has no outgoing edge");

    if (objectives.empty()) fail(end_, "no objectives declared");
    for (const auto& raw : objectives) {
        if (raw.kind != objectives.front().kind)
            fail(raw.at, "objectives are not homogeneous: " + kindName(raw.kind) + " after " +
                             kindName(objectives.front().kind));
        Objective o;
        switch (raw.kind) {
        case ObjectiveKind::Reach: o = Objective::reach(setOf(raw.sets[0])); break;
        case ObjectiveKind::Safe: o = Objective::safe(setOf(raw.sets[0])); break;
        case ObjectiveKind::Buchi: o = Objective::buchi(setOf(raw.sets[0])); break;
        case ObjectiveKind::CoBuchi: o = Objective::coBuchi(setOf(raw.sets[0])); break;
        case ObjectiveKind::ExplMuller: {
            if (raw.sets.empty()) fail(raw.at, "explicit muller family is empty");
            std::vector<VertexSet> family;
            for (const auto& s : raw.sets) family.push_back(setOf(s));
            o = Objective::explMuller(std::move(family));
            break;
        }
        case ObjectiveKind::Rabin:
        case ObjectiveKind::Streett: {
            if (raw.pairs.empty()) fail(raw.at, kindName(raw.kind) + " objective has no pairs");
            std::vector<std::pair<VertexSet, VertexSet>> pairs;
            for (const auto& [e, f] : raw.pairs) pairs.emplace_back(setOf(e), setOf(f));
            o = raw.kind == ObjectiveKind::Rabin ? Objective::rabin(std::move(pairs))
                                                 : Objective::streett(std::move(pairs));
            break;
        }
        case ObjectiveKind::Parity:
        case ObjectiveKind::Muller: {
            std::vector<int> colouring(n, -1);
            for (const auto& [v, c] : raw.colouring) {
                const Vertex id = resolve(v);
                if (colouring[id] >= 0) fail(v, "vertex '" + v.text + "' coloured twice");
                colouring[id] = integer(c);
                if (colouring[id] < 0) fail(c, "colours must be non-negative");
            }
            for (Vertex v = 0; v < static_cast<Vertex>(n); ++v)
                if (colouring[v] < 0) fail(raw.at, "vertex '" + names[v] + "' has no colour");
            if (raw.kind == ObjectiveKind::Parity) {
                o = Objective::parity(std::move(colouring));
            } else {
                if (raw.family.empty()) fail(raw.at, "muller family is empty");
                std::vector<std::vector<int>> family;
                for (const auto& f : raw.family) {
                    std::vector<int> colours;
                    for (const auto& t : f) colours.push_back(integer(t));
                    family.push_back(std::move(colours));
                }
                o = Objective::muller(std::move(colouring), std::move(family));
            }
            break;
        }
        default: break;
        }
        out.game.objectives.push_back(std::move(o));
    }
    const int count = static_cast<int>(out.game.objectives.size());
    if (count > PayoffVector::maxSize) fail(objectives.back().at, "too many objectives");

    if (!preorderAt) fail(end_, "no preorder declared");
    if (preorderName == "table") {
        std::vector<std::pair<PayoffVector, PayoffVector>> pairs;
        for (const auto& [x, y] : tablePairs) {
            PayoffVector a = bits(x);
            PayoffVector b = bits(y);
            if (a.size() != count) fail(x, "payoff length differs from the number of objectives");
            if (b.size() != count) fail(y, "payoff length differs from the number of objectives");
            pairs.emplace_back(a, b);
        }
        try {
            out.game.preorder = Preorder::table(count, pairs);
        } catch (const InvalidInput& e) {
            fail(*preorderAt, e.what());
        }
    } else {
        try {
            out.game.preorder = Preorder::fromName(preorderName);
        } catch (const InvalidInput& e) {
            fail(*preorderAt, e.what());
        }
    }

    if (thresholdAt) {
        PayoffVector mu = bits(*thresholdAt);
        if (mu.size() != count)
            fail(*thresholdAt, "threshold has " + std::to_string(mu.size()) + " bits, the game has " +
                                   std::to_string(count) + " objectives");
        out.threshold = mu;
    }
    if (initialAt) out.initial = resolve(*initialAt);
    checkOrderedGame(out.game);
    return out;
}

std::string readAll(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string setText(const Arena& arena, const VertexSet& s)
{
    std::string out = "{";
    for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) out += " " + arena.name(static_cast<Vertex>(v));
    return out + " }";
}

}  // namespace

GameFile parseGame(const std::string& text)
{
    return Parser(text).parse();
}

GameFile readGameFile(const std::string& path)
{
    return parseGame(readAll(path));
}

std::string emitGame(const GameFile& file)
{
    const auto& g = file.game;
    const Arena& a = g.arena;
    std::ostringstream out;
    for (Vertex v = 0; v < a.size(); ++v) out << "vertex " << a.name(v) << " " << toString(a.owner(v)) << "\n";
    for (Vertex v = 0; v < a.size(); ++v)
        for (Vertex w : a.successors(v)) out << "edge " << a.name(v) << " " << a.name(w) << "\n";
    out << "preorder " << g.preorder.name();
    if (g.preorder.kind() == Preorder::Kind::Table) {
        out << " {\n";
        for (const auto& [x, y] : g.preorder.tablePairs()) out << "  " << x.str() << " <= " << y.str() << "\n";
        out << "}";
    }
    out << "\n";
    for (const auto& o : g.objectives) {
        out << "objective " << kindName(o.kind) << " ";
        switch (o.kind) {
        case ObjectiveKind::Reach:
        case ObjectiveKind::Safe:
        case ObjectiveKind::Buchi:
        case ObjectiveKind::CoBuchi: out << setText(a, o.sets[0]); break;
        case ObjectiveKind::ExplMuller:
            out << "{";
            for (const auto& s : o.sets) out << " " << setText(a, s);
            out << " }";
            break;
        case ObjectiveKind::Rabin:
        case ObjectiveKind::Streett:
            out << "{";
            for (const auto& [e, f] : o.pairs) out << " ( " << setText(a, e) << " " << setText(a, f) << " )";
            out << " }";
            break;
        case ObjectiveKind::Parity:
        case ObjectiveKind::Muller:
            out << "{";
            for (Vertex v = 0; v < a.size(); ++v) out << " " << a.name(v) << ":" << o.coloring[v];
            out << " }";
            if (o.kind == ObjectiveKind::Muller) {
                out << " {";
                for (const auto& f : o.colorFamily) {
                    out << " {";
                    for (int c : f) out << " " << c;
                    out << " }";
                }
                out << " }";
            }
            break;
        default: throw InvalidInput(kindName(o.kind) + " objectives have no file form");
        }
        out << "\n";
    }
    if (file.threshold) out << "threshold " << file.threshold->str() << "\n";
    if (file.initial) out << "initial " << a.name(*file.initial) << "\n";
    return out.str();
}

MooreStrategy parseStrategy(const std::string& text, const Arena& arena)
{
    Token end;
    auto tokens = tokenize(text, end);
    std::size_t pos = 0;
    auto next = [&]() -> Token {
        if (pos >= tokens.size()) fail(end, "unexpected end of file");
        return tokens[pos++];
    };
    auto vertex = [&](const Token& t) {
        auto v = arena.find(t.text);
        if (!v) fail(t, "unknown vertex '" + t.text + "'");
        return *v;
    };
    std::optional<Player> owner;
    std::optional<int> states;
    int initial = 0;
    struct Entry {
        bool update;
        Token q, v, target;
    };
    std::vector<Entry> entries;
    while (pos < tokens.size()) {
        Token kw = next();
        if (kw.text == "strategy") {
            Token p = next();
            if (p.text != "P1" && p.text != "P2") fail(p, "owner must be P1 or P2");
            owner = p.text == "P1" ? Player::P1 : Player::P2;
        } else if (kw.text == "states") {
            Token t = next();
            states = integer(t);
            if (*states < 1) fail(t, "a strategy needs at least one state");
        } else if (kw.text == "initial") {
            initial = integer(next());
        } else if (kw.text == "update" || kw.text == "next") {
            Token q = next();
            Token v = next();
            entries.push_back({kw.text == "update", q, v, next()});
        } else {
            fail(kw, "unknown statement '" + kw.text + "'");
        }
    }
    if (!owner) fail(end, "missing 'strategy P1|P2'");
    if (!states) fail(end, "missing 'states'");
    if (initial < 0 || initial >= *states) fail(end, "initial state out of range");
    MooreStrategy s(*owner, arena.size(), *states, initial);
    for (const auto& e : entries) {
        const int q = integer(e.q);
        if (q < 0 || q >= *states) fail(e.q, "state out of range");
        const Vertex v = vertex(e.v);
        if (e.update) {
            const int t = integer(e.target);
            if (t < 0 || t >= *states) fail(e.target, "state out of range");
            s.setUpdate(q, v, t);
        } else {
            s.setNext(q, v, vertex(e.target));
        }
    }
    checkStrategy(arena, s);
    return s;
}

MooreStrategy readStrategyFile(const std::string& path, const Arena& arena)
{
    return parseStrategy(readAll(path), arena);
}

std::string emitStrategy(const MooreStrategy& strategy, const Arena& arena)
{
    std::ostringstream out;
    out << "strategy " << toString(strategy.owner()) << "\n";
    out << "states " << strategy.size() << "\n";
    out << "initial " << strategy.initial() << "\n";
    for (int q = 0; q < strategy.size(); ++q) {
        for (Vertex v = 0; v < arena.size(); ++v) {
            if (strategy.update(q, v) >= 0) out << "update " << q << " " << arena.name(v) << " " << strategy.update(q, v) << "\n";
            if (strategy.next(q, v) >= 0)
                out << "next " << q << " " << arena.name(v) << " " << arena.name(strategy.next(q, v)) << "\n";
        }
    }
    return out.str();
}

}  // namespace ordgames
