#include "kgv/element_io.hpp"

#include <json.hpp>

#include <sstream>

namespace kgv {

using json = nlohmann::ordered_json;

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    void skipSpace() {
        while (pos < s.size() && s[pos] == ' ') ++pos;
    }
    bool eat(const std::string& tok) {
        skipSpace();
        if (s.compare(pos, tok.size(), tok) == 0) {
            pos += tok.size();
            return true;
        }
        return false;
    }
    bool done() {
        skipSpace();
        return pos >= s.size();
    }
};

std::string readBracketed(Cursor& c) {
    if (!c.eat("[")) throw Error(ErrorKind::MalformedInput, "expected '[' in element literal");
    auto close = c.s.find(']', c.pos);
    if (close == std::string::npos)
        throw Error(ErrorKind::MalformedInput, "unterminated '[' in element literal");
    std::string inner = c.s.substr(c.pos, close - c.pos);
    c.pos = close + 1;
    return inner;
}

std::vector<std::string> splitIds(const std::string& inner) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : inner) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (ch != ' ') {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

Path readPath(const KGraphPtr& graph, Cursor& c) {
    c.skipSpace();
    if (c.eat("p")) {
        std::string v = readBracketed(c);
        auto it = graph->base().vertexIndex.find(v);
        if (it == graph->base().vertexIndex.end())
            throw Error(ErrorKind::MalformedInput, "unknown vertex '" + v + "'");
        return graph->vertexPath(it->second);
    }
    if (!c.eat("s")) throw Error(ErrorKind::MalformedInput, "expected 's[...]' or 'p[...]'");
    std::vector<EdgeId> word;
    for (const auto& id : splitIds(readBracketed(c))) {
        auto it = graph->base().edgeIndex.find(id);
        if (it == graph->base().edgeIndex.end())
            throw Error(ErrorKind::MalformedInput, "unknown edge '" + id + "'");
        word.push_back(it->second);
    }
    if (word.empty()) throw Error(ErrorKind::MalformedInput, "empty path needs p[v] form");
    return graph->pathFromWord(word);
}

Rational readCoeff(Cursor& c) {
    c.skipSpace();
    std::size_t start = c.pos;
    while (c.pos < c.s.size() && (std::isdigit(static_cast<unsigned char>(c.s[c.pos])) ||
                                  c.s[c.pos] == '-' || c.s[c.pos] == '/'))
        ++c.pos;
    if (c.pos == start) throw Error(ErrorKind::MalformedInput, "expected a rational coefficient");
    try {
        return parse_rational(c.s.substr(start, c.pos - start));
    } catch (const std::invalid_argument& ex) {
        throw Error(ErrorKind::MalformedInput, ex.what());
    }
}

}  // namespace

KPElement parseElement(const KGraphPtr& graph, const std::string& text) {
    KPElement out(graph);
    Cursor c{text};
    if (c.eat("0") && c.done()) return out;
    c.pos = 0;
    bool first = true;
    while (!c.done()) {
        if (!first && !c.eat("+"))
            throw Error(ErrorKind::MalformedInput, "expected '+' between terms");
        first = false;
        Rational coeff = readCoeff(c);
        if (!c.eat("*")) throw Error(ErrorKind::MalformedInput, "expected '*' after coefficient");
        Path mu = readPath(graph, c);
        c.skipSpace();
        if (c.done() || c.s[c.pos] == '+') {
            // bare projection term "c * p[v]"
            if (!mu.isVertex())
                throw Error(ErrorKind::MalformedInput, "missing adjoint part of the monomial");
            out.add(KPMonomial{mu, mu}, coeff);
            continue;
        }
        Path nu = readPath(graph, c);
        if (!c.eat("*")) throw Error(ErrorKind::MalformedInput, "expected '*' on the adjoint part");
        if (mu.source != nu.source)
            throw Error(ErrorKind::MalformedInput, "monomial sides have different sources");
        out.add(KPMonomial{mu, nu}, coeff);
    }
    return out;
}

std::string elementToJson(const KPElement& x) {
    json arr = json::array();
    const auto& g = *x.graph();
    for (const auto& [m, c] : x.terms()) {
        json term;
        term["coeff"] = to_string(c);
        term["mu"] = json::array();
        for (EdgeId e : m.mu.word) term["mu"].push_back(g.edgeName(e));
        term["nu"] = json::array();
        for (EdgeId e : m.nu.word) term["nu"].push_back(g.edgeName(e));
        term["at"] = g.vertexName(m.mu.source);
        arr.push_back(term);
    }
    return arr.dump();
}

KPElement elementFromJson(const KGraphPtr& graph, const std::string& jsonText) {
    json arr;
    try {
        arr = json::parse(jsonText);
    } catch (const json::parse_error& ex) {
        throw Error(ErrorKind::MalformedInput, std::string("invalid JSON: ") + ex.what());
    }
    KPElement out(graph);
    for (const auto& term : arr) {
        Rational c = parse_rational(term.at("coeff").get<std::string>());
        auto toPath = [&](const json& ids) {
            std::vector<EdgeId> word;
            for (const auto& id : ids) {
                auto it = graph->base().edgeIndex.find(id.get<std::string>());
                if (it == graph->base().edgeIndex.end())
                    throw Error(ErrorKind::MalformedInput, "unknown edge in element JSON");
                word.push_back(it->second);
            }
            if (!word.empty()) return graph->pathFromWord(word);
            auto vt = graph->base().vertexIndex.find(term.at("at").get<std::string>());
            if (vt == graph->base().vertexIndex.end())
                throw Error(ErrorKind::MalformedInput, "unknown vertex in element JSON");
            return graph->vertexPath(vt->second);
        };
        out.add(KPMonomial{toPath(term.at("mu")), toPath(term.at("nu"))}, c);
    }
    return out;
}

}  // namespace kgv
