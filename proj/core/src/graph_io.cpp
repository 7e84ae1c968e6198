#include "kgv/graph_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace kgv {

using json = nlohmann::ordered_json;

GraphDocument GraphDocument::parse(const std::string& jsonText) {
    json doc;
    try {
        doc = json::parse(jsonText);
    } catch (const json::parse_error& ex) {
        throw Error(ErrorKind::MalformedInput, std::string("invalid JSON: ") + ex.what());
    }
    GraphDocument out;
    try {
        out.k = doc.at("k").get<int>();
        for (const auto& v : doc.at("vertices")) out.vertices.push_back(v.get<std::string>());
        for (const auto& e : doc.at("edges")) {
            out.edges.emplace_back(e.at("id").get<std::string>(), e.at("color").get<int>(),
                                   e.at("source").get<std::string>(),
                                   e.at("range").get<std::string>());
        }
        if (doc.contains("squares")) {
            for (const auto& s : doc.at("squares")) {
                out.squares.push_back(Square{s.at("e").get<std::string>(),
                                             s.at("g").get<std::string>(),
                                             s.at("gp").get<std::string>(),
                                             s.at("ep").get<std::string>()});
            }
        }
    } catch (const json::exception& ex) {
        throw Error(ErrorKind::MalformedInput, std::string("bad graph document: ") + ex.what());
    }
    return out;
}

GraphDocument GraphDocument::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::MalformedInput, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

GraphDocument GraphDocument::fromGraph(const KGraph& kg) {
    GraphDocument out;
    out.k = kg.k();
    for (VertexId v = 0; v < kg.vertexCount(); ++v) out.vertices.push_back(kg.vertexName(v));
    for (EdgeId e : kg.edgeIds())
        out.edges.emplace_back(kg.edgeName(e), kg.colorOf(e), kg.vertexName(kg.sourceOf(e)),
                               kg.vertexName(kg.rangeOf(e)));
    // one square per canonical (lower color, higher color) flip entry
    for (int i = 1; i <= kg.k(); ++i) {
        for (int j = i + 1; j <= kg.k(); ++j) {
            for (EdgeId e : kg.edgesOfColor(i)) {
                for (EdgeId g : kg.edgesOfColor(j)) {
                    if (kg.sourceOf(e) != kg.rangeOf(g)) continue;
                    auto [gp, ep] = kg.flip(e, g);
                    out.squares.push_back(Square{kg.edgeName(e), kg.edgeName(g), kg.edgeName(gp),
                                                 kg.edgeName(ep)});
                }
            }
        }
    }
    return out;
}

std::string GraphDocument::dump() const {
    json doc;
    doc["k"] = k;
    doc["vertices"] = vertices;
    doc["edges"] = json::array();
    for (const auto& [id, color, source, range] : edges) {
        doc["edges"].push_back({{"id", id}, {"color", color}, {"source", source}, {"range", range}});
    }
    doc["squares"] = json::array();
    for (const auto& s : squares) {
        doc["squares"].push_back({{"e", s.e}, {"g", s.g}, {"gp", s.gp}, {"ep", s.ep}});
    }
    return doc.dump(2) + "\n";
}

void GraphDocument::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::MalformedInput, "cannot write '" + path + "'");
    out << dump();
}

KGraphPtr GraphDocument::build() const {
    return KGraph::build(ColoredGraph::make(k, vertices, edges), squares);
}

}  // namespace kgv
