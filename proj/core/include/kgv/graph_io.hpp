#ifndef KGV_GRAPH_IO_HPP
#define KGV_GRAPH_IO_HPP

#include <string>

#include "kgv/kgraph.hpp"

namespace kgv {

// On-disk form of a k-graph:
// {
//   "k": 2,
//   "vertices": ["u", "v"],
//   "edges": [{"id": "a1", "color": 1, "source": "v", "range": "u"}, ...],
//   "squares": [{"e": "a1", "g": "f2", "gp": "f1", "ep": "a2"}, ...]
// }
// where a square {e,g,gp,ep} records e∘g = gp∘ep (g traversed first).
struct GraphDocument {
    int k = 1;
    std::vector<std::string> vertices;
    std::vector<std::tuple<std::string, int, std::string, std::string>> edges;
    SquareSet squares;

    static GraphDocument parse(const std::string& jsonText);
    static GraphDocument load(const std::string& path);
    static GraphDocument fromGraph(const KGraph& kg);

    std::string dump() const;  // canonical, deterministic
    void save(const std::string& path) const;

    KGraphPtr build() const;  // runs full validation
};

}  // namespace kgv

#endif  // KGV_GRAPH_IO_HPP
