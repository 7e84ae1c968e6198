#ifndef KGV_TESTS_CORPUS_HPP
#define KGV_TESTS_CORPUS_HPP

#include <kgv/kgraph.hpp>

// Shared fixture graphs. Names describe the structure:
//   singleLoop2    one vertex, one loop per color, k = 2
//   twoByOneLoops  one vertex, color-1 loops {a,b}, color-2 loop {f}, flips swap a/b
//   singleLoop3    one vertex, one loop per color, k = 3
//   twoVertexCycle two vertices u,v with a 2-cycle in each color
// plus curated 3-graphs used by the heavier suites.
namespace corpus {

inline kgv::KGraphPtr singleLoop2() {
    auto g = kgv::ColoredGraph::make(2, {"v"},
                                     {{"e", 1, "v", "v"}, {"f", 2, "v", "v"}});
    return kgv::KGraph::build(std::move(g), {{"e", "f", "f", "e"}});
}

inline kgv::KGraphPtr twoByOneLoops() {
    auto g = kgv::ColoredGraph::make(
        2, {"v"}, {{"a", 1, "v", "v"}, {"b", 1, "v", "v"}, {"f", 2, "v", "v"}});
    return kgv::KGraph::build(std::move(g), {{"a", "f", "f", "b"}, {"b", "f", "f", "a"}});
}

inline kgv::KGraphPtr singleLoop3() {
    auto g = kgv::ColoredGraph::make(
        3, {"v"}, {{"e1", 1, "v", "v"}, {"e2", 2, "v", "v"}, {"e3", 3, "v", "v"}});
    return kgv::KGraph::build(std::move(g), {{"e1", "e2", "e2", "e1"},
                                             {"e1", "e3", "e3", "e1"},
                                             {"e2", "e3", "e3", "e2"}});
}

inline kgv::KGraphPtr twoVertexCycle() {
    auto g = kgv::ColoredGraph::make(2, {"u", "v"},
                                     {{"a1", 1, "v", "u"},
                                      {"a2", 1, "u", "v"},
                                      {"f1", 2, "v", "u"},
                                      {"f2", 2, "u", "v"}});
    return kgv::KGraph::build(std::move(g),
                              {{"a1", "f2", "f1", "a2"}, {"a2", "f1", "f2", "a1"}});
}

// 3-graph with two color-1 loops; the (1,2) and (1,3) flips both swap a/b.
inline kgv::KGraphPtr doubleSwap3() {
    auto g = kgv::ColoredGraph::make(3, {"v"},
                                     {{"a", 1, "v", "v"},
                                      {"b", 1, "v", "v"},
                                      {"f", 2, "v", "v"},
                                      {"h", 3, "v", "v"}});
    return kgv::KGraph::build(std::move(g), {{"a", "f", "f", "b"},
                                             {"b", "f", "f", "a"},
                                             {"a", "h", "h", "b"},
                                             {"b", "h", "h", "a"},
                                             {"f", "h", "h", "f"}});
}

// Same shape but the (1,3) flip fixes a and b.
inline kgv::KGraphPtr mixedSwap3() {
    auto g = kgv::ColoredGraph::make(3, {"v"},
                                     {{"a", 1, "v", "v"},
                                      {"b", 1, "v", "v"},
                                      {"f", 2, "v", "v"},
                                      {"h", 3, "v", "v"}});
    return kgv::KGraph::build(std::move(g), {{"a", "f", "f", "b"},
                                             {"b", "f", "f", "a"},
                                             {"a", "h", "h", "a"},
                                             {"b", "h", "h", "b"},
                                             {"f", "h", "h", "f"}});
}

// Two vertices, a 2-cycle in colors 1 and 2 plus a color-3 loop at each vertex.
inline kgv::KGraphPtr twoVertexCycle3() {
    auto g = kgv::ColoredGraph::make(3, {"u", "v"},
                                     {{"a1", 1, "v", "u"},
                                      {"a2", 1, "u", "v"},
                                      {"f1", 2, "v", "u"},
                                      {"f2", 2, "u", "v"},
                                      {"hu", 3, "u", "u"},
                                      {"hv", 3, "v", "v"}});
    return kgv::KGraph::build(std::move(g), {{"a1", "f2", "f1", "a2"},
                                             {"a2", "f1", "f2", "a1"},
                                             {"a1", "hv", "hu", "a1"},
                                             {"a2", "hu", "hv", "a2"},
                                             {"f1", "hv", "hu", "f1"},
                                             {"f2", "hu", "hv", "f2"}});
}

}  // namespace corpus

#endif
