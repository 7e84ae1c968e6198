#ifndef KGV_KGRAPH_HPP
#define KGV_KGRAPH_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kgv/error.hpp"
#include "kgv/multidegree.hpp"

namespace kgv {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

// Finite k-colored directed graph. Edges point from source to range;
// composition reads right to left, so in a path "e after f" we require
// s(e) = r(f).
struct ColoredGraph {
    struct Edge {
        std::string name;
        int color = 1;  // 1-based
        VertexId source = 0;
        VertexId range = 0;
    };

    int k = 1;
    std::vector<std::string> vertexNames;
    std::vector<Edge> edges;

    std::map<std::string, VertexId> vertexIndex;
    std::map<std::string, EdgeId> edgeIndex;

    static ColoredGraph make(int k, const std::vector<std::string>& vertices,
                             const std::vector<std::tuple<std::string, int, std::string, std::string>>&
                                 edgeSpecs);  // (id, color, source, range)

    std::size_t vertexCount() const { return vertexNames.size(); }
    std::size_t edgeCount() const { return edges.size(); }
};

// A factorization square records the relation e∘g = g'∘e' where e,e' carry
// color i, g,g' carry color j and i < j. Paths compose right to left, so g
// is traversed before e.
struct Square {
    std::string e, g, gp, ep;
};

using SquareSet = std::vector<Square>;

class KGraph;
using KGraphPtr = std::shared_ptr<const KGraph>;

// A composable edge word together with its degree. The word is stored with
// the last-traversed edge first and, in canonical form, colors ascending:
// all color-1 edges precede all color-2 edges, and so on. Color-1 edges are
// therefore traversed last. The empty word is the vertex path.
struct Path {
    std::vector<EdgeId> word;
    VertexId source = 0;
    VertexId range = 0;
    MultiDegree degree;

    bool isVertex() const { return word.empty(); }
    std::size_t length() const { return word.size(); }

    bool operator==(const Path& o) const {
        return word == o.word && (!word.empty() || source == o.source);
    }
    bool operator!=(const Path& o) const { return !(*this == o); }
    bool operator<(const Path& o) const {
        if (word != o.word) return word < o.word;
        return word.empty() && source < o.source;
    }
};

// A validated k-graph: colored graph, factorization squares, and (for a
// color subset) the restriction data. Instances are immutable and always
// satisfy the axioms checked by validate(); clients obtain them only
// through build() or restrict().
class KGraph : public std::enable_shared_from_this<KGraph> {
  public:
    // Validates and builds. Checks, in order: source-freeness per color,
    // square totality/uniqueness/bijectivity per color pair, and for three
    // or more colors the cube condition (both rewrite routes around every
    // tricolored composable word agree).
    static KGraphPtr build(ColoredGraph graph, const SquareSet& squares);

    // Skips validation. Exists so the verification suites can be pointed at
    // deliberately broken square data in tests; never used on real input.
    static KGraphPtr buildUnchecked(ColoredGraph graph, const SquareSet& squares);

    // The |J|-graph on the same vertices with only J-colored edges and
    // J-internal squares, revalidated. J holds 1-based colors of this graph.
    KGraphPtr restrict(const std::vector<int>& J) const;

    int k() const { return static_cast<int>(activeColors_.size()); }
    const ColoredGraph& base() const { return *base_; }
    std::size_t vertexCount() const { return base_->vertexCount(); }

    // Active colors as 1-based colors of the base graph.
    const std::vector<int>& activeColors() const { return activeColors_; }

    // Edges of this graph (subset of base edge ids when restricted).
    const std::vector<EdgeId>& edgeIds() const { return edgeIds_; }
    const std::vector<EdgeId>& edgesWithRange(int color, VertexId v) const;  // color 1-based here
    const std::vector<EdgeId>& edgesOfColor(int color) const;

    int colorOf(EdgeId e) const;  // 1-based color in this graph
    VertexId sourceOf(EdgeId e) const { return base_->edges[e].source; }
    VertexId rangeOf(EdgeId e) const { return base_->edges[e].range; }
    const std::string& edgeName(EdgeId e) const { return base_->edges[e].name; }
    const std::string& vertexName(VertexId v) const { return base_->vertexNames[v]; }

    // The square flip: for a mixed-color composable pair (a, b) (b traversed
    // first) returns the unique (b', a') with a∘b = b'∘a'. For equal colors
    // returns (a, b) itself, matching the identity flip on a single color.
    std::pair<EdgeId, EdgeId> flip(EdgeId a, EdgeId b) const;

    // --- paths ---
    Path vertexPath(VertexId v) const;
    Path edgePath(EdgeId e) const;
    Path pathFromWord(const std::vector<EdgeId>& word) const;  // canonicalizes; throws if not composable

    // All canonical paths of the given degree, optionally with fixed range.
    std::vector<Path> pathsOfDegree(const MultiDegree& n,
                                    std::optional<VertexId> range = std::nullopt) const;

    // p = concat(mu, nu) requires s(mu) = r(nu); degree adds.
    Path concat(const Path& mu, const Path& nu) const;

    // Unique (mu, nu) with p = mu∘nu and the given degrees. Throws BadSplit.
    std::pair<Path, Path> factorize(const Path& p, const MultiDegree& dmu,
                                    const MultiDegree& dnu) const;

    // All (eta, zeta) with mu∘eta = nu∘zeta of degree d(mu) ∨ d(nu).
    std::vector<std::pair<Path, Path>> minimalCommonExtensions(const Path& mu,
                                                               const Path& nu) const;

    bool samePresentation(const KGraph& other) const;

    MultiDegree zeroDegree() const { return MultiDegree::zero(activeColors_.size()); }
    MultiDegree unitDegree(int color) const;  // e_color, 1-based

    std::string pathString(const Path& p) const;

  private:
    KGraph() = default;

    void indexEdges();
    void validate() const;
    void checkSquares(const SquareSet& squares);  // fills flip table
    void checkCubes() const;

    Path canonicalize(std::vector<EdgeId> word) const;
    bool composable(const std::vector<EdgeId>& word) const;

    std::shared_ptr<const ColoredGraph> base_;
    std::vector<int> activeColors_;            // ascending base colors
    std::vector<int> colorPos_;                // base color -> 0-based position, or -1
    std::vector<EdgeId> edgeIds_;              // active edges
    std::vector<std::vector<EdgeId>> byColor_;                // [pos] -> edges
    std::vector<std::vector<std::vector<EdgeId>>> inEdges_;   // [pos][vertex] -> edges with range v
    std::unordered_map<std::uint64_t, std::pair<EdgeId, EdgeId>> flip_;
};

}  // namespace kgv

#endif  // KGV_KGRAPH_HPP
