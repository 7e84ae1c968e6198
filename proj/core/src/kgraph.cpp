#include "kgv/kgraph.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace kgv {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::MalformedInput: return "MalformedInput";
        case ErrorKind::SourceViolation: return "SourceViolation";
        case ErrorKind::MissingSquare: return "MissingSquare";
        case ErrorKind::AmbiguousSquare: return "AmbiguousSquare";
        case ErrorKind::NotBijective: return "NotBijective";
        case ErrorKind::CubeFailure: return "CubeFailure";
        case ErrorKind::BadSplit: return "BadSplit";
        case ErrorKind::GraphMismatch: return "GraphMismatch";
        case ErrorKind::LevelTooLow: return "LevelTooLow";
        case ErrorKind::LevelTooLarge: return "LevelTooLarge";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::ColorOutOfRange: return "ColorOutOfRange";
        case ErrorKind::GenerationExhausted: return "GenerationExhausted";
    }
    return "UnknownError";
}

namespace {

std::uint64_t pairKey(EdgeId a, EdgeId b) {
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
}

}  // namespace

ColoredGraph ColoredGraph::make(
    int k, const std::vector<std::string>& vertices,
    const std::vector<std::tuple<std::string, int, std::string, std::string>>& edgeSpecs) {
    ColoredGraph g;
    if (k < 1) throw Error(ErrorKind::MalformedInput, "k must be positive");
    g.k = k;
    for (const auto& v : vertices) {
        if (g.vertexIndex.count(v))
            throw Error(ErrorKind::MalformedInput, "duplicate vertex id '" + v + "'");
        g.vertexIndex[v] = static_cast<VertexId>(g.vertexNames.size());
        g.vertexNames.push_back(v);
    }
    for (const auto& [id, color, src, rng] : edgeSpecs) {
        if (g.edgeIndex.count(id))
            throw Error(ErrorKind::MalformedInput, "duplicate edge id '" + id + "'");
        if (color < 1 || color > k)
            throw Error(ErrorKind::MalformedInput, "edge '" + id + "' has color out of range");
        auto sIt = g.vertexIndex.find(src);
        auto rIt = g.vertexIndex.find(rng);
        if (sIt == g.vertexIndex.end() || rIt == g.vertexIndex.end())
            throw Error(ErrorKind::MalformedInput, "edge '" + id + "' references unknown vertex");
        g.edgeIndex[id] = static_cast<EdgeId>(g.edges.size());
        g.edges.push_back(Edge{id, color, sIt->second, rIt->second});
    }
    return g;
}

KGraphPtr KGraph::build(ColoredGraph graph, const SquareSet& squares) {
    auto kg = std::shared_ptr<KGraph>(new KGraph());
    kg->base_ = std::make_shared<const ColoredGraph>(std::move(graph));
    kg->activeColors_.resize(kg->base_->k);
    for (int c = 1; c <= kg->base_->k; ++c) kg->activeColors_[c - 1] = c;
    kg->indexEdges();
    kg->validate();
    kg->checkSquares(squares);
    kg->checkCubes();
    return kg;
}

KGraphPtr KGraph::buildUnchecked(ColoredGraph graph, const SquareSet& squares) {
    auto kg = std::shared_ptr<KGraph>(new KGraph());
    kg->base_ = std::make_shared<const ColoredGraph>(std::move(graph));
    kg->activeColors_.resize(kg->base_->k);
    for (int c = 1; c <= kg->base_->k; ++c) kg->activeColors_[c - 1] = c;
    kg->indexEdges();
    // record flips without any totality/bijectivity/cube checks
    for (const auto& sq : squares) {
        auto need = [&](const std::string& id) {
            auto it = kg->base_->edgeIndex.find(id);
            if (it == kg->base_->edgeIndex.end())
                throw Error(ErrorKind::MalformedInput, "square references unknown edge '" + id + "'");
            return it->second;
        };
        EdgeId e = need(sq.e), g = need(sq.g), gp = need(sq.gp), ep = need(sq.ep);
        kg->flip_[pairKey(e, g)] = {gp, ep};
        kg->flip_[pairKey(gp, ep)] = {e, g};
    }
    return kg;
}

void KGraph::indexEdges() {
    colorPos_.assign(base_->k + 1, -1);
    for (std::size_t i = 0; i < activeColors_.size(); ++i) colorPos_[activeColors_[i]] = static_cast<int>(i);

    byColor_.assign(activeColors_.size(), {});
    inEdges_.assign(activeColors_.size(), std::vector<std::vector<EdgeId>>(base_->vertexCount()));
    edgeIds_.clear();
    for (EdgeId e = 0; e < base_->edges.size(); ++e) {
        int pos = colorPos_[base_->edges[e].color];
        if (pos < 0) continue;
        edgeIds_.push_back(e);
        byColor_[pos].push_back(e);
        inEdges_[pos][base_->edges[e].range].push_back(e);
    }
}

void KGraph::validate() const {
    for (std::size_t pos = 0; pos < activeColors_.size(); ++pos) {
        for (VertexId v = 0; v < base_->vertexCount(); ++v) {
            if (inEdges_[pos][v].empty()) {
                throw Error(ErrorKind::SourceViolation,
                            "vertex '" + base_->vertexNames[v] + "' receives no edge of color " +
                                std::to_string(activeColors_[pos]));
            }
        }
    }
}

void KGraph::checkSquares(const SquareSet& squares) {
    auto edgeOf = [&](const std::string& id) {
        auto it = base_->edgeIndex.find(id);
        if (it == base_->edgeIndex.end())
            throw Error(ErrorKind::MalformedInput, "square references unknown edge '" + id + "'");
        int pos = colorPos_[base_->edges[it->second].color];
        if (pos < 0)
            throw Error(ErrorKind::MalformedInput, "square references inactive edge '" + id + "'");
        return it->second;
    };
    auto describe = [&](EdgeId a, EdgeId b) {
        return "(" + base_->edges[a].name + "," + base_->edges[b].name + ")";
    };

    flip_.clear();
    std::unordered_map<std::uint64_t, std::pair<EdgeId, EdgeId>> backward;
    for (const auto& sq : squares) {
        EdgeId e = edgeOf(sq.e), g = edgeOf(sq.g), gp = edgeOf(sq.gp), ep = edgeOf(sq.ep);
        int ci = base_->edges[e].color, cj = base_->edges[g].color;
        if (!(ci < cj) || base_->edges[gp].color != cj || base_->edges[ep].color != ci)
            throw Error(ErrorKind::MalformedInput,
                        "square " + describe(e, g) + " -> " + describe(gp, ep) +
                            " violates the color pattern (i<j, i, j)");
        // e∘g = g'∘e': inner composability and equal outer range/source
        if (base_->edges[e].source != base_->edges[g].range ||
            base_->edges[gp].source != base_->edges[ep].range ||
            base_->edges[e].range != base_->edges[gp].range ||
            base_->edges[g].source != base_->edges[ep].source)
            throw Error(ErrorKind::MalformedInput,
                        "square " + describe(e, g) + " -> " + describe(gp, ep) + " is not composable");
        if (flip_.count(pairKey(e, g)))
            throw Error(ErrorKind::AmbiguousSquare, "pair " + describe(e, g) + " covered twice");
        flip_[pairKey(e, g)] = {gp, ep};
        if (backward.count(pairKey(gp, ep)))
            throw Error(ErrorKind::NotBijective, "pair " + describe(gp, ep) + " hit twice by the flip");
        backward[pairKey(gp, ep)] = {e, g};
    }

    // totality on every mixed-color composable pair, in both orientations
    for (std::size_t pi = 0; pi < activeColors_.size(); ++pi) {
        for (std::size_t pj = pi + 1; pj < activeColors_.size(); ++pj) {
            for (EdgeId e : byColor_[pi]) {
                for (EdgeId g : byColor_[pj]) {
                    if (base_->edges[e].source == base_->edges[g].range &&
                        !flip_.count(pairKey(e, g)))
                        throw Error(ErrorKind::MissingSquare, "no square for pair " + describe(e, g));
                    if (base_->edges[g].source == base_->edges[e].range &&
                        !backward.count(pairKey(g, e)))
                        throw Error(ErrorKind::MissingSquare,
                                    "no square with right side " + describe(g, e));
                }
            }
        }
    }
    for (const auto& [key, val] : backward) flip_[key] = val;
}

std::pair<EdgeId, EdgeId> KGraph::flip(EdgeId a, EdgeId b) const {
    if (base_->edges[a].color == base_->edges[b].color) return {a, b};
    auto it = flip_.find(pairKey(a, b));
    if (it == flip_.end())
        throw Error(ErrorKind::MissingSquare,
                    "no square for pair (" + base_->edges[a].name + "," + base_->edges[b].name + ")");
    return it->second;
}

int KGraph::colorOf(EdgeId e) const {
    int pos = colorPos_[base_->edges[e].color];
    return pos + 1;
}

const std::vector<EdgeId>& KGraph::edgesWithRange(int color, VertexId v) const {
    return inEdges_[color - 1][v];
}

const std::vector<EdgeId>& KGraph::edgesOfColor(int color) const { return byColor_[color - 1]; }

MultiDegree KGraph::unitDegree(int color) const {
    return MultiDegree::unit(activeColors_.size(), static_cast<std::size_t>(color - 1));
}

bool KGraph::composable(const std::vector<EdgeId>& word) const {
    for (std::size_t t = 0; t + 1 < word.size(); ++t)
        if (base_->edges[word[t]].source != base_->edges[word[t + 1]].range) return false;
    return true;
}

// Bubble the word into ascending color order by adjacent square swaps.
// Termination: each swap removes one color inversion. The result does not
// depend on the swap order (cube condition), but we fix leftmost-first so
// intermediate states are reproducible.
Path KGraph::canonicalize(std::vector<EdgeId> word) const {
    if (!composable(word))
        throw Error(ErrorKind::MalformedInput, "edge word is not composable");
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::size_t t = 0; t + 1 < word.size(); ++t) {
            if (colorOf(word[t]) > colorOf(word[t + 1])) {
                auto [x, y] = flip(word[t], word[t + 1]);
                word[t] = x;
                word[t + 1] = y;
                moved = true;
            }
        }
    }
    Path p;
    p.degree = zeroDegree();
    for (EdgeId e : word) p.degree[colorOf(e) - 1] += 1;
    p.word = std::move(word);
    if (!p.word.empty()) {
        p.range = base_->edges[p.word.front()].range;
        p.source = base_->edges[p.word.back()].source;
    }
    return p;
}

Path KGraph::vertexPath(VertexId v) const {
    Path p;
    p.source = p.range = v;
    p.degree = zeroDegree();
    return p;
}

Path KGraph::edgePath(EdgeId e) const {
    Path p;
    p.word = {e};
    p.source = base_->edges[e].source;
    p.range = base_->edges[e].range;
    p.degree = unitDegree(colorOf(e));
    return p;
}

Path KGraph::pathFromWord(const std::vector<EdgeId>& word) const { return canonicalize(word); }

std::vector<Path> KGraph::pathsOfDegree(const MultiDegree& n, std::optional<VertexId> range) const {
    if (n.size() != activeColors_.size())
        throw Error(ErrorKind::MalformedInput, "degree length does not match the color count");
    if (!n.nonNegative()) throw Error(ErrorKind::MalformedInput, "degree must be nonnegative");

    // target color pattern of the canonical word, ascending
    std::vector<int> pattern;
    for (std::size_t pos = 0; pos < n.size(); ++pos)
        pattern.insert(pattern.end(), static_cast<std::size_t>(n[pos]), static_cast<int>(pos + 1));

    std::vector<Path> out;
    if (pattern.empty()) {
        for (VertexId v = 0; v < base_->vertexCount(); ++v) {
            if (range && *range != v) continue;
            out.push_back(vertexPath(v));
        }
        return out;
    }

    std::vector<EdgeId> word(pattern.size());
    // fill from position 0 (last traversed); the range constraint binds there
    auto rec = [&](auto&& self, std::size_t t) -> void {
        if (t == pattern.size()) {
            Path p;
            p.word = word;
            p.range = base_->edges[word.front()].range;
            p.source = base_->edges[word.back()].source;
            p.degree = n;
            out.push_back(std::move(p));
            return;
        }
        int color = pattern[t];
        if (t == 0) {
            if (range) {
                for (EdgeId e : inEdges_[color - 1][*range]) {
                    word[0] = e;
                    self(self, 1);
                }
            } else {
                for (EdgeId e : byColor_[color - 1]) {
                    word[0] = e;
                    self(self, 1);
                }
            }
        } else {
            VertexId need = base_->edges[word[t - 1]].source;
            for (EdgeId e : inEdges_[color - 1][need]) {
                word[t] = e;
                self(self, t + 1);
            }
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

Path KGraph::concat(const Path& mu, const Path& nu) const {
    if (mu.source != nu.range)
        throw Error(ErrorKind::MalformedInput, "paths are not composable: s(mu) != r(nu)");
    std::vector<EdgeId> word = mu.word;
    word.insert(word.end(), nu.word.begin(), nu.word.end());
    if (word.empty()) return vertexPath(mu.source);
    return canonicalize(std::move(word));
}

std::pair<Path, Path> KGraph::factorize(const Path& p, const MultiDegree& dmu,
                                        const MultiDegree& dnu) const {
    if (dmu.size() != p.degree.size() || dnu.size() != p.degree.size() || !dmu.nonNegative() ||
        !dnu.nonNegative() || dmu + dnu != p.degree)
        throw Error(ErrorKind::BadSplit,
                    "split " + dmu.str() + "+" + dnu.str() + " does not sum to " + p.degree.str());

    // target pattern: canonical colors of mu, then canonical colors of nu
    std::vector<int> pattern;
    for (std::size_t pos = 0; pos < dmu.size(); ++pos)
        pattern.insert(pattern.end(), static_cast<std::size_t>(dmu[pos]), static_cast<int>(pos + 1));
    std::size_t cut = pattern.size();
    for (std::size_t pos = 0; pos < dnu.size(); ++pos)
        pattern.insert(pattern.end(), static_cast<std::size_t>(dnu[pos]), static_cast<int>(pos + 1));

    std::vector<EdgeId> word = p.word;
    for (std::size_t t = 0; t < pattern.size(); ++t) {
        if (colorOf(word[t]) == pattern[t]) continue;
        std::size_t q = t + 1;
        while (q < word.size() && colorOf(word[q]) != pattern[t]) ++q;
        // q exists because the color census of word and pattern agree
        for (; q > t; --q) {
            auto [x, y] = flip(word[q - 1], word[q]);
            word[q - 1] = x;
            word[q] = y;
        }
    }

    Path mu, nu;
    mu.word.assign(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(cut));
    nu.word.assign(word.begin() + static_cast<std::ptrdiff_t>(cut), word.end());
    mu.degree = dmu;
    nu.degree = dnu;
    if (mu.word.empty()) {
        mu.source = mu.range = nu.word.empty() ? p.source : base_->edges[nu.word.front()].range;
    } else {
        mu.range = base_->edges[mu.word.front()].range;
        mu.source = base_->edges[mu.word.back()].source;
    }
    if (nu.word.empty()) {
        nu.source = nu.range = mu.word.empty() ? p.source : base_->edges[mu.word.back()].source;
    } else {
        nu.range = base_->edges[nu.word.front()].range;
        nu.source = base_->edges[nu.word.back()].source;
    }
    return {mu, nu};
}

std::vector<std::pair<Path, Path>> KGraph::minimalCommonExtensions(const Path& mu,
                                                                   const Path& nu) const {
    std::vector<std::pair<Path, Path>> out;
    if (mu.range != nu.range) return out;
    MultiDegree top = mu.degree.join(nu.degree);
    MultiDegree dEta = top - mu.degree;
    MultiDegree dZeta = top - nu.degree;
    for (const Path& eta : pathsOfDegree(dEta, mu.source)) {
        Path lambda = concat(mu, eta);
        auto [nuCand, zeta] = factorize(lambda, nu.degree, dZeta);
        if (nuCand == nu) out.emplace_back(eta, zeta);
    }
    return out;
}

void KGraph::checkCubes() const {
    if (activeColors_.size() < 3) return;
    int kk = static_cast<int>(activeColors_.size());
    for (int ci = 1; ci <= kk; ++ci) {
        for (int cj = 1; cj <= kk; ++cj) {
            for (int cl = 1; cl <= kk; ++cl) {
                if (ci == cj || cj == cl || ci == cl) continue;
                // every composable word with pattern (ci, cj, cl)
                for (EdgeId u : byColor_[ci - 1]) {
                    for (EdgeId v : inEdges_[cj - 1][base_->edges[u].source]) {
                        for (EdgeId w : inEdges_[cl - 1][base_->edges[v].source]) {
                            // route 1: swap (0,1), (1,2), (0,1)
                            EdgeId a = u, b = v, c = w;
                            std::tie(a, b) = flip(a, b);
                            std::tie(b, c) = flip(b, c);
                            std::tie(a, b) = flip(a, b);
                            // route 2: swap (1,2), (0,1), (1,2)
                            EdgeId x = u, y = v, z = w;
                            std::tie(y, z) = flip(y, z);
                            std::tie(x, y) = flip(x, y);
                            std::tie(y, z) = flip(y, z);
                            if (a != x || b != y || c != z) {
                                throw Error(ErrorKind::CubeFailure,
                                            "routes disagree on (" + base_->edges[u].name + "," +
                                                base_->edges[v].name + "," + base_->edges[w].name +
                                                ")");
                            }
                        }
                    }
                }
            }
        }
    }
}

KGraphPtr KGraph::restrict(const std::vector<int>& J) const {
    if (J.empty()) throw Error(ErrorKind::MalformedInput, "color subset must be nonempty");
    std::set<int> baseColors;
    for (int c : J) {
        if (c < 1 || c > k()) throw Error(ErrorKind::MalformedInput, "color out of range in subset");
        baseColors.insert(activeColors_[c - 1]);
    }

    auto kg = std::shared_ptr<KGraph>(new KGraph());
    kg->base_ = base_;
    kg->activeColors_.assign(baseColors.begin(), baseColors.end());
    kg->indexEdges();
    kg->validate();
    // squares internal to the subset carry over; revalidation of totality and
    // the cube condition is inherited from this graph but cheap to redo
    kg->flip_.clear();
    for (const auto& [key, val] : flip_) {
        EdgeId a = static_cast<EdgeId>(key >> 32);
        EdgeId b = static_cast<EdgeId>(key & 0xffffffffu);
        if (kg->colorPos_[base_->edges[a].color] >= 0 && kg->colorPos_[base_->edges[b].color] >= 0)
            kg->flip_[key] = val;
    }
    kg->checkCubes();
    return kg;
}

bool KGraph::samePresentation(const KGraph& other) const {
    if (base_ != other.base_) {
        if (base_->vertexNames != other.base_->vertexNames) return false;
        if (base_->edges.size() != other.base_->edges.size()) return false;
        for (std::size_t i = 0; i < base_->edges.size(); ++i) {
            const auto& a = base_->edges[i];
            const auto& b = other.base_->edges[i];
            if (a.name != b.name || a.color != b.color || a.source != b.source || a.range != b.range)
                return false;
        }
    }
    if (activeColors_ != other.activeColors_) return false;
    if (edgeIds_ != other.edgeIds_) return false;
    return flip_ == other.flip_;
}

std::string KGraph::pathString(const Path& p) const {
    if (p.isVertex()) return "p[" + base_->vertexNames[p.source] + "]";
    std::string s = "[";
    for (std::size_t i = 0; i < p.word.size(); ++i) {
        if (i) s += ",";
        s += base_->edges[p.word[i]].name;
    }
    return s + "]";
}

}  // namespace kgv
