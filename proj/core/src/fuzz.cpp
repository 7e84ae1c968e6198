#include "kgv/fuzz.hpp"

#include <algorithm>
#include <map>

namespace kgv {

ElementFuzzer::ElementFuzzer(KGraphPtr graph, std::uint64_t seed, int maxDegreeTotal)
    : graph_(std::move(graph)), rng_(seed), maxDeg_(maxDegreeTotal) {}

MultiDegree ElementFuzzer::randomDegree() {
    MultiDegree d = graph_->zeroDegree();
    int total = static_cast<int>(rng_() % static_cast<unsigned>(maxDeg_ + 1));
    for (int i = 0; i < total; ++i) d[rng_() % d.size()] += 1;
    return d;
}

KPMonomial ElementFuzzer::randomMonomial() {
    for (int attempt = 0; attempt < 8; ++attempt) {
        auto mus = graph_->pathsOfDegree(randomDegree());
        if (mus.empty()) continue;
        const Path& mu = mus[rng_() % mus.size()];
        std::vector<Path> nus;
        for (const auto& nu : graph_->pathsOfDegree(randomDegree()))
            if (nu.source == mu.source) nus.push_back(nu);
        if (nus.empty()) return KPMonomial{mu, graph_->vertexPath(mu.source)};
        return KPMonomial{mu, nus[rng_() % nus.size()]};
    }
    Path v = graph_->vertexPath(0);
    return KPMonomial{v, v};
}

Rational ElementFuzzer::randomCoeff() {
    static const int nums[] = {1, -1, 2, -2, 3, 1, -1, 5};
    static const int dens[] = {1, 1, 1, 2, 2, 3, 1, 1};
    auto i = rng_() % 8;
    return rational_of(nums[i], dens[i]);
}

KPElement ElementFuzzer::randomElement(int maxTerms) {
    KPElement x(graph_);
    int n = 1 + static_cast<int>(rng_() % static_cast<unsigned>(maxTerms));
    for (int i = 0; i < n; ++i) x.add(randomMonomial(), randomCoeff());
    return x;
}

namespace {

struct EdgeDraft {
    std::string id;
    int color;
    int source;
    int range;
};

// composable ordered pair lists per (range, source) block
using Block = std::pair<int, int>;

std::map<Block, std::vector<std::pair<std::size_t, std::size_t>>> blockPairs(
    const std::vector<EdgeDraft>& edges, int colorFirstTraversed, int colorLast) {
    // pairs (a, b) with a of colorLast, b of colorFirstTraversed, s(a) = r(b)
    std::map<Block, std::vector<std::pair<std::size_t, std::size_t>>> out;
    for (std::size_t a = 0; a < edges.size(); ++a) {
        if (edges[a].color != colorLast) continue;
        for (std::size_t b = 0; b < edges.size(); ++b) {
            if (edges[b].color != colorFirstTraversed) continue;
            if (edges[a].source != edges[b].range) continue;
            out[{edges[a].range, edges[b].source}].push_back({a, b});
        }
    }
    return out;
}

}  // namespace

std::vector<GraphDocument> fuzzGraphs(const FuzzParams& params) {
    if (params.k < 1) throw Error(ErrorKind::MalformedInput, "k must be positive");
    if (static_cast<int>(params.edgesPerColor.size()) != params.k)
        throw Error(ErrorKind::MalformedInput, "need one edge count per color");
    if (params.vertices < 1) throw Error(ErrorKind::MalformedInput, "need at least one vertex");

    // counting argument: source-freeness needs at least one in-edge of every
    // color at every vertex
    for (int c = 0; c < params.k; ++c) {
        if (params.edgesPerColor[c] < params.vertices)
            throw Error(ErrorKind::GenerationExhausted,
                        "color " + std::to_string(c + 1) + " has fewer edges than vertices; no "
                        "source-free assignment exists");
    }

    std::mt19937_64 rng(params.seed);
    std::vector<GraphDocument> out;

    for (int g = 0; g < params.count; ++g) {
        bool made = false;
        for (int attempt = 0; attempt < params.retryBudget && !made; ++attempt) {
            // sample endpoints; ranges cover every vertex per color
            std::vector<EdgeDraft> edges;
            for (int c = 0; c < params.k; ++c) {
                for (int t = 0; t < params.edgesPerColor[c]; ++t) {
                    EdgeDraft e;
                    e.id = std::string(1, static_cast<char>('a' + c)) + std::to_string(t);
                    e.color = c + 1;
                    e.range = t < params.vertices
                                  ? t
                                  : static_cast<int>(rng() % static_cast<unsigned>(params.vertices));
                    e.source = static_cast<int>(rng() % static_cast<unsigned>(params.vertices));
                    edges.push_back(e);
                }
            }

            // block-count compatibility before any square sampling
            bool compatible = true;
            for (int ci = 1; ci <= params.k && compatible; ++ci) {
                for (int cj = ci + 1; cj <= params.k && compatible; ++cj) {
                    auto forward = blockPairs(edges, cj, ci);   // e∘g words: e color ci last
                    auto backward = blockPairs(edges, ci, cj);  // g'∘e' words
                    if (forward.size() != backward.size()) {
                        compatible = false;
                        break;
                    }
                    for (const auto& [block, list] : forward) {
                        auto it = backward.find(block);
                        if (it == backward.end() || it->second.size() != list.size()) {
                            compatible = false;
                            break;
                        }
                    }
                }
            }
            if (!compatible) continue;

            // sample a random bijection per block for each color pair
            SquareSet squares;
            for (int ci = 1; ci <= params.k; ++ci) {
                for (int cj = ci + 1; cj <= params.k; ++cj) {
                    auto forward = blockPairs(edges, cj, ci);
                    auto backward = blockPairs(edges, ci, cj);
                    for (auto& [block, list] : forward) {
                        auto targets = backward.at(block);
                        for (std::size_t t = targets.size(); t > 1; --t)
                            std::swap(targets[t - 1], targets[rng() % t]);
                        for (std::size_t t = 0; t < list.size(); ++t) {
                            squares.push_back(Square{edges[list[t].first].id,
                                                     edges[list[t].second].id,
                                                     edges[targets[t].first].id,
                                                     edges[targets[t].second].id});
                        }
                    }
                }
            }

            GraphDocument doc;
            doc.k = params.k;
            for (int v = 0; v < params.vertices; ++v) doc.vertices.push_back("v" + std::to_string(v));
            for (const auto& e : edges)
                doc.edges.emplace_back(e.id, e.color, "v" + std::to_string(e.source),
                                       "v" + std::to_string(e.range));
            doc.squares = squares;

            try {
                doc.build();  // cube condition for k >= 3; cheap revalidation otherwise
            } catch (const Error&) {
                continue;
            }
            out.push_back(std::move(doc));
            made = true;
        }
        if (!made)
            throw Error(ErrorKind::GenerationExhausted,
                        "retry budget exhausted after " + std::to_string(params.retryBudget) +
                            " attempts");
    }
    return out;
}

}  // namespace kgv
