#ifndef KGV_FUZZ_HPP
#define KGV_FUZZ_HPP

#include <random>

#include "kgv/graph_io.hpp"
#include "kgv/kpalg.hpp"

namespace kgv {

// Seeded random KP elements: a few terms, bounded path degrees, small
// rational coefficients. Deterministic for a fixed seed.
class ElementFuzzer {
  public:
    ElementFuzzer(KGraphPtr graph, std::uint64_t seed, int maxDegreeTotal = 2);

    MultiDegree randomDegree();
    KPMonomial randomMonomial();
    Rational randomCoeff();
    KPElement randomElement(int maxTerms = 3);

  private:
    KGraphPtr graph_;
    std::mt19937_64 rng_;
    int maxDeg_;
};

struct FuzzParams {
    int k = 2;
    int vertices = 1;
    std::vector<int> edgesPerColor;  // one entry per color
    int count = 1;
    std::uint64_t seed = 0;
    int retryBudget = 400;
};

// Generates `count` valid k-graphs. Edge endpoints are sampled, the
// per-(range,source)-block bicolored path counts are checked before any
// square sampling, squares are sampled as random block bijections, and for
// k >= 3 the cube condition is enforced by rejection. Throws
// GenerationExhausted when the retry budget runs out (in particular when the
// shape admits no source-free assignment at all, which is detected by
// counting first).
std::vector<GraphDocument> fuzzGraphs(const FuzzParams& params);

}  // namespace kgv

#endif  // KGV_FUZZ_HPP
