#ifndef KGV_LADDER_HPP
#define KGV_LADDER_HPP

#include <array>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "kgv/kpalg.hpp"

namespace kgv {

// The prefix tower of a k-graph: sub(m) is the m-graph on the colors
// {1..m}, sub(k) the graph itself. KP elements over different rungs are
// related by promote(). All ladder machinery lives over one Ladder instance
// so graph identities line up.
class Ladder {
  public:
    explicit Ladder(KGraphPtr full);

    int k() const { return full_->k(); }
    const KGraphPtr& full() const { return full_; }
    const KGraphPtr& sub(int m) const;  // m in 1..k

    // Inclusion KP(sub(m)) -> KP(sub(n)) for m <= n: same edge words, degrees
    // zero-padded on the new colors.
    KPElement promote(const KPElement& x, int n) const;

    int levelOf(const KGraphPtr& graph) const;  // which rung a graph is, or -1

  private:
    KGraphPtr full_;
    std::vector<KGraphPtr> subs_;
};

// Element of Y_{c_1} ⊗ ... ⊗ Y_{c_n} ⊗ KP(sub(m)): finitely supported map
// from composable edge words to coefficients, with every coefficient
// supported at the source of its word (T = p_{s(last edge)} · T). One-edge
// shapes are the iterated modules E^m Y_j; two- and three-edge shapes appear
// inside the ν-map identities.
class LadderElement {
  public:
    LadderElement(const Ladder* ladder, int m, std::vector<int> colors);

    static LadderElement basis(const Ladder* ladder, int m, const std::vector<EdgeId>& word,
                               const KPElement& coeff);
    // e ⊗ p_{s(e)}: the local-unit element standing in for e ⊗ 1
    static LadderElement localUnit(const Ladder* ladder, int m, EdgeId e);

    const Ladder* ladder() const { return ladder_; }
    int m() const { return m_; }
    const std::vector<int>& colors() const { return colors_; }
    const std::map<std::vector<EdgeId>, KPElement>& coeffs() const { return coeffs_; }
    bool isZeroLiteral() const { return coeffs_.empty(); }

    // Adds word ⊗ coeff. Non-composable words are zero; the coefficient is
    // projected onto the support corner p_{s(last)}.
    void add(const std::vector<EdgeId>& word, const KPElement& coeff);

    LadderElement operator+(const LadderElement& o) const;
    LadderElement operator-(const LadderElement& o) const;
    LadderElement operator*(const Rational& c) const;

    // right module structure over KP(sub(m))
    LadderElement actRight(const KPElement& T) const;

    // left action of the generators of KP(sub(m)); edge colors must be <= m
    LadderElement actVertex(VertexId v) const;
    LadderElement actEdge(EdgeId f) const;
    LadderElement actEdgeStar(EdgeId f) const;
    // left action of a full KP(sub(m)) element, monomial words composed
    LadderElement actLeft(const KPElement& S) const;

    std::string str() const;

  private:
    const Ladder* ladder_;
    int m_;
    std::vector<int> colors_;
    std::map<std::vector<EdgeId>, KPElement> coeffs_;
};

// <x, y> = sum_w S_w^* T_w in KP(sub(m)); shapes must agree.
KPElement ladderInner(const LadderElement& x, const LadderElement& y);

// Exact comparison: same shape and kp-equal coefficients wordwise.
bool ladderEquals(const LadderElement& a, const LadderElement& b);

// The balanced flatten: words concatenate and the left coefficient acts on
// the right factor. With one-edge factors this is the ν map
// x ⊗ T ⊗ (y ⊗ S) -> x ⊗ (T · (y ⊗ S)); longer left words give the
// grouped ν variants.
LadderElement flattenOnto(const LadderElement& left, const LadderElement& right);

// Inverse of the flatten: split after `pos` edges, putting the local unit on
// the left factor.
using FormalPair = std::vector<std::pair<LadderElement, LadderElement>>;
FormalPair splitAt(const LadderElement& flat, std::size_t pos);

LadderElement flattenPair(const FormalPair& pair);

// θ ⊗ 1 on a flattened word: flips adjacent edges at `pos` through the
// square (identity on equal colors).
LadderElement thetaAt(const LadderElement& flat, std::size_t pos);

// Rθ = ν^{-1} (θ ⊗ 1) ν on formal tensors of one-edge modules.
FormalPair rthetaApply(const FormalPair& x);

// Rθ applied to two adjacent factors of formal triples.
using FormalTriple = std::vector<std::array<LadderElement, 3>>;
FormalTriple rthetaOnTriple(const FormalTriple& x, std::size_t pos);

LadderElement flattenTripleRightFirst(const FormalTriple& t);  // x ⊗ (y ⊗ z) grouping
LadderElement flattenTripleLeftFirst(const FormalTriple& t);   // (x ⊗ y) ⊗ z grouping

// V̄: absorb the edge leg into the algebra, e ⊗ T -> s_e · T over sub(m).
// The edge color must be <= m.
KPElement absorb(const LadderElement& x);

// The σ dictionary at stage m: generators of the algebra generated by
// (π, t) on E^m Y_{m+1} land in KP(sub(m+1)).
class SigmaRep {
  public:
    SigmaRep(const Ladder* ladder, int m);

    int m() const { return m_; }
    const KGraphPtr& target() const;  // sub(m+1)

    KPElement sigma0(VertexId v) const;          // p_v
    KPElement sigma(int color, EdgeId e) const;  // s_e, color <= m+1
    KPElement pi(const KPElement& S) const;      // promote from sub(m)
    KPElement t(const LadderElement& x) const;   // sum s_e · promote(T_e)

  private:
    const Ladder* ladder_;
    int m_;
};

SigmaRep makeSigma(const Ladder& ladder, int m);

}  // namespace kgv

#endif  // KGV_LADDER_HPP
