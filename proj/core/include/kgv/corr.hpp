#ifndef KGV_CORR_HPP
#define KGV_CORR_HPP

#include <map>
#include <string>
#include <vector>

#include "kgv/kpalg.hpp"
#include "kgv/report.hpp"

namespace kgv {

// Element of the vertex algebra A: a finitely supported function on the
// vertices, with exact rational values.
class VertexAlgElement {
  public:
    VertexAlgElement() = default;
    static VertexAlgElement delta(VertexId v) {
        VertexAlgElement a;
        a.values_[v] = 1;
        return a;
    }

    const std::map<VertexId, Rational>& values() const { return values_; }
    Rational at(VertexId v) const {
        auto it = values_.find(v);
        return it == values_.end() ? Rational(0) : it->second;
    }
    void add(VertexId v, const Rational& c);
    bool isZero() const { return values_.empty(); }

    VertexAlgElement operator+(const VertexAlgElement& o) const;
    VertexAlgElement operator-(const VertexAlgElement& o) const;
    bool operator==(const VertexAlgElement& o) const { return values_ == o.values_; }

    std::string str(const KGraph& kg) const;

  private:
    std::map<VertexId, Rational> values_;
};

// Element of an edge correspondence Y_i or of a tensor word
// Y_{c_1} ⊗ ... ⊗ Y_{c_n}: a rational combination of composable edge
// tuples (s(e_t) = r(e_{t+1})). Non-composable formal tuples are zero and
// are rejected at construction.
class CorrElement {
  public:
    CorrElement(KGraphPtr graph, std::vector<int> colors)
        : graph_(std::move(graph)), colors_(std::move(colors)) {}

    static CorrElement basis(KGraphPtr graph, const std::vector<EdgeId>& word);

    const KGraphPtr& graph() const { return graph_; }
    const std::vector<int>& colors() const { return colors_; }
    const std::map<std::vector<EdgeId>, Rational>& coeffs() const { return coeffs_; }
    bool isZero() const { return coeffs_.empty(); }

    void add(const std::vector<EdgeId>& word, const Rational& c);  // drops non-composable

    CorrElement operator+(const CorrElement& o) const;
    CorrElement operator-(const CorrElement& o) const;
    CorrElement operator*(const Rational& c) const;
    bool operator==(const CorrElement& o) const {
        return colors_ == o.colors_ && coeffs_ == o.coeffs_;
    }

    // tensor product over A (kills mismatched inner vertices)
    CorrElement tensor(const CorrElement& o) const;

    std::string str() const;

  private:
    void requireCompatible(const CorrElement& o) const;

    KGraphPtr graph_;
    std::vector<int> colors_;
    std::map<std::vector<EdgeId>, Rational> coeffs_;
};

// <x, y>_A: basis rule <e, f> = [e = f] delta_{s(e)}, extended bilinearly
// and iterated through tensor words.
VertexAlgElement corrInner(const CorrElement& x, const CorrElement& y);

CorrElement corrLeftAction(const VertexAlgElement& a, const CorrElement& x);
CorrElement corrRightAction(const CorrElement& x, const VertexAlgElement& a);

// The flip Y_i ⊗ Y_j -> Y_j ⊗ Y_i on a two-leg tensor element, and its
// positional version on longer words.
CorrElement thetaApply(const CorrElement& x);
CorrElement thetaApplyAt(const CorrElement& x, std::size_t pos);

// Finite sum of rank-one operators sum c · θ_{x,y} on a fixed tensor shape.
class RankOneSum {
  public:
    struct Term {
        CorrElement x;
        CorrElement y;
        Rational c;
    };

    void add(CorrElement x, CorrElement y, Rational c) { terms_.push_back({std::move(x), std::move(y), std::move(c)}); }
    const std::vector<Term>& terms() const { return terms_; }

    // θ_{x,y}(z) = x · <y, z>
    CorrElement apply(const CorrElement& z) const;

    // tensoring with an identity leg on the right: θ_{x,y} ⊗ 1
    RankOneSum extendRight(int color) const;

  private:
    std::vector<Term> terms_;
};

// φ(a) for the left action of A on Y_i, as an explicit finite rank-one sum:
// φ(δ_v) = Σ_{e ∈ vΛ^{e_i}} θ_{e,e}.
RankOneSum corrPhi(const KGraphPtr& graph, const VertexAlgElement& a, int color);

// Checks θ_ii = id, symmetry, the hexagon on every basis triple, and that
// every flip preserves inner products and both module actions.
VerificationReport checkGeneratingSystem(const KGraphPtr& graph);

// Product-system fiber X_n: basis and the concatenation structure map.
struct Fiber {
    MultiDegree degree;
    std::vector<Path> basis;
};

Fiber fiber(const KGraphPtr& graph, const MultiDegree& n);

// X_m ⊗ X_n -> X_{m+n} on basis pairs; zero (nullopt) when not composable.
std::optional<Path> fiberStructureMap(const KGraphPtr& graph, const Path& mu, const Path& nu);

// Verifies the structure maps are unitary: concatenation is a bijection
// from composable basis pairs onto the target fiber basis, for all degree
// splits m + n with |m + n| <= maxTotal.
VerificationReport checkFiberStructure(const KGraphPtr& graph, int maxTotal);

}  // namespace kgv

#endif  // KGV_CORR_HPP
