#ifndef KGV_KPALG_HPP
#define KGV_KPALG_HPP

#include <map>
#include <string>
#include <vector>

#include "kgv/kgraph.hpp"
#include "kgv/rational.hpp"

namespace kgv {

// Monomial s_mu s_nu* with s(mu) = s(nu). Both paths empty at the same
// vertex gives the projection p_v.
struct KPMonomial {
    Path mu;
    Path nu;

    bool isVertex() const { return mu.isVertex() && nu.isVertex(); }

    // The Z^k grade d(mu) - d(nu).
    MultiDegree grade() const { return mu.degree - nu.degree; }

    bool operator<(const KPMonomial& o) const {
        if (!(mu == o.mu)) return mu < o.mu;
        return nu < o.nu;
    }
    bool operator==(const KPMonomial& o) const { return mu == o.mu && nu == o.nu; }
};

// Exact-rational linear combination of monomials over a fixed (sub-)k-graph.
// The coefficient map never stores zeros. Operand graphs are compared by
// identity: elements interoperate only when built from the same KGraph
// instance.
class KPElement {
  public:
    KPElement() = default;
    explicit KPElement(KGraphPtr graph) : graph_(std::move(graph)) {}

    static KPElement zero(KGraphPtr graph) { return KPElement(std::move(graph)); }
    static KPElement vertex(KGraphPtr graph, VertexId v);                // p_v
    static KPElement edge(KGraphPtr graph, EdgeId e);                    // s_e
    static KPElement path(KGraphPtr graph, const Path& mu);              // s_mu
    static KPElement monomial(KGraphPtr graph, const Path& mu, const Path& nu,
                              const Rational& c = 1);

    const KGraphPtr& graph() const { return graph_; }
    const std::map<KPMonomial, Rational>& terms() const { return terms_; }
    bool isZeroLiteral() const { return terms_.empty(); }  // no terms stored (not the oracle)

    void add(const KPMonomial& m, const Rational& c);

    KPElement operator+(const KPElement& o) const;
    KPElement operator-(const KPElement& o) const;
    KPElement operator*(const KPElement& o) const;  // the algebra product
    KPElement operator*(const Rational& c) const;
    KPElement operator-() const;

    // involution: (s_mu s_nu*)* = s_nu s_mu*, conjugate-linear (trivial over Q)
    KPElement star() const;

    // Rewrites the grade-delta component so every mu has degree exactly M.
    // Other components are untouched; the value in the algebra is unchanged.
    KPElement expand(const MultiDegree& delta, const MultiDegree& M) const;

    // Greedy inverse expansion to the display normal form; idempotent and
    // value-preserving.
    KPElement collapse() const;

    // The grade-delta part.
    KPElement component(const MultiDegree& delta) const;
    std::vector<MultiDegree> grades() const;

    // Decidable equality: per grade, expand both sides to the componentwise
    // max level and compare coefficients. Exact.
    bool equals(const KPElement& o) const;
    bool isZero() const { return equals(zero(graph_)); }

    std::string str() const;  // element literal, deterministic

  private:
    void requireSameGraph(const KPElement& o) const;

    KGraphPtr graph_;
    std::map<KPMonomial, Rational> terms_;
};

inline KPElement operator*(const Rational& c, const KPElement& x) { return x * c; }

// Dimension of the linear span, by gradewise expansion to a common level and
// exact Gaussian elimination.
std::size_t rankOfSpan(const std::vector<KPElement>& span);

}  // namespace kgv

#endif  // KGV_KPALG_HPP
