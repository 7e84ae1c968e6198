#ifndef KGV_CHECKS_HPP
#define KGV_CHECKS_HPP

#include "kgv/corr.hpp"
#include "kgv/ladder.hpp"
#include "kgv/report.hpp"

namespace kgv {

// Enumeration helpers shared by the identity suites. Degrees are bounded by
// the total |d(mu)| <= maxSide and |d(nu)| <= maxSide.
std::vector<KPMonomial> monomialsUpTo(const KGraphPtr& graph, int maxSide);
std::vector<KPMonomial> monomialsAnchored(const KGraphPtr& graph, VertexId rangeAnchor,
                                          int maxSide);
std::vector<KPMonomial> monomialsAnchoredTotal(const KGraphPtr& graph, VertexId rangeAnchor,
                                               int totalBudget);

// (π, t) on the stage-m module into KP(sub(m+1)): inner-product relation,
// module relation, covariance through explicit rank-one sums, and the
// σ_i σ_j = σ_j σ_i ∘ θ_ij intertwining, all on enumerated bases.
VerificationReport checkRepresentation(const Ladder& ladder, int m, int coeffLevel);

// Rθ on E Y_i ⊗ E Y_j: a module-map (left actions of p_v, s_f, s_f*
// intertwined, right action equivariant, pairings preserved against local
// units) on the enumerated basis.
VerificationReport checkRthetaModuleMap(const Ladder& ladder, int i, int j, int coeffLevel);

// Module-operation sanity: ν round trip, adjointness of the edge actions,
// right-module associativity, Rθ_ii = id and Rθ symmetry.
VerificationReport checkModuleOps(const Ladder& ladder, int coeffLevel);

// The two ν-coherence lemmas behind the Rθ generating system.
VerificationReport checkMlem1(const Ladder& ladder, int coeffLevel);
VerificationReport checkMlem2(const Ladder& ladder, int coeffLevel);

// Rθ hexagon: the four-flip route, its two-flip right side, and the
// flattened θ-composite route must all agree on formal basis triples.
VerificationReport checkRthetaHexagon(const Ladder& ladder, int coeffLevel);

// V̄_j(1 ⊗ V̄_i)(θ_ij ⊗ 1) = V̄_i(1 ⊗ V̄_j) into KP of the full graph.
VerificationReport checkVeq(const Ladder& ladder, int coeffLevel);

// The stage-(m+1) dictionary: left actions of the three generator kinds
// intertwine through φ((x ⊗ S) ⊗ T) = x ⊗ π(S)T.
VerificationReport checkIotaPhi(const Ladder& ladder, int m, int j, int coeffLevel);

}  // namespace kgv

#endif  // KGV_CHECKS_HPP
