#ifndef KGV_CENSUS_HPP
#define KGV_CENSUS_HPP

#include "kgv/ladder.hpp"

namespace kgv {

// One graded cell of the census: the rank of the direct monomial span of
// KP(sub(m+1)) at the truncation against the rank of the span of bounded
// dictionary words t(x_1)…t(x_a) π(S) t(y_1)*…t(y_b)*. The two families
// span the same subspace by construction, so equal ranks are the expected
// verdict; a mismatch means the dictionary failed to cover the truncation.
struct CensusEntry {
    MultiDegree grade;
    std::size_t directRank = 0;
    std::size_t dictRank = 0;
    std::size_t directCount = 0;  // monomials enumerated
    std::size_t dictWords = 0;    // nonzero word images enumerated

    bool agree() const { return directRank == dictRank; }
};

// Grades range over |δ| <= level; monomial degrees and word budgets are
// bounded by the same level in total degree. Throws LevelTooLarge when the
// enumeration would exceed the guard.
std::vector<CensusEntry> census(const Ladder& ladder, int m, int level,
                                std::size_t guard = 200000);

}  // namespace kgv

#endif  // KGV_CENSUS_HPP
