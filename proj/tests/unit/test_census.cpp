#include <doctest.h>

#include <kgv/census.hpp>

#include "corpus.hpp"

using namespace kgv;

namespace {

const CensusEntry& entryAt(const std::vector<CensusEntry>& table, const MultiDegree& grade) {
    for (const auto& e : table)
        if (e.grade == grade) return e;
    REQUIRE(false);
    return table.front();
}

}  // namespace

TEST_CASE("census on the single-loop 2-graph") {
    Ladder lad(corpus::singleLoop2());
    auto table = census(lad, 1, 1);
    const auto& zero = entryAt(table, MultiDegree({0, 0}));
    CHECK(zero.directRank == 1);  // span{p_v}: every projection collapses to it
    CHECK(zero.dictRank == 1);
    for (const auto& e : table) {
        INFO(e.grade.str());
        CHECK(e.agree());
    }
}

TEST_CASE("census on the two-by-one 2-graph") {
    Ladder lad(corpus::twoByOneLoops());
    auto table = census(lad, 1, 1);
    const auto& g10 = entryAt(table, MultiDegree({1, 0}));
    CHECK(g10.directRank == 2);  // span{s_a, s_b}
    CHECK(g10.dictRank == 2);
    for (const auto& e : table) {
        INFO(e.grade.str());
        CHECK(e.agree());
    }

    auto deeper = census(lad, 1, 2);
    for (const auto& e : deeper) {
        INFO(e.grade.str());
        CHECK(e.agree());
    }
}

TEST_CASE("census climbs the two rungs of a 3-graph") {
    Ladder lad(corpus::singleLoop3());
    for (int m : {1, 2}) {
        auto table = census(lad, m, 1);
        for (const auto& e : table) {
            INFO("m=" << m << " grade=" << e.grade.str());
            CHECK(e.agree());
            CHECK(e.directRank > 0);
        }
    }
}

TEST_CASE("census guard trips on absurd levels") {
    Ladder lad(corpus::twoByOneLoops());
    CHECK_THROWS_AS(census(lad, 1, 6, 50), Error);
}
