#include "kgv/census.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace kgv {

namespace {

// grade-wise incremental rank over a fixed expansion level
class RankAccumulator {
  public:
    RankAccumulator(MultiDegree delta, MultiDegree level)
        : delta_(std::move(delta)), level_(std::move(level)) {}

    std::size_t rank() const { return rank_; }

    void add(const KPElement& x) {
        KPElement part = x.component(delta_).expand(delta_, level_);
        std::map<std::size_t, Rational> row;
        for (const auto& [mono, c] : part.terms()) {
            auto [it, inserted] = columns_.try_emplace(mono, columns_.size());
            row[it->second] = c;
        }
        while (!row.empty()) {
            std::size_t lead = row.begin()->first;
            auto pv = pivots_.find(lead);
            if (pv == pivots_.end()) break;
            Rational factor = row.begin()->second / pv->second.begin()->second;
            for (const auto& [col, val] : pv->second) {
                auto it = row.find(col);
                if (it == row.end()) {
                    row.emplace(col, -factor * val);
                } else {
                    it->second -= factor * val;
                    if (it->second == 0) row.erase(it);
                }
            }
        }
        if (!row.empty()) {
            std::size_t lead = row.begin()->first;
            pivots_.emplace(lead, std::move(row));
            ++rank_;
        }
    }

  private:
    MultiDegree delta_;
    MultiDegree level_;
    std::map<KPMonomial, std::size_t> columns_;
    std::map<std::size_t, std::map<std::size_t, Rational>> pivots_;
    std::size_t rank_ = 0;
};

std::vector<MultiDegree> gradesUpTo(std::size_t k, int level) {
    std::vector<MultiDegree> out;
    MultiDegree cur = MultiDegree::zero(k);
    auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
        if (pos == k) {
            out.push_back(cur);
            return;
        }
        for (int c = -left; c <= left; ++c) {
            cur[pos] = c;
            self(self, pos + 1, left - std::abs(c));
        }
        cur[pos] = 0;
    };
    rec(rec, 0, level);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MultiDegree> degreesUpToTotal(const KGraphPtr& graph, int maxTotal) {
    std::vector<MultiDegree> out;
    MultiDegree cur = graph->zeroDegree();
    auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
        if (pos == cur.size()) {
            out.push_back(cur);
            return;
        }
        for (int c = 0; c <= left; ++c) {
            cur[pos] = c;
            self(self, pos + 1, left - c);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, maxTotal);
    return out;
}

}  // namespace

std::vector<CensusEntry> census(const Ladder& ladder, int m, int level, std::size_t guard) {
    if (m < 1 || m + 1 > ladder.k())
        throw Error(ErrorKind::ColorOutOfRange, "census stage must satisfy 1 <= m < k");
    if (level < 0) throw Error(ErrorKind::LevelTooLarge, "negative level");
    const KGraphPtr& low = ladder.sub(m);
    const KGraphPtr& high = ladder.sub(m + 1);
    const int stage = m + 1;
    const std::size_t kk = static_cast<std::size_t>(stage);

    MultiDegree cap = MultiDegree::zero(kk);
    for (std::size_t i = 0; i < kk; ++i) cap[i] = level;

    // ---- direct family: monomials of bounded total degree per side ----
    std::map<MultiDegree, std::vector<KPElement>> direct;
    std::size_t directTotal = 0;
    for (const auto& dm : degreesUpToTotal(high, level)) {
        for (const auto& mu : high->pathsOfDegree(dm)) {
            for (const auto& dn : degreesUpToTotal(high, level)) {
                for (const auto& nu : high->pathsOfDegree(dn)) {
                    if (nu.source != mu.source) continue;
                    MultiDegree delta = dm - dn;
                    if (delta.totalAbs() > level) continue;
                    direct[delta].push_back(KPElement::monomial(high, mu, nu));
                    if (++directTotal > guard)
                        throw Error(ErrorKind::LevelTooLarge,
                                    "direct span exceeds the enumeration guard");
                }
            }
        }
    }

    // ---- dictionary words ----
    // decorated stage edges for the t legs; costs in total degree
    struct Decorated {
        EdgeId e;
        KPMonomial inner;
        KPElement image;  // s_e · π(inner) over sub(m+1)
        int muCost;
        int nuCost;
    };
    // t-leg decorations carry at most one edge of coefficient; the middle
    // factor carries the full level, which already suffices to cover the
    // direct family
    const int legBudget = std::min(level, 1);
    std::vector<Decorated> decorated;
    for (EdgeId e : high->edgesOfColor(stage)) {
        for (const auto& dm : degreesUpToTotal(low, legBudget)) {
            for (const auto& mu : low->pathsOfDegree(dm, ladder.full()->sourceOf(e))) {
                for (const auto& dn : degreesUpToTotal(low, legBudget - dm.total())) {
                    for (const auto& nu : low->pathsOfDegree(dn)) {
                        if (nu.source != mu.source) continue;
                        KPElement img = KPElement::edge(high, e) *
                                        ladder.promote(KPElement::monomial(low, mu, nu), m + 1);
                        if (img.isZeroLiteral()) continue;
                        decorated.push_back({e, KPMonomial{mu, nu}, img,
                                             1 + dm.total(), dn.total()});
                    }
                }
            }
        }
    }
    std::vector<std::pair<KPElement, std::pair<int, int>>> middles;  // π(S), (muCost, nuCost)
    for (const auto& dm : degreesUpToTotal(low, level)) {
        for (const auto& mu : low->pathsOfDegree(dm)) {
            for (const auto& dn : degreesUpToTotal(low, level)) {
                for (const auto& nu : low->pathsOfDegree(dn)) {
                    if (nu.source != mu.source) continue;
                    middles.push_back({ladder.promote(KPElement::monomial(low, mu, nu), m + 1),
                                       {dm.total(), dn.total()}});
                }
            }
        }
    }

    std::map<MultiDegree, std::vector<KPElement>> dict;
    std::set<std::string> seen;
    std::size_t words = 0;
    auto record = [&](const KPElement& image) {
        if (image.isZeroLiteral()) return;
        MultiDegree delta = image.terms().begin()->first.grade();
        if (delta.totalAbs() > level) return;
        if (++words > guard)
            throw Error(ErrorKind::LevelTooLarge, "dictionary span exceeds the enumeration guard");
        std::string key = delta.str() + "|" + image.str();
        if (seen.insert(key).second) dict[delta].push_back(image);
    };

    // right tails: π(S) t(y_1)*…t(y_b)* with budget costs, built recursively
    auto extendRight = [&](auto&& self, const KPElement& value, int muLeft, int nuLeft) -> void {
        record(value);
        for (const auto& d : decorated) {
            if (d.nuCost > muLeft || d.muCost > nuLeft) continue;  // starred: costs swap
            KPElement next = value * d.image.star();
            if (next.isZeroLiteral()) continue;
            self(self, next, muLeft - d.nuCost, nuLeft - d.muCost);
        }
    };
    auto startMiddle = [&](const std::optional<KPElement>& value, int muLeft,
                           int nuLeft) -> void {
        for (const auto& [mid, cost] : middles) {
            if (cost.first > muLeft || cost.second > nuLeft) continue;
            KPElement next = value ? (*value * mid) : mid;
            if (next.isZeroLiteral()) continue;
            extendRight(extendRight, next, muLeft - cost.first, nuLeft - cost.second);
        }
    };
    auto extendLeft = [&](auto&& self, const std::optional<KPElement>& value, int muLeft,
                          int nuLeft) -> void {
        startMiddle(value, muLeft, nuLeft);
        for (const auto& d : decorated) {
            if (d.muCost > muLeft || d.nuCost > nuLeft) continue;
            KPElement next = value ? (*value * d.image) : d.image;
            if (next.isZeroLiteral()) continue;
            self(self, next, muLeft - d.muCost, nuLeft - d.nuCost);
        }
    };
    extendLeft(extendLeft, std::nullopt, level, level);

    // ---- per-grade ranks ----
    std::vector<CensusEntry> out;
    for (const auto& delta : gradesUpTo(kk, level)) {
        CensusEntry entry;
        entry.grade = delta;
        MultiDegree lvl = cap;
        // expansion level must dominate the grade's positive part
        for (std::size_t i = 0; i < kk; ++i) lvl[i] = std::max(lvl[i], delta[i]);
        RankAccumulator dr(delta, lvl);
        auto dIt = direct.find(delta);
        if (dIt != direct.end()) {
            entry.directCount = dIt->second.size();
            for (const auto& x : dIt->second) dr.add(x);
        }
        entry.directRank = dr.rank();
        RankAccumulator wr(delta, lvl);
        auto wIt = dict.find(delta);
        if (wIt != dict.end()) {
            entry.dictWords = wIt->second.size();
            for (const auto& x : wIt->second) {
                wr.add(x);
                if (wr.rank() == entry.directRank) break;  // span is capped by the direct one
            }
        }
        entry.dictRank = wr.rank();
        out.push_back(std::move(entry));
    }
    return out;
}

}  // namespace kgv
