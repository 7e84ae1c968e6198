#include "kgv/kpalg.hpp"

#include <algorithm>
#include <set>

namespace kgv {

KPElement KPElement::vertex(KGraphPtr graph, VertexId v) {
    KPElement x(graph);
    Path p = graph->vertexPath(v);
    x.add(KPMonomial{p, p}, 1);
    return x;
}

KPElement KPElement::edge(KGraphPtr graph, EdgeId e) {
    KPElement x(graph);
    Path mu = graph->edgePath(e);
    x.add(KPMonomial{mu, graph->vertexPath(mu.source)}, 1);
    return x;
}

KPElement KPElement::path(KGraphPtr graph, const Path& mu) {
    KPElement x(graph);
    x.add(KPMonomial{mu, graph->vertexPath(mu.source)}, 1);
    return x;
}

KPElement KPElement::monomial(KGraphPtr graph, const Path& mu, const Path& nu, const Rational& c) {
    if (mu.source != nu.source)
        throw Error(ErrorKind::MalformedInput, "monomial requires s(mu) = s(nu)");
    KPElement x(graph);
    x.add(KPMonomial{mu, nu}, c);
    return x;
}

void KPElement::add(const KPMonomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void KPElement::requireSameGraph(const KPElement& o) const {
    if (graph_ != o.graph_)
        throw Error(ErrorKind::GraphMismatch, "operands live over different graphs");
}

KPElement KPElement::operator+(const KPElement& o) const {
    requireSameGraph(o);
    KPElement r = *this;
    for (const auto& [m, c] : o.terms_) r.add(m, c);
    return r;
}

KPElement KPElement::operator-(const KPElement& o) const {
    requireSameGraph(o);
    KPElement r = *this;
    for (const auto& [m, c] : o.terms_) r.add(m, -c);
    return r;
}

KPElement KPElement::operator-() const {
    KPElement r(graph_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

KPElement KPElement::operator*(const Rational& c) const {
    KPElement r(graph_);
    if (c == 0) return r;
    for (const auto& [m, q] : terms_) r.terms_.emplace(m, q * c);
    return r;
}

// s_mu s_nu* . s_alpha s_beta* = sum over (eta, zeta) with nu∘eta = alpha∘zeta
// of s_{mu∘eta} s_{beta∘zeta}*.
KPElement KPElement::operator*(const KPElement& o) const {
    requireSameGraph(o);
    KPElement r(graph_);
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            Rational c = c1 * c2;
            for (const auto& [eta, zeta] : graph_->minimalCommonExtensions(m1.nu, m2.mu)) {
                r.add(KPMonomial{graph_->concat(m1.mu, eta), graph_->concat(m2.nu, zeta)}, c);
            }
        }
    }
    return r;
}

KPElement KPElement::star() const {
    KPElement r(graph_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(KPMonomial{m.nu, m.mu}, c);
    return r;
}

KPElement KPElement::component(const MultiDegree& delta) const {
    KPElement r(graph_);
    for (const auto& [m, c] : terms_)
        if (m.grade() == delta) r.terms_.emplace(m, c);
    return r;
}

std::vector<MultiDegree> KPElement::grades() const {
    std::set<MultiDegree> seen;
    for (const auto& [m, c] : terms_) seen.insert(m.grade());
    return {seen.begin(), seen.end()};
}

KPElement KPElement::expand(const MultiDegree& delta, const MultiDegree& M) const {
    KPElement r(graph_);
    for (const auto& [m, c] : terms_) {
        if (m.grade() != delta) {
            r.add(m, c);
            continue;
        }
        if (!m.mu.degree.dominatedBy(M))
            throw Error(ErrorKind::LevelTooLow,
                        "expansion level " + M.str() + " below monomial degree " + m.mu.degree.str());
        MultiDegree ext = M - m.mu.degree;
        for (const auto& lambda : graph_->pathsOfDegree(ext, m.mu.source)) {
            r.add(KPMonomial{graph_->concat(m.mu, lambda), graph_->concat(m.nu, lambda)}, c);
        }
    }
    return r;
}

bool KPElement::equals(const KPElement& o) const {
    requireSameGraph(o);
    KPElement diff = *this - o;
    for (const auto& delta : diff.grades()) {
        KPElement part = diff.component(delta);
        MultiDegree M = graph_->zeroDegree();
        for (const auto& [m, c] : part.terms()) M = M.join(m.mu.degree);
        if (!part.expand(delta, M).isZeroLiteral()) return false;
    }
    return true;
}

// One collapse pass over one color: groups monomials by the pair obtained by
// peeling a color-i edge from the source end of both paths, and replaces any
// complete uniform group by its collapsed monomial.
KPElement KPElement::collapse() const {
    KPElement cur = *this;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int color = 1; color <= cur.graph_->k() && !changed; ++color) {
            MultiDegree ei = cur.graph_->unitDegree(color);
            // candidate groups: (mu, nu) -> peeled edge -> coefficient
            std::map<KPMonomial, std::map<EdgeId, Rational>> groups;
            for (const auto& [m, c] : cur.terms_) {
                if (m.mu.degree[color - 1] < 1 || m.nu.degree[color - 1] < 1) continue;
                auto [mu, lam1] = cur.graph_->factorize(m.mu, m.mu.degree - ei, ei);
                auto [nu, lam2] = cur.graph_->factorize(m.nu, m.nu.degree - ei, ei);
                if (!(lam1 == lam2)) continue;
                groups[KPMonomial{mu, nu}][lam1.word[0]] = c;
            }
            for (const auto& [head, byEdge] : groups) {
                const auto& needed = cur.graph_->edgesWithRange(color, head.mu.source);
                if (byEdge.size() != needed.size()) continue;
                const Rational& c0 = byEdge.begin()->second;
                bool uniform = true;
                for (const auto& [e, c] : byEdge) uniform = uniform && (c == c0);
                if (!uniform) continue;
                // remove the group, insert the collapsed monomial
                for (const auto& [e, c] : byEdge) {
                    Path lam = cur.graph_->edgePath(e);
                    cur.add(KPMonomial{cur.graph_->concat(head.mu, lam),
                                       cur.graph_->concat(head.nu, lam)},
                            -c);
                }
                cur.add(head, c0);
                changed = true;
                break;  // group map may be stale now; rescan
            }
        }
    }
    return cur;
}

std::string KPElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += to_string(c) + " * ";
        if (m.isVertex()) {
            out += graph_->pathString(m.mu);
        } else {
            std::string mu = m.mu.isVertex() ? graph_->pathString(m.mu) : "s" + graph_->pathString(m.mu);
            std::string nu = m.nu.isVertex() ? graph_->pathString(m.nu) : "s" + graph_->pathString(m.nu);
            out += mu + " " + nu + "*";
        }
    }
    return out;
}

std::size_t rankOfSpan(const std::vector<KPElement>& span) {
    if (span.empty()) return 0;
    const KGraphPtr& graph = span.front().graph();
    for (const auto& x : span)
        if (x.graph() != graph) throw Error(ErrorKind::GraphMismatch, "span over mixed graphs");

    // per grade, expand every element to the common componentwise-max level
    std::set<MultiDegree> allGrades;
    for (const auto& x : span)
        for (const auto& d : x.grades()) allGrades.insert(d);
    std::map<MultiDegree, MultiDegree> level;
    for (const auto& delta : allGrades) {
        MultiDegree M = graph->zeroDegree();
        for (const auto& x : span) {
            for (const auto& [m, c] : x.terms())
                if (m.grade() == delta) M = M.join(m.mu.degree);
        }
        level[delta] = M;
    }

    std::map<KPMonomial, std::size_t> columns;
    std::vector<std::map<std::size_t, Rational>> rows;
    for (const auto& x : span) {
        std::map<std::size_t, Rational> row;
        for (const auto& delta : x.grades()) {
            KPElement part = x.component(delta).expand(delta, level[delta]);
            for (const auto& [m, c] : part.terms()) {
                auto [it, inserted] = columns.emplace(m, columns.size());
                row[it->second] = c;
            }
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }

    // sparse exact Gaussian elimination
    std::map<std::size_t, std::map<std::size_t, Rational>> pivots;  // leading col -> row
    std::size_t rank = 0;
    for (auto& row : rows) {
        while (!row.empty()) {
            std::size_t lead = row.begin()->first;
            auto pv = pivots.find(lead);
            if (pv == pivots.end()) break;
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
            pivots.emplace(lead, std::move(row));
            ++rank;
        }
    }
    return rank;
}

}  // namespace kgv
