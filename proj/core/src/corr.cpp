#include "kgv/corr.hpp"

#include <algorithm>
#include <set>

namespace kgv {

void VertexAlgElement::add(VertexId v, const Rational& c) {
    if (c == 0) return;
    auto it = values_.find(v);
    if (it == values_.end()) {
        values_.emplace(v, c);
    } else {
        it->second += c;
        if (it->second == 0) values_.erase(it);
    }
}

VertexAlgElement VertexAlgElement::operator+(const VertexAlgElement& o) const {
    VertexAlgElement r = *this;
    for (const auto& [v, c] : o.values_) r.add(v, c);
    return r;
}

VertexAlgElement VertexAlgElement::operator-(const VertexAlgElement& o) const {
    VertexAlgElement r = *this;
    for (const auto& [v, c] : o.values_) r.add(v, -c);
    return r;
}

std::string VertexAlgElement::str(const KGraph& kg) const {
    if (values_.empty()) return "0";
    std::string out;
    for (const auto& [v, c] : values_) {
        if (!out.empty()) out += " + ";
        out += to_string(c) + " * d[" + kg.vertexName(v) + "]";
    }
    return out;
}

CorrElement CorrElement::basis(KGraphPtr graph, const std::vector<EdgeId>& word) {
    std::vector<int> colors;
    colors.reserve(word.size());
    for (EdgeId e : word) colors.push_back(graph->colorOf(e));
    CorrElement x(std::move(graph), std::move(colors));
    x.add(word, 1);
    return x;
}

void CorrElement::add(const std::vector<EdgeId>& word, const Rational& c) {
    if (c == 0) return;
    if (word.size() != colors_.size())
        throw Error(ErrorKind::ShapeMismatch, "tensor word length does not match the shape");
    for (std::size_t t = 0; t < word.size(); ++t) {
        if (graph_->colorOf(word[t]) != colors_[t])
            throw Error(ErrorKind::ShapeMismatch, "edge color does not match the tensor shape");
        if (t + 1 < word.size() && graph_->sourceOf(word[t]) != graph_->rangeOf(word[t + 1]))
            return;  // non-composable formal tensor: identified with zero
    }
    auto it = coeffs_.find(word);
    if (it == coeffs_.end()) {
        coeffs_.emplace(word, c);
    } else {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

void CorrElement::requireCompatible(const CorrElement& o) const {
    if (graph_ != o.graph_) throw Error(ErrorKind::GraphMismatch, "elements over different graphs");
    if (colors_ != o.colors_)
        throw Error(ErrorKind::ShapeMismatch, "elements of different tensor shapes");
}

CorrElement CorrElement::operator+(const CorrElement& o) const {
    requireCompatible(o);
    CorrElement r = *this;
    for (const auto& [w, c] : o.coeffs_) r.add(w, c);
    return r;
}

CorrElement CorrElement::operator-(const CorrElement& o) const {
    requireCompatible(o);
    CorrElement r = *this;
    for (const auto& [w, c] : o.coeffs_) r.add(w, -c);
    return r;
}

CorrElement CorrElement::operator*(const Rational& c) const {
    CorrElement r(graph_, colors_);
    if (c == 0) return r;
    for (const auto& [w, q] : coeffs_) r.coeffs_.emplace(w, q * c);
    return r;
}

CorrElement CorrElement::tensor(const CorrElement& o) const {
    if (graph_ != o.graph_) throw Error(ErrorKind::GraphMismatch, "elements over different graphs");
    std::vector<int> colors = colors_;
    colors.insert(colors.end(), o.colors_.begin(), o.colors_.end());
    CorrElement r(graph_, std::move(colors));
    for (const auto& [w1, c1] : coeffs_) {
        for (const auto& [w2, c2] : o.coeffs_) {
            std::vector<EdgeId> w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            r.add(w, c1 * c2);
        }
    }
    return r;
}

std::string CorrElement::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : coeffs_) {
        if (!out.empty()) out += " + ";
        out += to_string(c) + " * ";
        for (std::size_t t = 0; t < w.size(); ++t) {
            if (t) out += "(x)";
            out += graph_->edgeName(w[t]);
        }
    }
    return out;
}

VertexAlgElement corrInner(const CorrElement& x, const CorrElement& y) {
    if (x.graph() != y.graph())
        throw Error(ErrorKind::GraphMismatch, "elements over different graphs");
    if (x.colors() != y.colors())
        throw Error(ErrorKind::ShapeMismatch, "inner product of different tensor shapes");
    VertexAlgElement a;
    for (const auto& [w1, c1] : x.coeffs()) {
        auto it = y.coeffs().find(w1);
        if (it == y.coeffs().end()) continue;
        VertexId v = w1.empty() ? 0 : x.graph()->sourceOf(w1.back());
        a.add(v, c1 * it->second);
    }
    return a;
}

CorrElement corrLeftAction(const VertexAlgElement& a, const CorrElement& x) {
    CorrElement r(x.graph(), x.colors());
    for (const auto& [w, c] : x.coeffs()) {
        Rational scale = a.at(x.graph()->rangeOf(w.front()));
        if (scale != 0) r.add(w, c * scale);
    }
    return r;
}

CorrElement corrRightAction(const CorrElement& x, const VertexAlgElement& a) {
    CorrElement r(x.graph(), x.colors());
    for (const auto& [w, c] : x.coeffs()) {
        Rational scale = a.at(x.graph()->sourceOf(w.back()));
        if (scale != 0) r.add(w, c * scale);
    }
    return r;
}

CorrElement thetaApplyAt(const CorrElement& x, std::size_t pos) {
    if (pos + 1 >= x.colors().size())
        throw Error(ErrorKind::ShapeMismatch, "flip position out of range");
    std::vector<int> colors = x.colors();
    std::swap(colors[pos], colors[pos + 1]);
    CorrElement r(x.graph(), std::move(colors));
    for (const auto& [w, c] : x.coeffs()) {
        auto [p, q] = x.graph()->flip(w[pos], w[pos + 1]);
        std::vector<EdgeId> word = w;
        word[pos] = p;
        word[pos + 1] = q;
        r.add(word, c);
    }
    return r;
}

CorrElement thetaApply(const CorrElement& x) {
    if (x.colors().size() != 2)
        throw Error(ErrorKind::ShapeMismatch, "theta expects a two-leg tensor");
    return thetaApplyAt(x, 0);
}

CorrElement RankOneSum::apply(const CorrElement& z) const {
    if (terms_.empty()) return z * Rational(0);
    CorrElement r(terms_.front().x.graph(), terms_.front().x.colors());
    for (const auto& t : terms_) {
        VertexAlgElement a = corrInner(t.y, z);
        r = r + corrRightAction(t.x, a) * t.c;
    }
    return r;
}

RankOneSum RankOneSum::extendRight(int color) const {
    RankOneSum out;
    for (const auto& t : terms_) {
        const auto& graph = t.x.graph();
        for (EdgeId e : graph->edgesOfColor(color)) {
            CorrElement leg = CorrElement::basis(graph, {e});
            out.add(t.x.tensor(leg), t.y.tensor(leg), t.c);
        }
    }
    return out;
}

RankOneSum corrPhi(const KGraphPtr& graph, const VertexAlgElement& a, int color) {
    RankOneSum phi;
    for (const auto& [v, c] : a.values()) {
        for (EdgeId e : graph->edgesWithRange(color, v)) {
            CorrElement leg = CorrElement::basis(graph, {e});
            phi.add(leg, leg, c);
        }
    }
    return phi;
}

namespace {

std::string describeWord(const KGraph& kg, const std::vector<EdgeId>& w) {
    std::string s;
    for (std::size_t t = 0; t < w.size(); ++t) {
        if (t) s += "(x)";
        s += kg.edgeName(w[t]);
    }
    return s;
}

}  // namespace

VerificationReport checkGeneratingSystem(const KGraphPtr& graph) {
    VerificationReport rep;
    rep.suite = "gensys";
    const int k = graph->k();

    // θ_ii = id and symmetry θ_ji ∘ θ_ij = id on composable pairs
    for (int i = 1; i <= k; ++i) {
        for (int j = 1; j <= k; ++j) {
            for (EdgeId a : graph->edgesOfColor(i)) {
                for (EdgeId b : graph->edgesOfColor(j)) {
                    if (graph->sourceOf(a) != graph->rangeOf(b)) continue;
                    std::string input = "pair " + describeWord(*graph, {a, b});
                    rep.guarded(input, [&] {
                        CorrElement x = CorrElement::basis(graph, {a, b});
                        CorrElement fx = thetaApply(x);
                        if (i == j && !(fx == x))
                            rep.fail("theta_{ii} on " + input, fx.str(), x.str());
                        CorrElement back = thetaApply(fx);
                        if (!(back == x)) rep.fail("symmetry on " + input, back.str(), x.str());

                        // correspondence-map property: inner products and actions
                        for (EdgeId a2 : graph->edgesOfColor(i)) {
                            for (EdgeId b2 : graph->edgesOfColor(j)) {
                                if (graph->sourceOf(a2) != graph->rangeOf(b2)) continue;
                                CorrElement y = CorrElement::basis(graph, {a2, b2});
                                if (!(corrInner(fx, thetaApply(y)) == corrInner(x, y)))
                                    rep.fail("inner product under theta on " + input + ", " +
                                                 describeWord(*graph, {a2, b2}),
                                             corrInner(fx, thetaApply(y)).str(*graph),
                                             corrInner(x, y).str(*graph));
                            }
                        }
                        for (VertexId v = 0; v < graph->vertexCount(); ++v) {
                            VertexAlgElement dv = VertexAlgElement::delta(v);
                            if (!(thetaApply(corrLeftAction(dv, x)) == corrLeftAction(dv, fx)))
                                rep.fail("left action under theta on " + input, "", "");
                            if (!(thetaApply(corrRightAction(x, dv)) == corrRightAction(fx, dv)))
                                rep.fail("right action under theta on " + input, "", "");
                        }
                    });
                }
            }
        }
    }

    // hexagon on every composable basis triple, all ordered color triples
    for (int i = 1; i <= k; ++i) {
        for (int j = 1; j <= k; ++j) {
            for (int l = 1; l <= k; ++l) {
                for (EdgeId a : graph->edgesOfColor(i)) {
                    for (EdgeId b : graph->edgesWithRange(j, graph->sourceOf(a))) {
                        for (EdgeId c : graph->edgesWithRange(l, graph->sourceOf(b))) {
                            std::string input = "hexagon on " + describeWord(*graph, {a, b, c});
                            rep.guarded(input, [&] {
                                CorrElement x = CorrElement::basis(graph, {a, b, c});
                                CorrElement lhs =
                                    thetaApplyAt(thetaApplyAt(thetaApplyAt(x, 0), 1), 0);
                                CorrElement rhs =
                                    thetaApplyAt(thetaApplyAt(thetaApplyAt(x, 1), 0), 1);
                                if (!(lhs == rhs)) rep.fail(input, lhs.str(), rhs.str());
                            });
                        }
                    }
                }
            }
        }
    }
    return rep;
}

Fiber fiber(const KGraphPtr& graph, const MultiDegree& n) {
    return Fiber{n, graph->pathsOfDegree(n)};
}

std::optional<Path> fiberStructureMap(const KGraphPtr& graph, const Path& mu, const Path& nu) {
    if (mu.source != nu.range) return std::nullopt;
    return graph->concat(mu, nu);
}

VerificationReport checkFiberStructure(const KGraphPtr& graph, int maxTotal) {
    VerificationReport rep;
    rep.suite = "fiber";
    std::vector<MultiDegree> degrees;
    // all degrees with bounded total
    MultiDegree cur = graph->zeroDegree();
    auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
        if (pos == cur.size()) {
            degrees.push_back(cur);
            return;
        }
        for (int c = 0; c <= left; ++c) {
            cur[pos] = c;
            self(self, pos + 1, left - c);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, maxTotal);

    for (const auto& m : degrees) {
        for (const auto& n : degrees) {
            if (m.total() + n.total() > maxTotal) continue;
            Fiber fm = fiber(graph, m);
            Fiber fn = fiber(graph, n);
            Fiber target = fiber(graph, m + n);
            std::set<Path> image;
            std::size_t pairs = 0;
            for (const auto& mu : fm.basis) {
                for (const auto& nu : fn.basis) {
                    auto p = fiberStructureMap(graph, mu, nu);
                    if (!p) continue;
                    ++pairs;
                    image.insert(*p);
                    auto [muBack, nuBack] = graph->factorize(*p, m, n);
                    ++rep.cases;
                    if (!(muBack == mu && nuBack == nu))
                        rep.fail("factorize(concat) on " + graph->pathString(mu) + "," +
                                     graph->pathString(nu),
                                 graph->pathString(muBack) + "," + graph->pathString(nuBack),
                                 graph->pathString(mu) + "," + graph->pathString(nu));
                }
            }
            ++rep.cases;
            if (image.size() != pairs || pairs != target.basis.size())
                rep.fail("bijection onto fiber " + (m + n).str(),
                         std::to_string(pairs) + " pairs, " + std::to_string(image.size()) +
                             " images",
                         std::to_string(target.basis.size()) + " basis paths");
        }
    }
    return rep;
}

}  // namespace kgv
