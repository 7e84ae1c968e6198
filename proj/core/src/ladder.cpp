#include "kgv/ladder.hpp"

#include <algorithm>
#include <optional>

namespace kgv {

Ladder::Ladder(KGraphPtr full) : full_(std::move(full)) {
    subs_.resize(static_cast<std::size_t>(full_->k()));
    std::vector<int> J;
    for (int m = 1; m <= full_->k(); ++m) {
        J.push_back(m);
        subs_[static_cast<std::size_t>(m - 1)] = (m == full_->k()) ? full_ : full_->restrict(J);
    }
}

const KGraphPtr& Ladder::sub(int m) const {
    if (m < 1 || m > full_->k())
        throw Error(ErrorKind::ColorOutOfRange, "no rung " + std::to_string(m));
    return subs_[static_cast<std::size_t>(m - 1)];
}

int Ladder::levelOf(const KGraphPtr& graph) const {
    for (int m = 1; m <= full_->k(); ++m)
        if (subs_[static_cast<std::size_t>(m - 1)] == graph) return m;
    return -1;
}

KPElement Ladder::promote(const KPElement& x, int n) const {
    int m = levelOf(x.graph());
    if (m < 0) throw Error(ErrorKind::GraphMismatch, "element does not live on this ladder");
    if (m > n) throw Error(ErrorKind::ColorOutOfRange, "cannot promote downward");
    if (m == n) return x;
    const KGraphPtr& target = sub(n);
    KPElement out(target);
    for (const auto& [mono, c] : x.terms()) {
        Path mu = mono.mu.isVertex() ? target->vertexPath(mono.mu.source)
                                     : target->pathFromWord(mono.mu.word);
        Path nu = mono.nu.isVertex() ? target->vertexPath(mono.nu.source)
                                     : target->pathFromWord(mono.nu.word);
        out.add(KPMonomial{mu, nu}, c);
    }
    return out;
}

LadderElement::LadderElement(const Ladder* ladder, int m, std::vector<int> colors)
    : ladder_(ladder), m_(m), colors_(std::move(colors)) {
    if (m_ < 1 || m_ > ladder_->k())
        throw Error(ErrorKind::ColorOutOfRange, "coefficient rung out of range");
    for (int c : colors_)
        if (c < 1 || c > ladder_->k())
            throw Error(ErrorKind::ColorOutOfRange, "module color out of range");
    if (colors_.empty()) throw Error(ErrorKind::ShapeMismatch, "module word must have an edge");
}

LadderElement LadderElement::basis(const Ladder* ladder, int m, const std::vector<EdgeId>& word,
                                   const KPElement& coeff) {
    std::vector<int> colors;
    for (EdgeId e : word) colors.push_back(ladder->full()->colorOf(e));
    LadderElement x(ladder, m, std::move(colors));
    x.add(word, coeff);
    return x;
}

LadderElement LadderElement::localUnit(const Ladder* ladder, int m, EdgeId e) {
    return basis(ladder, m, {e},
                 KPElement::vertex(ladder->sub(m), ladder->full()->sourceOf(e)));
}

void LadderElement::add(const std::vector<EdgeId>& word, const KPElement& coeff) {
    if (word.size() != colors_.size())
        throw Error(ErrorKind::ShapeMismatch, "word length does not match the shape");
    if (coeff.graph() != ladder_->sub(m_))
        throw Error(ErrorKind::GraphMismatch, "coefficient lives on the wrong rung");
    const auto& kg = *ladder_->full();
    for (std::size_t t = 0; t < word.size(); ++t) {
        if (kg.colorOf(word[t]) != colors_[t])
            throw Error(ErrorKind::ShapeMismatch, "edge color does not match the shape");
        if (t + 1 < word.size() && kg.sourceOf(word[t]) != kg.rangeOf(word[t + 1]))
            return;  // zero tensor
    }
    // support corner: keep only monomials with r(mu) = s(last edge)
    VertexId anchor = kg.sourceOf(word.back());
    KPElement projected(coeff.graph());
    for (const auto& [mono, c] : coeff.terms())
        if (mono.mu.range == anchor) projected.add(mono, c);
    if (projected.isZeroLiteral()) return;

    auto it = coeffs_.find(word);
    if (it == coeffs_.end()) {
        coeffs_.emplace(word, projected);
    } else {
        it->second = it->second + projected;
        if (it->second.isZeroLiteral()) coeffs_.erase(it);
    }
}

LadderElement LadderElement::operator+(const LadderElement& o) const {
    if (m_ != o.m_ || colors_ != o.colors_ || ladder_ != o.ladder_)
        throw Error(ErrorKind::ShapeMismatch, "sum of different module shapes");
    LadderElement r = *this;
    for (const auto& [w, c] : o.coeffs_) r.add(w, c);
    return r;
}

LadderElement LadderElement::operator-(const LadderElement& o) const {
    return *this + o * Rational(-1);
}

LadderElement LadderElement::operator*(const Rational& c) const {
    LadderElement r(ladder_, m_, colors_);
    if (c == 0) return r;
    for (const auto& [w, q] : coeffs_) r.coeffs_.emplace(w, q * c);
    return r;
}

LadderElement LadderElement::actRight(const KPElement& T) const {
    LadderElement r(ladder_, m_, colors_);
    for (const auto& [w, S] : coeffs_) r.add(w, S * T);
    return r;
}

LadderElement LadderElement::actVertex(VertexId v) const {
    LadderElement r(ladder_, m_, colors_);
    const auto& kg = *ladder_->full();
    for (const auto& [w, S] : coeffs_)
        if (kg.rangeOf(w.front()) == v) r.add(w, S);
    return r;
}

namespace {

// One step of the flip chain: carries the incoming edge g past the word
// edge w. Equal colors swap roles (θ_ii = id); different colors go through
// the square. Returns nothing when the pair is not composable.
std::optional<std::pair<EdgeId, EdgeId>> flipStep(const KGraph& kg, EdgeId g, EdgeId w) {
    if (kg.sourceOf(g) != kg.rangeOf(w)) return std::nullopt;
    if (kg.colorOf(g) == kg.colorOf(w)) return std::make_pair(g, w);
    return kg.flip(g, w);
}

}  // namespace

LadderElement LadderElement::actEdge(EdgeId f) const {
    const auto& kg = *ladder_->full();
    if (kg.colorOf(f) > m_)
        throw Error(ErrorKind::ColorOutOfRange, "generator color exceeds the coefficient rung");
    LadderElement r(ladder_, m_, colors_);
    for (const auto& [w, T] : coeffs_) {
        EdgeId carry = f;
        std::vector<EdgeId> out(w.size());
        bool alive = true;
        for (std::size_t t = 0; t < w.size() && alive; ++t) {
            auto step = flipStep(kg, carry, w[t]);
            if (!step) {
                alive = false;
                break;
            }
            out[t] = step->first;
            carry = step->second;
        }
        if (!alive) continue;
        r.add(out, KPElement::edge(ladder_->sub(m_), carry) * T);
    }
    return r;
}

LadderElement LadderElement::actEdgeStar(EdgeId f) const {
    const auto& kg = *ladder_->full();
    if (kg.colorOf(f) > m_)
        throw Error(ErrorKind::ColorOutOfRange, "generator color exceeds the coefficient rung");
    LadderElement r(ladder_, m_, colors_);
    for (const auto& [w, T] : coeffs_) {
        // preimages of w under the flip chain that start at f
        for (EdgeId last : ladder_->sub(m_)->edgesWithRange(
                 ladder_->sub(m_)->colorOf(f), kg.sourceOf(w.back()))) {
            EdgeId carry = last;
            std::vector<EdgeId> pre(w.size());
            bool alive = true;
            for (std::size_t t = w.size(); t-- > 0 && alive;) {
                auto step = flipStep(kg, w[t], carry);
                if (!step) {
                    alive = false;
                    break;
                }
                carry = step->first;
                pre[t] = step->second;
            }
            if (!alive || carry != f) continue;
            r.add(pre, KPElement::edge(ladder_->sub(m_), last).star() * T);
        }
    }
    return r;
}

LadderElement LadderElement::actLeft(const KPElement& S) const {
    if (S.graph() != ladder_->sub(m_))
        throw Error(ErrorKind::GraphMismatch, "acting element lives on the wrong rung");
    LadderElement out(ladder_, m_, colors_);
    for (const auto& [mono, c] : S.terms()) {
        LadderElement cur = *this;
        if (mono.isVertex()) {
            cur = cur.actVertex(mono.mu.source);
        } else {
            for (EdgeId w : mono.nu.word) cur = cur.actEdgeStar(w);
            for (std::size_t t = mono.mu.word.size(); t-- > 0;)
                cur = cur.actEdge(mono.mu.word[t]);
        }
        out = out + cur * c;
    }
    return out;
}

std::string LadderElement::str() const {
    if (coeffs_.empty()) return "0";
    const auto& kg = *ladder_->full();
    std::string out;
    for (const auto& [w, S] : coeffs_) {
        if (!out.empty()) out += " + ";
        std::string word;
        for (std::size_t t = 0; t < w.size(); ++t) {
            if (t) word += ",";
            word += kg.edgeName(w[t]);
        }
        out += "[" + word + "](x)(" + S.str() + ")";
    }
    return out;
}

KPElement ladderInner(const LadderElement& x, const LadderElement& y) {
    if (x.ladder() != y.ladder() || x.m() != y.m() || x.colors() != y.colors())
        throw Error(ErrorKind::ShapeMismatch, "inner product of different module shapes");
    KPElement out(x.ladder()->sub(x.m()));
    for (const auto& [w, S] : x.coeffs()) {
        auto it = y.coeffs().find(w);
        if (it == y.coeffs().end()) continue;
        out = out + S.star() * it->second;
    }
    return out;
}

bool ladderEquals(const LadderElement& a, const LadderElement& b) {
    if (a.ladder() != b.ladder() || a.m() != b.m() || a.colors() != b.colors()) return false;
    KPElement zero = KPElement::zero(a.ladder()->sub(a.m()));
    for (const auto& [w, S] : a.coeffs()) {
        auto it = b.coeffs().find(w);
        const KPElement& other = it == b.coeffs().end() ? zero : it->second;
        if (!S.equals(other)) return false;
    }
    for (const auto& [w, S] : b.coeffs()) {
        if (!a.coeffs().count(w) && !S.equals(zero)) return false;
    }
    return true;
}

LadderElement flattenOnto(const LadderElement& left, const LadderElement& right) {
    if (left.ladder() != right.ladder() || left.m() != right.m())
        throw Error(ErrorKind::ShapeMismatch, "flatten across different rungs");
    std::vector<int> colors = left.colors();
    colors.insert(colors.end(), right.colors().begin(), right.colors().end());
    LadderElement out(left.ladder(), left.m(), std::move(colors));
    for (const auto& [w, S] : left.coeffs()) {
        LadderElement moved = right.actLeft(S);
        for (const auto& [u, T] : moved.coeffs()) {
            std::vector<EdgeId> word = w;
            word.insert(word.end(), u.begin(), u.end());
            out.add(word, T);
        }
    }
    return out;
}

FormalPair splitAt(const LadderElement& flat, std::size_t pos) {
    if (pos == 0 || pos >= flat.colors().size())
        throw Error(ErrorKind::ShapeMismatch, "split position out of range");
    FormalPair out;
    const Ladder* lad = flat.ladder();
    if (flat.isZeroLiteral()) {
        // keep the shape: a zero flat splits into a pair of zero factors
        std::vector<int> cl(flat.colors().begin(),
                            flat.colors().begin() + static_cast<std::ptrdiff_t>(pos));
        std::vector<int> cr(flat.colors().begin() + static_cast<std::ptrdiff_t>(pos),
                            flat.colors().end());
        out.emplace_back(LadderElement(lad, flat.m(), cl), LadderElement(lad, flat.m(), cr));
        return out;
    }
    for (const auto& [w, T] : flat.coeffs()) {
        std::vector<EdgeId> wl(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
        std::vector<EdgeId> wr(w.begin() + static_cast<std::ptrdiff_t>(pos), w.end());
        KPElement unit = KPElement::vertex(lad->sub(flat.m()), lad->full()->sourceOf(wl.back()));
        out.emplace_back(LadderElement::basis(lad, flat.m(), wl, unit),
                         LadderElement::basis(lad, flat.m(), wr, T));
    }
    return out;
}

LadderElement flattenPair(const FormalPair& pair) {
    if (pair.empty()) throw Error(ErrorKind::ShapeMismatch, "empty formal tensor");
    LadderElement out = flattenOnto(pair.front().first, pair.front().second);
    for (std::size_t i = 1; i < pair.size(); ++i)
        out = out + flattenOnto(pair[i].first, pair[i].second);
    return out;
}

LadderElement thetaAt(const LadderElement& flat, std::size_t pos) {
    if (pos + 1 >= flat.colors().size())
        throw Error(ErrorKind::ShapeMismatch, "flip position out of range");
    std::vector<int> colors = flat.colors();
    std::swap(colors[pos], colors[pos + 1]);
    LadderElement out(flat.ladder(), flat.m(), std::move(colors));
    const auto& kg = *flat.ladder()->full();
    for (const auto& [w, T] : flat.coeffs()) {
        auto [p, q] = kg.flip(w[pos], w[pos + 1]);
        std::vector<EdgeId> word = w;
        word[pos] = p;
        word[pos + 1] = q;
        out.add(word, T);
    }
    return out;
}

FormalPair rthetaApply(const FormalPair& x) {
    LadderElement flat = flattenPair(x);
    return splitAt(thetaAt(flat, 0), 1);
}

FormalTriple rthetaOnTriple(const FormalTriple& x, std::size_t pos) {
    if (pos > 1) throw Error(ErrorKind::ShapeMismatch, "triple flip position out of range");
    FormalTriple out;
    for (const auto& summand : x) {
        FormalPair moved = rthetaApply({{summand[pos], summand[pos + 1]}});
        for (const auto& [l, r] : moved) {
            if (pos == 0) {
                out.push_back({l, r, summand[2]});
            } else {
                out.push_back({summand[0], l, r});
            }
        }
    }
    return out;
}

LadderElement flattenTripleRightFirst(const FormalTriple& t) {
    if (t.empty()) throw Error(ErrorKind::ShapeMismatch, "empty formal tensor");
    auto one = [](const std::array<LadderElement, 3>& s) {
        return flattenOnto(s[0], flattenOnto(s[1], s[2]));
    };
    LadderElement out = one(t.front());
    for (std::size_t i = 1; i < t.size(); ++i) out = out + one(t[i]);
    return out;
}

LadderElement flattenTripleLeftFirst(const FormalTriple& t) {
    if (t.empty()) throw Error(ErrorKind::ShapeMismatch, "empty formal tensor");
    auto one = [](const std::array<LadderElement, 3>& s) {
        return flattenOnto(flattenOnto(s[0], s[1]), s[2]);
    };
    LadderElement out = one(t.front());
    for (std::size_t i = 1; i < t.size(); ++i) out = out + one(t[i]);
    return out;
}

KPElement absorb(const LadderElement& x) {
    if (x.colors().size() != 1)
        throw Error(ErrorKind::ShapeMismatch, "absorb expects a one-edge module element");
    if (x.colors().front() > x.m())
        throw Error(ErrorKind::ColorOutOfRange, "edge color exceeds the coefficient rung");
    const KGraphPtr& target = x.ladder()->sub(x.m());
    KPElement out(target);
    for (const auto& [w, T] : x.coeffs()) out = out + KPElement::edge(target, w[0]) * T;
    return out;
}

SigmaRep::SigmaRep(const Ladder* ladder, int m) : ladder_(ladder), m_(m) {
    if (m < 1 || m + 1 > ladder->k())
        throw Error(ErrorKind::ColorOutOfRange, "stage must satisfy 1 <= m < k");
}

const KGraphPtr& SigmaRep::target() const { return ladder_->sub(m_ + 1); }

KPElement SigmaRep::sigma0(VertexId v) const { return KPElement::vertex(target(), v); }

KPElement SigmaRep::sigma(int color, EdgeId e) const {
    if (color < 1 || color > m_ + 1)
        throw Error(ErrorKind::ColorOutOfRange, "sigma color out of range at this stage");
    if (ladder_->full()->colorOf(e) != color)
        throw Error(ErrorKind::ColorOutOfRange, "edge does not carry the requested color");
    return KPElement::edge(target(), e);
}

KPElement SigmaRep::pi(const KPElement& S) const { return ladder_->promote(S, m_ + 1); }

KPElement SigmaRep::t(const LadderElement& x) const {
    if (x.colors().size() != 1 || x.colors().front() != m_ + 1 || x.m() != m_)
        throw Error(ErrorKind::ShapeMismatch, "t expects an element of the stage module");
    KPElement out(target());
    for (const auto& [w, T] : x.coeffs())
        out = out + KPElement::edge(target(), w[0]) * pi(T);
    return out;
}

SigmaRep makeSigma(const Ladder& ladder, int m) { return SigmaRep(&ladder, m); }

}  // namespace kgv
