#include "ndga/operators.hpp"

#include <algorithm>
#include <functional>

namespace ndga {

void require_same_presentation(const PresentationPtr& a, const PresentationPtr& b) {
    if (!a || !b) throw PresentationMismatch("operator without presentation");
    if (a.get() == b.get() || *a == *b) return;
    throw PresentationMismatch("operands live on different presentations");
}

Derivation::Derivation(PresentationPtr pres, int degree) : pres_(std::move(pres)), degree_(degree) {
    if (!pres_) throw InvalidArgument("derivation needs a presentation");
}

GradedPolynomial Derivation::image(const GVar& generator) const {
    auto it = images_.find(generator);
    if (it != images_.end()) return it->second;
    if (!pres_->is_generator(generator)) throw PresentationMismatch("derivation applied to unknown generator " + generator.name());
    return {};
}

void Derivation::set_image(const GVar& generator, const GradedPolynomial& image) {
    auto g = pres_->find(generator);
    if (!g || !pres_->is_generator(*g)) throw PresentationMismatch("not a generator: " + generator.name());
    GradedPolynomial img = normal_form(image, *pres_);
    if (img.is_zero()) {
        images_.erase(*g);
        return;
    }
    auto gr = img.grade();
    if (!gr || *gr != g->grade + degree_)
        throw InvalidArgument("image of " + g->name() + " has wrong grade for a derivation of degree " +
                              std::to_string(degree_));
    images_[*g] = img;
}

Derivation& Derivation::operator+=(const Derivation& o) {
    require_same_presentation(pres_, o.pres_);
    if (degree_ != o.degree_ && !o.is_zero() && !is_zero()) throw InvalidArgument("adding derivations of different degree");
    if (is_zero()) degree_ = o.degree_;
    for (const auto& [g, img] : o.images_) {
        GradedPolynomial sum = image(g) + img;
        if (sum.is_zero())
            images_.erase(g);
        else
            images_[g] = sum;
    }
    return *this;
}

Derivation& Derivation::operator*=(const Rational& c) {
    if (c == 0) {
        images_.clear();
        return *this;
    }
    for (auto& kv : images_) kv.second *= c;
    return *this;
}

Derivation operator+(Derivation a, const Derivation& b) { return a += b; }
Derivation operator*(const Rational& c, Derivation a) { return a *= c; }

GradedPolynomial apply_derivation(const Derivation& D, const GradedPolynomial& p) {
    const Presentation& pres = *D.presentation();
    GradedPolynomial out;
    for (const auto& [m, c] : p.terms()) {
        int prefix_grade = 0;
        for (std::size_t k = 0; k < m.factors.size(); ++k) {
            const auto& [v, e] = m.factors[k];
            GradedPolynomial img = D.image(v);
            if (!img.is_zero()) {
                Monomial left;
                left.factors.assign(m.factors.begin(), m.factors.begin() + static_cast<long>(k));
                left.grade = prefix_grade;
                if (e > 1) {
                    left.factors.push_back({v, e - 1});
                    left.grade += v.grade * (e - 1);
                }
                Monomial right;
                right.factors.assign(m.factors.begin() + static_cast<long>(k) + 1, m.factors.end());
                right.grade = m.grade - prefix_grade - v.grade * e;
                Rational coeff = c * e;
                if ((D.degree() * prefix_grade) % 2 != 0) coeff = -coeff;
                GradedPolynomial term = mul(GradedPolynomial::monomial(left, coeff), img, pres);
                out += mul(term, GradedPolynomial::monomial(right), pres);
            }
            prefix_grade += v.grade * e;
        }
    }
    return out;
}

std::vector<Monomial> normal_monomials(const Presentation& pres, const Bounds& bounds) {
    std::vector<GVar> gens = pres.generators();
    std::sort(gens.begin(), gens.end());
    std::vector<Monomial> out;
    Monomial cur;
    std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int words_left) {
        if (idx == gens.size()) {
            if (cur.grade <= bounds.degree_bound) out.push_back(cur);
            return;
        }
        rec(idx + 1, words_left);
        const GVar& v = gens[idx];
        int max_e = v.odd() ? 1 : words_left;
        for (int e = 1; e <= std::min(max_e, words_left); ++e) {
            cur.factors.push_back({v, e});
            cur.grade += v.grade * e;
            bool prune = (v.grade > 0 && cur.grade > bounds.degree_bound) || pres.kills(cur);
            if (!prune) rec(idx + 1, words_left - e);
            cur.grade -= v.grade * e;
            cur.factors.pop_back();
            if (prune) break;
        }
    };
    rec(0, bounds.word_bound);
    std::stable_sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        int la = a.word_length(), lb = b.word_length();
        if (la != lb) return la < lb;
        return a < b;
    });
    return out;
}

NilpotencyVerdict vanishing_check(const PolyMap& op, const Presentation& pres, int order_label, const Bounds& bounds) {
    NilpotencyVerdict v;
    v.order_tested = order_label;
    v.bounds = bounds;
    for (const Monomial& m : normal_monomials(pres, bounds)) {
        ++v.monomials_checked;
        GradedPolynomial img = op(GradedPolynomial::monomial(m));
        if (!img.is_zero()) {
            v.verified = false;
            v.counterexample = m;
            v.image = img;
            return v;
        }
    }
    return v;
}

NilpotencyVerdict nilpotency_check(const Derivation& D, int N, const Bounds& bounds) {
    if (N < 1) throw InvalidArgument("nilpotency order must be at least 1");
    auto op = [&](const GradedPolynomial& p) {
        GradedPolynomial q = p;
        for (int i = 0; i < N && !q.is_zero(); ++i) q = apply_derivation(D, q);
        return q;
    };
    return vanishing_check(op, *D.presentation(), N, bounds);
}

std::optional<std::pair<Monomial, GradedPolynomial>> nonzero_power_witness(const Derivation& D, int k,
                                                                           const Bounds& bounds) {
    for (const Monomial& m : normal_monomials(*D.presentation(), bounds)) {
        GradedPolynomial q = GradedPolynomial::monomial(m);
        for (int i = 0; i < k && !q.is_zero(); ++i) q = apply_derivation(D, q);
        if (!q.is_zero()) return std::make_pair(m, q);
    }
    return std::nullopt;
}

DiffOperator DiffOperator::identity(PresentationPtr pres) {
    DiffOperator P(std::move(pres));
    P.add_term(Monomial::one(), GradedPolynomial::constant(1));
    return P;
}

DiffOperator DiffOperator::multiplication(PresentationPtr pres, const GradedPolynomial& c) {
    DiffOperator P(std::move(pres));
    P.add_term(Monomial::one(), c);
    return P;
}

DiffOperator DiffOperator::partial(PresentationPtr pres, const GVar& v) {
    auto g = pres->find(v);
    if (!g || !pres->is_free(*g)) throw InvalidArgument("partial derivative needs a free generator: " + v.name());
    DiffOperator P(std::move(pres));
    P.add_term(Monomial::of(*g), GradedPolynomial::constant(1));
    return P;
}

DiffOperator DiffOperator::from_derivation(const Derivation& D) {
    DiffOperator P(D.presentation());
    for (const auto& [g, img] : D.images()) {
        if (!D.presentation()->is_free(g)) throw InvalidArgument("derivation touches a non-free generator " + g.name());
        P.add_term(Monomial::of(g), img);
    }
    return P;
}

void DiffOperator::add_term(const Monomial& partials, const GradedPolynomial& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(partials);
    if (it == terms_.end()) {
        terms_.emplace(partials, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

int DiffOperator::order() const {
    int k = 0;
    for (const auto& t : terms_) k = std::max(k, t.first.word_length());
    return k;
}

std::optional<int> DiffOperator::degree() const {
    std::optional<int> deg;
    for (const auto& [I, c] : terms_) {
        auto g = c.grade();
        if (!g) return std::nullopt;
        int d = *g - I.grade;
        if (deg && *deg != d) return std::nullopt;
        deg = d;
    }
    return deg;
}

DiffOperator& DiffOperator::operator+=(const DiffOperator& o) {
    if (!pres_) pres_ = o.pres_;
    require_same_presentation(pres_, o.pres_);
    for (const auto& [I, c] : o.terms_) add_term(I, c);
    return *this;
}

DiffOperator& DiffOperator::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& kv : terms_) kv.second *= c;
    return *this;
}

DiffOperator operator+(DiffOperator a, const DiffOperator& b) { return a += b; }
DiffOperator operator-(DiffOperator a, const DiffOperator& b) {
    DiffOperator nb = b;
    nb *= Rational(-1);
    return a += nb;
}

std::string format_operator(const DiffOperator& P) {
    if (P.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [I, c] : P.terms()) {
        if (!first) out += " + ";
        first = false;
        out += "(" + format_polynomial(c) + ")";
        for (const auto& [v, e] : I.factors) {
            out += " D[" + v.name() + "]";
            if (e > 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

GradedPolynomial partial_derivative(const GVar& v, const GradedPolynomial& p, const Presentation& pres) {
    if (!pres.is_free(v)) throw InvalidArgument("partial derivative along non-free generator " + v.name());
    GradedPolynomial out;
    for (const auto& [m, c] : p.terms()) {
        int prefix_grade = 0;
        for (std::size_t k = 0; k < m.factors.size(); ++k) {
            if (m.factors[k].first != v) {
                prefix_grade += m.factors[k].first.grade * m.factors[k].second;
                continue;
            }
            int e = m.factors[k].second;
            Monomial r = m;
            r.grade -= v.grade;
            if (e == 1)
                r.factors.erase(r.factors.begin() + static_cast<long>(k));
            else
                r.factors[k].second = e - 1;
            Rational coeff = c * e;
            if ((v.grade * prefix_grade) % 2 != 0) coeff = -coeff;
            out.add_term(r, coeff);
            break;
        }
    }
    return out;
}

namespace {

GradedPolynomial apply_partials(const Monomial& I, GradedPolynomial p, const Presentation& pres) {
    for (auto it = I.factors.rbegin(); it != I.factors.rend() && !p.is_zero(); ++it)
        for (int r = 0; r < it->second && !p.is_zero(); ++r) p = partial_derivative(it->first, p, pres);
    return p;
}

using OpTerms = std::map<Monomial, GradedPolynomial>;

void accumulate(OpTerms& out, const Monomial& K, const GradedPolynomial& c) {
    if (c.is_zero()) return;
    auto it = out.find(K);
    if (it == out.end()) {
        out.emplace(K, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
}

// d_v o X, pushing d_v through each coefficient.
OpTerms left_partial(const GVar& v, const OpTerms& X, const Presentation& pres) {
    OpTerms out;
    Monomial dv = Monomial::of(v);
    for (const auto& [K, coeff] : X) {
        accumulate(out, K, partial_derivative(v, coeff, pres));
        SignedMonomial sm = free_mul(dv, K);
        if (sm.sign == 0) continue;
        GradedPolynomial moved;
        for (const auto& [mc, cc] : coeff.terms()) {
            Rational x = cc * sm.sign;
            if ((v.grade * mc.grade) % 2 != 0) x = -x;
            moved.add_term(mc, x);
        }
        accumulate(out, sm.mono, moved);
    }
    return out;
}

}  // namespace

GradedPolynomial apply_operator(const DiffOperator& P, const GradedPolynomial& p) {
    const Presentation& pres = *P.presentation();
    GradedPolynomial out;
    for (const auto& [I, c] : P.terms()) {
        GradedPolynomial q = apply_partials(I, p, pres);
        if (!q.is_zero()) out += mul(c, q, pres);
    }
    return out;
}

DiffOperator compose(const DiffOperator& P, const DiffOperator& Q) {
    require_same_presentation(P.presentation(), Q.presentation());
    const Presentation& pres = *P.presentation();
    DiffOperator out(P.presentation());
    for (const auto& [I, c] : P.terms()) {
        OpTerms X = Q.terms();
        for (auto it = I.factors.rbegin(); it != I.factors.rend(); ++it)
            for (int r = 0; r < it->second; ++r) X = left_partial(it->first, X, pres);
        for (const auto& [K, e] : X) out.add_term(K, mul(c, e, pres));
    }
    return out;
}

DiffOperator first_order_part(const DiffOperator& P) {
    DiffOperator out(P.presentation());
    for (const auto& [I, c] : P.terms())
        if (I.word_length() == 1) out.add_term(I, c);
    return out;
}

Derivation to_derivation(const DiffOperator& P, int degree) {
    Derivation D(P.presentation(), degree);
    for (const auto& [I, c] : P.terms()) {
        if (I.word_length() != 1) throw InvalidArgument("operator is not a pure first-order field");
        D.set_image(I.factors.front().first, c);
    }
    return D;
}

Derivation diamond(const Derivation& D1, const Derivation& D2) {
    require_same_presentation(D1.presentation(), D2.presentation());
    Derivation out(D1.presentation(), D1.degree() + D2.degree());
    for (const GVar& g : D1.presentation()->generators()) {
        GradedPolynomial inner = D2.image(g);
        if (inner.is_zero()) continue;
        out.set_image(g, apply_derivation(D1, inner));
    }
    return out;
}

Derivation diamond_power(const Derivation& D, int N) {
    if (N < 1) throw InvalidArgument("diamond power needs N >= 1");
    Derivation r = D;
    for (int i = 1; i < N; ++i) r = diamond(D, r);
    return r;
}

DiffOperator field_operator(const PresentationPtr& pres, const VectorField& a) {
    DiffOperator X(pres);
    for (const auto& [v, c] : a) {
        auto g = pres->find(v);
        if (!g || !pres->is_free(*g)) throw InvalidArgument("vector field along non-free generator " + v.name());
        X.add_term(Monomial::of(*g), c);
    }
    return X;
}

DiffOperator field_power_direct(const PresentationPtr& pres, const VectorField& a, int N) {
    if (N < 0) throw InvalidArgument("negative power");
    DiffOperator X = field_operator(pres, a);
    DiffOperator r = DiffOperator::identity(pres);
    for (int i = 0; i < N; ++i) r = compose(X, r);
    return r;
}

namespace {

int parity_of(const GradedPolynomial& p) {
    auto g = p.grade();
    return g ? ((*g % 2) + 2) % 2 : 0;
}

}  // namespace

int field_power_sign(const VectorField& a, const std::vector<int>& f, const std::vector<int>& alpha) {
    const int N = static_cast<int>(f.size());
    auto xbar = [&](int s) { return a[static_cast<std::size_t>(f[static_cast<std::size_t>(s - 1)] - 1)].first.odd() ? 1 : 0; };
    auto abar = [&](int j) { return parity_of(a[static_cast<std::size_t>(f[static_cast<std::size_t>(j - 1)] - 1)].second); };
    auto al = [&](int s) { return alpha[static_cast<std::size_t>(s - 1)]; };
    int e = 0;
    for (int s = 1; s <= N - 1; ++s) {
        if (!xbar(s)) continue;
        for (int j = s + 1; j < al(s); ++j) {
            if (j > N) break;
            e += abar(j);
            for (int t = s + 1; t <= N - 1; ++t)
                if (al(t) == j) e += xbar(t);
        }
    }
    return (e % 2) ? -1 : 1;
}

DiffOperator field_power_closed(const PresentationPtr& pres, const VectorField& a, int N, int max_N) {
    if (N > max_N) throw BoundExceeded("closed vector-field power limited to N <= " + std::to_string(max_N));
    if (N < 1) return DiffOperator::identity(pres);
    for (const auto& [v, c] : a)
        if (!c.is_homogeneous()) throw InvalidArgument("vector field coefficients must be homogeneous");
    const int m = static_cast<int>(a.size());
    DiffOperator out(pres);
    if (m == 0) return out;

    std::map<std::pair<int, std::vector<int>>, GradedPolynomial> memo;
    // partials[k] are variable indices (1-based), applied innermost = last.
    auto differentiated = [&](int i, const std::vector<int>& partials) -> const GradedPolynomial& {
        auto key = std::make_pair(i, partials);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        GradedPolynomial p = a[static_cast<std::size_t>(i - 1)].second;
        for (auto r = partials.rbegin(); r != partials.rend() && !p.is_zero(); ++r)
            p = partial_derivative(a[static_cast<std::size_t>(*r - 1)].first, p, *pres);
        return memo.emplace(key, p).first->second;
    };

    std::vector<int> f(static_cast<std::size_t>(N), 1);
    std::vector<int> alpha(static_cast<std::size_t>(N > 1 ? N - 1 : 0));
    while (true) {
        for (int s = 1; s <= N - 1; ++s) alpha[static_cast<std::size_t>(s - 1)] = s + 1;
        while (true) {
            GradedPolynomial coeff = GradedPolynomial::constant(1);
            for (int j = 1; j <= N && !coeff.is_zero(); ++j) {
                std::vector<int> hits;
                for (int s = 1; s <= N - 1; ++s)
                    if (alpha[static_cast<std::size_t>(s - 1)] == j) hits.push_back(f[static_cast<std::size_t>(s - 1)]);
                coeff = mul(coeff, differentiated(f[static_cast<std::size_t>(j - 1)], hits), *pres);
            }
            if (!coeff.is_zero()) {
                SignedMonomial tail{1, Monomial::one()};
                for (int s = 1; s <= N && tail.sign != 0; ++s) {
                    if (s < N && alpha[static_cast<std::size_t>(s - 1)] != N + 1) continue;
                    SignedMonomial next = free_mul(tail.mono, Monomial::of(a[static_cast<std::size_t>(f[static_cast<std::size_t>(s - 1)] - 1)].first));
                    next.sign *= tail.sign;
                    tail = next;
                }
                if (tail.sign != 0) {
                    int sign = tail.sign * field_power_sign(a, f, alpha);
                    out.add_term(tail.mono, coeff * Rational(sign));
                }
            }
            int s = N - 1;
            while (s >= 1 && alpha[static_cast<std::size_t>(s - 1)] == N + 1) {
                alpha[static_cast<std::size_t>(s - 1)] = s + 1;
                --s;
            }
            if (s < 1) break;
            ++alpha[static_cast<std::size_t>(s - 1)];
        }
        int k = N - 1;
        while (k >= 0 && f[static_cast<std::size_t>(k)] == m) f[static_cast<std::size_t>(k--)] = 1;
        if (k < 0) break;
        ++f[static_cast<std::size_t>(k)];
    }
    return out;
}

namespace {

int degree_of(const Letter& l) {
    if (std::holds_alternative<Derivation>(l)) return std::get<Derivation>(l).degree();
    auto d = std::get<DiffOperator>(l).degree();
    if (!d) throw InvalidArgument("inhomogeneous operator in an endomorphism word");
    return *d;
}

const PresentationPtr& pres_of(const Letter& l) {
    if (std::holds_alternative<Derivation>(l)) return std::get<Derivation>(l).presentation();
    return std::get<DiffOperator>(l).presentation();
}

bool same_letter(const Letter& a, const Letter& b) {
    if (a.index() != b.index()) return false;
    if (std::holds_alternative<Derivation>(a)) return std::get<Derivation>(a) == std::get<Derivation>(b);
    return std::get<DiffOperator>(a) == std::get<DiffOperator>(b);
}

GradedPolynomial apply_letter(const Letter& l, const GradedPolynomial& p) {
    if (std::holds_alternative<Derivation>(l)) return apply_derivation(std::get<Derivation>(l), p);
    return apply_operator(std::get<DiffOperator>(l), p);
}

}  // namespace

EndOperator EndOperator::letter(const Letter& op) {
    EndOperator E(pres_of(op));
    int i = E.add_letter(op);
    E.add_word({i}, 1);
    return E;
}

int EndOperator::add_letter(const Letter& op) {
    if (!pres_) pres_ = pres_of(op);
    require_same_presentation(pres_, pres_of(op));
    for (std::size_t i = 0; i < alphabet_.size(); ++i)
        if (same_letter(alphabet_[i], op)) return static_cast<int>(i);
    degree_of(op);
    alphabet_.push_back(op);
    return static_cast<int>(alphabet_.size() - 1);
}

void EndOperator::add_word(const std::vector<int>& word, const Rational& c) {
    if (c == 0) return;
    for (int i : word)
        if (i < 0 || i >= static_cast<int>(alphabet_.size())) throw InvalidArgument("word uses an unknown letter");
    auto it = words_.find(word);
    if (it == words_.end()) {
        words_.emplace(word, c);
        return;
    }
    it->second += c;
    if (it->second == 0) words_.erase(it);
}

int EndOperator::letter_degree(int index) const { return degree_of(alphabet_.at(static_cast<std::size_t>(index))); }

std::optional<int> EndOperator::degree() const {
    std::optional<int> deg;
    for (const auto& [w, c] : words_) {
        int d = 0;
        for (int i : w) d += letter_degree(i);
        if (deg && *deg != d) return std::nullopt;
        deg = d;
    }
    return deg;
}

GradedPolynomial EndOperator::apply(const GradedPolynomial& p) const {
    std::map<std::vector<int>, GradedPolynomial> memo;
    std::function<GradedPolynomial(const std::vector<int>&)> eval = [&](const std::vector<int>& suffix) {
        if (suffix.empty()) return p;
        auto it = memo.find(suffix);
        if (it != memo.end()) return it->second;
        std::vector<int> rest(suffix.begin() + 1, suffix.end());
        GradedPolynomial inner = eval(rest);
        GradedPolynomial r = inner.is_zero() ? inner : apply_letter(alphabet_[static_cast<std::size_t>(suffix.front())], inner);
        memo.emplace(suffix, r);
        return r;
    };
    GradedPolynomial out;
    for (const auto& [w, c] : words_) out += eval(w) * c;
    return out;
}

namespace {

EndOperator merged(const EndOperator& A, const EndOperator& B, std::vector<int>& remap) {
    EndOperator out = A;
    remap.clear();
    for (const Letter& l : B.alphabet()) remap.push_back(out.add_letter(l));
    return out;
}

}  // namespace

EndOperator compose(const EndOperator& A, const EndOperator& B) {
    std::vector<int> remap;
    EndOperator base = merged(A, B, remap);
    EndOperator out(base.presentation());
    for (const Letter& l : base.alphabet()) out.add_letter(l);
    for (const auto& [wa, ca] : A.words())
        for (const auto& [wb, cb] : B.words()) {
            std::vector<int> w = wa;
            for (int i : wb) w.push_back(remap[static_cast<std::size_t>(i)]);
            out.add_word(w, ca * cb);
        }
    return out;
}

EndOperator operator+(const EndOperator& A, const EndOperator& B) {
    std::vector<int> remap;
    EndOperator out = merged(A, B, remap);
    for (const auto& [wb, cb] : B.words()) {
        std::vector<int> w;
        for (int i : wb) w.push_back(remap[static_cast<std::size_t>(i)]);
        out.add_word(w, cb);
    }
    return out;
}

EndOperator operator*(const Rational& c, const EndOperator& A) {
    EndOperator out(A.presentation());
    for (const Letter& l : A.alphabet()) out.add_letter(l);
    for (const auto& [w, x] : A.words()) out.add_word(w, x * c);
    return out;
}

EndOperator end_derivative(const Derivation& d, const Derivation& e, int l) {
    require_same_presentation(d.presentation(), e.presentation());
    if (l < 0) throw InvalidArgument("negative derivative order");
    EndOperator cur(d.presentation());
    cur.add_letter(d);
    int ie = cur.add_letter(e);
    cur.add_word({ie}, 1);
    int deg = e.degree();
    for (int k = 0; k < l; ++k) {
        EndOperator next(d.presentation());
        for (const Letter& x : cur.alphabet()) next.add_letter(x);
        Rational back = (deg % 2 == 0) ? Rational(-1) : Rational(1);
        for (const auto& [w, c] : cur.words()) {
            std::vector<int> left{0};
            left.insert(left.end(), w.begin(), w.end());
            next.add_word(left, c);
            std::vector<int> right = w;
            right.push_back(0);
            next.add_word(right, c * back);
        }
        cur = next;
        deg += d.degree();
    }
    return cur;
}

EndOperator curvature(const Derivation& d, const Derivation& e) {
    require_same_presentation(d.presentation(), e.presentation());
    EndOperator F(d.presentation());
    int id = F.add_letter(d);
    int ie = F.add_letter(e);
    if (id == ie) {
        F.add_word({id, id}, 3);
        return F;
    }
    F.add_word({id, ie}, 1);
    F.add_word({ie, id}, 1);
    F.add_word({ie, ie}, 1);
    return F;
}

NilpotencyVerdict curvature_condition(const Derivation& d, const Derivation& e, int N, const Bounds& bounds) {
    if (N < 2) throw InvalidArgument("curvature criterion needs N >= 2");
    if (!nilpotency_check(d, 2, bounds).verified) throw InvalidArgument("d is not 2-nilpotent within the bounds");
    EndOperator F = curvature(d, e);
    EndOperator power = F;
    for (int k = 1; k < N / 2; ++k) power = compose(power, F);
    if (N % 2 != 0) {
        EndOperator de = EndOperator::letter(d) + EndOperator::letter(e);
        power = N / 2 == 0 ? de : compose(power, de);
    }
    NilpotencyVerdict v = vanishing_check([&](const GradedPolynomial& p) { return power.apply(p); }, *d.presentation(), N,
                                          bounds);
    NilpotencyVerdict direct = nilpotency_check(d + e, N, bounds);
    if (v.verified != direct.verified)
        throw ConsistencyError("curvature verdict disagrees with direct (d+e)^N check");
    return v;
}

DiffOperator field_square_display(const PresentationPtr& pres, const VectorField& a) {
    DiffOperator out(pres);
    for (const auto& [xi, ai] : a)
        for (const auto& [xj, aj] : a) {
            SignedMonomial dd = free_mul(Monomial::of(*pres->find(xi)), Monomial::of(*pres->find(xj)));
            if (dd.sign != 0) {
                int s = (xi.odd() && parity_of(aj)) ? -1 : 1;
                out.add_term(dd.mono, mul(ai, aj, *pres) * Rational(s * dd.sign));
            }
            out.add_term(Monomial::of(*pres->find(xj)), mul(ai, partial_derivative(xi, aj, *pres), *pres));
        }
    return out;
}

PresentationPtr field_presentation(const std::vector<int>& grades) {
    auto p = std::make_shared<Presentation>();
    for (std::size_t i = 0; i < grades.size(); ++i) p->add_generator(GVar("y", static_cast<int>(i) + 1, 0, grades[i]));
    return p;
}

VectorField random_vector_field(const PresentationPtr& pres, std::mt19937_64& rng) {
    const auto& gens = pres->generators();
    std::uniform_int_distribution<int> coeff(-3, 3), len(0, 2), pick(0, static_cast<int>(gens.size()) - 1), count(1, 3);
    VectorField a;
    for (const GVar& v : gens) {
        // every monomial of the coefficient gets the grade of the first one drawn
        GradedPolynomial c;
        std::optional<int> target;
        int k = count(rng);
        for (int t = 0; t < k; ++t) {
            GradedPolynomial m = GradedPolynomial::constant(coeff(rng));
            int l = len(rng);
            for (int e = 0; e < l; ++e) m = mul(m, GradedPolynomial::variable(gens[static_cast<std::size_t>(pick(rng))]), *pres);
            if (m.is_zero()) continue;
            int g = *m.grade();
            if (!target) target = g;
            if (g == *target) c += m;
        }
        a.push_back({v, c});
    }
    return a;
}

}  // namespace ndga
