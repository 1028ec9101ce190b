#include "ndga/forms.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>

namespace ndga {

namespace {

Dga build_omega(int N, int n, bool simplex, int first_site, const std::string& family) {
    if (N < 2) throw InvalidArgument("depth N must be at least 2");
    if (n < 0) throw InvalidArgument("dimension out of range");
    Presentation pres;
    std::vector<int> sites;
    for (int i = 0; i < n; ++i) sites.push_back(simplex ? i + 1 : first_site + i);
    for (int i : sites)
        for (int j = 0; j < N; ++j) pres.add_generator(GVar(family, i, j, j));
    for (int i : sites)
        for (int j = 1; j < N; ++j)
            for (int k = j; k < N; ++k) pres.add_annihilator(GVar(family, i, j, j), GVar(family, i, k, k));
    if (simplex) {
        for (int j = 0; j < N; ++j) {
            GradedPolynomial img = j == 0 ? GradedPolynomial::constant(1) : GradedPolynomial();
            for (int i : sites) img -= GradedPolynomial::variable(GVar(family, i, j, j));
            pres.add_substitution(GVar(family, 0, j, j), img);
        }
        for (int j = 1; j < N; ++j)
            for (int k = j; k < N; ++k) {
                GradedPolynomial r = mul(pres.substitutions().at(GVar(family, 0, j, j)),
                                         pres.substitutions().at(GVar(family, 0, k, k)), pres);
                if (!r.is_zero()) pres.add_residual_relation(r);
            }
    }
    auto ptr = std::make_shared<const Presentation>(std::move(pres));
    Derivation d(ptr, 1);
    for (int i : sites)
        for (int j = 0; j + 1 < N; ++j) d.set_image(GVar(family, i, j, j), GradedPolynomial::variable(GVar(family, i, j + 1, j + 1)));
    return Dga{ptr, d, n * (N - 1) + 1};
}

}  // namespace

Dga omega_space(int N, int n, bool simplex, int first_site, const std::string& family) {
    using Key = std::tuple<int, int, bool, int, std::string>;
    static std::mutex mu;
    static std::map<Key, Dga> cache;
    Key key{N, n, simplex, simplex ? 0 : first_site, family};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    Dga built = build_omega(N, n, simplex, first_site, family);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, built).first->second;
}

GradedPolynomial apply_morphism(const AlgebraMorphism& phi, const GradedPolynomial& p) {
    const Presentation& target = *phi.target;
    GradedPolynomial out;
    for (const auto& [m, c] : p.terms()) {
        GradedPolynomial acc = GradedPolynomial::constant(c);
        for (const auto& [v, e] : m.factors) {
            auto it = phi.images.find(v);
            if (it == phi.images.end()) throw PresentationMismatch("morphism has no image for " + v.name());
            for (int r = 0; r < e && !acc.is_zero(); ++r) acc = mul(acc, it->second, target);
        }
        out += acc;
    }
    return out;
}

AlgebraMorphism compose_morphisms(const AlgebraMorphism& second, const AlgebraMorphism& first) {
    AlgebraMorphism out;
    out.source = first.source;
    out.target = second.target;
    for (const auto& [v, img] : first.images) out.images[v] = apply_morphism(second, img);
    return out;
}

void check_order_preserving(const std::vector<int>& f, int m) {
    if (f.empty()) throw InvalidArgument("simplicial operator on an empty ordinal");
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] < 0 || f[i] > m) throw InvalidArgument("map leaves the target ordinal");
        if (i && f[i] < f[i - 1]) throw InvalidArgument("map is not order preserving");
    }
}

std::vector<int> compose_delta(const std::vector<int>& g, const std::vector<int>& f) {
    std::vector<int> out;
    for (int x : f) out.push_back(g.at(static_cast<std::size_t>(x)));
    return out;
}

AlgebraMorphism omega_map(const std::vector<int>& f, int m, int N, const std::string& family) {
    check_order_preserving(f, m);
    int n = static_cast<int>(f.size()) - 1;
    AlgebraMorphism phi;
    phi.source = omega_space(N, m, true, 1, family).pres;
    phi.target = omega_space(N, n, true, 1, family).pres;
    for (int j = 0; j <= m; ++j)
        for (int l = 0; l < N; ++l) {
            std::vector<RawTerm> raw;
            for (int i = 0; i <= n; ++i)
                if (f[static_cast<std::size_t>(i)] == j) raw.push_back(RawTerm{1, {GVar(family, i, l, l)}});
            phi.images[GVar(family, j, l, l)] = normal_form(raw, *phi.target);
        }
    return phi;
}

namespace {

int x_degree(const Monomial& m) {
    int d = 0;
    for (const auto& [v, e] : m.factors)
        if (v.depth == 0) d += e;
    return d;
}

int max_x_degree(const GradedPolynomial& p) {
    int d = 0;
    for (const auto& t : p.terms()) d = std::max(d, x_degree(t.first));
    return d;
}

std::vector<Monomial> piece_monomials(const Presentation& pres, int degree, int poly_bound) {
    std::vector<Monomial> out;
    if (degree < 0 || poly_bound < 0) return out;
    for (const Monomial& m : normal_monomials(pres, Bounds{degree, poly_bound + degree}))
        if (m.grade == degree && x_degree(m) <= poly_bound) out.push_back(m);
    return out;
}

}  // namespace

GradedPiece::GradedPiece(PresentationPtr pres, int degree, int poly_bound)
    : pres_(std::move(pres)), degree_(degree), poly_bound_(poly_bound) {
    span_ = piece_monomials(*pres_, degree, poly_bound);
    for (std::size_t i = 0; i < span_.size(); ++i) index_[span_[i]] = static_cast<int>(i);
    std::vector<std::vector<Rational>> rows;
    for (const GradedPolynomial& r : pres_->residual_relations()) {
        auto g = r.grade();
        if (!g) throw InvalidArgument("residual relation is not homogeneous");
        int xr = max_x_degree(r);
        for (const Monomial& u : piece_monomials(*pres_, degree - *g, poly_bound - xr)) {
            GradedPolynomial prod = mul(GradedPolynomial::monomial(u), r, *pres_);
            std::vector<Rational> row(span_.size());
            for (const auto& [m, c] : prod.terms()) row[static_cast<std::size_t>(index_.at(m))] = c;
            rows.push_back(std::move(row));
        }
    }
    Matrix rel(static_cast<int>(rows.size()), static_cast<int>(span_.size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < span_.size(); ++c) rel.at(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
    RowEchelon e = rref(rel);
    pivots_ = e.pivots;
    relations_ = e.reduced;
    std::vector<bool> dep(span_.size(), false);
    for (int p : pivots_) dep[static_cast<std::size_t>(p)] = true;
    for (std::size_t c = 0; c < span_.size(); ++c)
        if (!dep[c]) {
            basis_.push_back(span_[c]);
            basis_cols_.push_back(static_cast<int>(c));
        }
}

std::vector<Rational> GradedPiece::coordinates(const GradedPolynomial& p) const {
    std::vector<Rational> v(span_.size());
    for (const auto& [m, c] : p.terms()) {
        auto it = index_.find(m);
        if (it == index_.end()) throw InvalidArgument("element leaves the truncated graded piece: " + m.str());
        v[static_cast<std::size_t>(it->second)] = c;
    }
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
        Rational f = v[static_cast<std::size_t>(pivots_[r])];
        if (f == 0) continue;
        for (std::size_t c = 0; c < span_.size(); ++c) v[c] -= f * relations_.at(static_cast<int>(r), static_cast<int>(c));
    }
    std::vector<Rational> out;
    for (int c : basis_cols_) out.push_back(v[static_cast<std::size_t>(c)]);
    return out;
}

GradedPolynomial GradedPiece::element(const std::vector<Rational>& coords) const {
    GradedPolynomial out;
    for (std::size_t i = 0; i < coords.size() && i < basis_.size(); ++i) out.add_term(basis_[i], coords[i]);
    return out;
}

SimplexRef apply_degeneracy(int j, const SimplexRef& r) {
    SimplexRef out = r;
    out.degeneracies.insert(out.degeneracies.begin(), j);
    auto& L = out.degeneracies;
    for (std::size_t pos = 0; pos + 1 < L.size() && L[pos] <= L[pos + 1]; ++pos) {
        int a = L[pos], b = L[pos + 1];
        L[pos] = b + 1;
        L[pos + 1] = a;
    }
    return out;
}

int SimplicialSet::dimension_of(const std::string& name) const {
    for (const auto& [k, names] : simplices)
        if (std::find(names.begin(), names.end(), name) != names.end()) return k;
    throw InvalidArgument("unknown simplex '" + name + "'");
}

SimplexRef SimplicialSet::resolve(const std::string& name) const {
    std::set<std::string> seen;
    std::string cur = name;
    std::vector<int> js;
    while (degeneracies.count(cur)) {
        if (!seen.insert(cur).second) throw InvalidArgument("cyclic degeneracy declaration at '" + cur + "'");
        const auto& [of, j] = degeneracies.at(cur);
        js.push_back(j);
        cur = of;
    }
    SimplexRef r{cur, {}};
    dimension_of(cur);
    for (auto it = js.rbegin(); it != js.rend(); ++it) r = apply_degeneracy(*it, r);
    return r;
}

int SimplicialSet::dimension(const SimplexRef& r) const {
    return dimension_of(r.base) + static_cast<int>(r.degeneracies.size());
}

SimplexRef SimplicialSet::face(const SimplexRef& r, int i) const {
    int k = dimension(r);
    if (i < 0 || i > k || k == 0) throw InvalidArgument("face index out of range");
    if (r.degeneracies.empty()) {
        const auto& fl = faces.at(r.base);
        return resolve(fl.at(static_cast<std::size_t>(k - i)));
    }
    int j = r.degeneracies.front();
    SimplexRef rest{r.base, std::vector<int>(r.degeneracies.begin() + 1, r.degeneracies.end())};
    if (i == j || i == j + 1) return rest;
    if (i < j) return apply_degeneracy(j - 1, face(rest, i));
    return apply_degeneracy(j, face(rest, i - 1));
}

void SimplicialSet::validate() const {
    std::set<std::string> names;
    for (const auto& [k, list] : simplices) {
        if (k < 0) throw InvalidArgument("negative simplex dimension");
        if (k > K) throw InvalidArgument("unbounded simplicial data: nondegenerate simplex above the generation bound");
        for (const auto& nm : list)
            if (!names.insert(nm).second) throw InvalidArgument("duplicate simplex '" + nm + "'");
    }
    for (const auto& [nm, decl] : degeneracies) {
        if (names.count(nm)) throw InvalidArgument("'" + nm + "' declared both nondegenerate and degenerate");
        SimplexRef r = resolve(nm);
        if (decl.second < 0 || decl.second > dimension(resolve(decl.first)))
            throw InvalidArgument("degeneracy index out of range for '" + nm + "'");
        (void)r;
    }
    for (const auto& [k, list] : simplices) {
        for (const auto& nm : list) {
            if (k == 0) continue;
            auto it = faces.find(nm);
            if (it == faces.end() || static_cast<int>(it->second.size()) != k + 1)
                throw InvalidArgument("simplex '" + nm + "' needs " + std::to_string(k + 1) + " faces");
            for (const auto& f : it->second)
                if (dimension(resolve(f)) != k - 1) throw InvalidArgument("face '" + f + "' of '" + nm + "' has wrong dimension");
        }
    }
    for (const auto& [k, list] : simplices) {
        if (k < 2) continue;
        for (const auto& nm : list) {
            SimplexRef p{nm, {}};
            for (int j = 1; j <= k; ++j)
                for (int i = 0; i < j; ++i)
                    if (!(face(face(p, j), i) == face(face(p, i), j - 1)))
                        throw InvalidArgument("simplicial identity fails on '" + nm + "'");
        }
    }
}

namespace {

std::vector<int> coface(int k, int i) {
    std::vector<int> f;
    for (int x = 0; x < k; ++x) f.push_back(x < i ? x : x + 1);
    return f;
}

// Composite codegeneracy [dim(r)] -> [dim(base)], applying the leftmost s_j first.
std::vector<int> codegeneracy(int k, const std::vector<int>& js) {
    std::vector<int> f;
    for (int x = 0; x <= k; ++x) {
        int y = x;
        for (int j : js) y = y <= j ? y : y - 1;
        f.push_back(y);
    }
    return f;
}

struct MapCache {
    int N;
    std::map<std::pair<std::vector<int>, int>, AlgebraMorphism> maps;
    const AlgebraMorphism& get(const std::vector<int>& f, int m) {
        auto key = std::make_pair(f, m);
        auto it = maps.find(key);
        if (it != maps.end()) return it->second;
        return maps.emplace(key, omega_map(f, m, N)).first->second;
    }
};

}  // namespace

GradedPolynomial family_value(const SimplicialSet& s, const FormFamily& a, const SimplexRef& r, int N) {
    auto it = a.find(r.base);
    if (it == a.end()) throw InvalidArgument("family has no value on '" + r.base + "'");
    if (r.degeneracies.empty()) return it->second;
    int k0 = s.dimension_of(r.base);
    int k = s.dimension(r);
    return apply_morphism(omega_map(codegeneracy(k, r.degeneracies), k0, N), it->second);
}

bool is_compatible(const SimplicialSet& s, const FormFamily& a, int N) {
    for (const auto& [k, list] : s.simplices) {
        if (k == 0) continue;
        for (const auto& nm : list) {
            SimplexRef p{nm, {}};
            for (int i = 0; i <= k; ++i) {
                GradedPolynomial lhs = apply_morphism(omega_map(coface(k, i), k, N), a.at(nm));
                GradedPolynomial diff = lhs - family_value(s, a, s.face(p, i), N);
                if (diff.is_zero()) continue;
                auto g = diff.grade();
                if (!g) return false;
                GradedPiece piece(omega_space(N, k - 1, true).pres, *g, max_x_degree(diff));
                for (const Rational& c : piece.coordinates(diff))
                    if (c != 0) return false;
            }
        }
    }
    return true;
}

FormFamily pullback(const SimplicialSet& target, const std::map<std::string, SimplexRef>& l, const FormFamily& a, int N) {
    FormFamily out;
    for (const auto& [p, ref] : l) out[p] = family_value(target, a, ref, N);
    return out;
}

SimplicialForms omega_simplicial_set(const SimplicialSet& s, int N, int degree, int poly_bound) {
    s.validate();
    SimplicialForms result;
    result.N = N;
    result.degree = degree;
    result.poly_bound = poly_bound;

    std::map<int, GradedPiece> pieces;
    auto piece = [&](int k) -> const GradedPiece& {
        auto it = pieces.find(k);
        if (it != pieces.end()) return it->second;
        return pieces.emplace(k, GradedPiece(omega_space(N, k, true).pres, degree, poly_bound)).first->second;
    };

    std::vector<std::string> order;
    std::map<std::string, int> offset;
    int cols = 0;
    for (const auto& [k, list] : s.simplices)
        for (const auto& nm : list) {
            order.push_back(nm);
            offset[nm] = cols;
            cols += piece(k).dimension();
        }

    MapCache cache{N, {}};
    std::vector<std::vector<Rational>> rows;
    auto add_block = [&](std::vector<std::vector<Rational>>& block, const std::string& src, int src_dim,
                         const std::vector<int>& f, int tgt_dim, const Rational& sign) {
        const GradedPiece& from = piece(src_dim);
        const GradedPiece& to = piece(tgt_dim);
        const AlgebraMorphism& phi = cache.get(f, src_dim);
        for (int b = 0; b < from.dimension(); ++b) {
            std::vector<Rational> img = to.coordinates(apply_morphism(phi, GradedPolynomial::monomial(from.basis()[static_cast<std::size_t>(b)])));
            for (int r = 0; r < to.dimension(); ++r)
                block[static_cast<std::size_t>(r)][static_cast<std::size_t>(offset.at(src) + b)] += sign * img[static_cast<std::size_t>(r)];
        }
    };
    for (const auto& [k, list] : s.simplices) {
        if (k == 0) continue;
        for (const auto& nm : list) {
            for (int i = 0; i <= k; ++i) {
                SimplexRef fr = s.face(SimplexRef{nm, {}}, i);
                int tdim = piece(k - 1).dimension();
                std::vector<std::vector<Rational>> block(static_cast<std::size_t>(tdim), std::vector<Rational>(static_cast<std::size_t>(cols)));
                add_block(block, nm, k, coface(k, i), k - 1, 1);
                int k0 = s.dimension_of(fr.base);
                add_block(block, fr.base, k0, codegeneracy(k - 1, fr.degeneracies), k - 1, -1);
                for (auto& row : block) rows.push_back(std::move(row));
            }
        }
    }
    Matrix system(static_cast<int>(rows.size()), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < cols; ++c) system.at(static_cast<int>(r), c) = rows[r][static_cast<std::size_t>(c)];
    for (const auto& v : kernel_basis(system)) {
        FormFamily fam;
        for (const auto& [k, list] : s.simplices)
            for (const auto& nm : list) {
                const GradedPiece& pc = piece(k);
                std::vector<Rational> coords(v.begin() + offset.at(nm), v.begin() + offset.at(nm) + pc.dimension());
                fam[nm] = pc.element(coords);
            }
        result.basis.push_back(std::move(fam));
    }
    return result;
}

int DifferenceForm::degree_of(const std::vector<int>& I) const {
    int d = 0;
    for (int x : I) d += x;
    return d;
}

void DifferenceForm::add(const std::vector<int>& I, const GradedPolynomial& c) {
    if (static_cast<int>(I.size()) != n) throw InvalidArgument("multi-map has the wrong length");
    if (c.is_zero()) return;
    auto it = terms.find(I);
    if (it == terms.end()) {
        terms.emplace(I, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

PresentationPtr difference_presentation(int n, int N) { return omega_space(N, n, false, 1, "m").pres; }

GradedPolynomial to_polynomial(const DifferenceForm& w, const Presentation& pres) {
    GradedPolynomial out;
    for (const auto& [I, c] : w.terms) {
        Monomial dm;
        for (int i = 0; i < w.n; ++i) {
            int j = I[static_cast<std::size_t>(i)];
            if (j == 0) continue;
            auto v = pres.find(GVar("m", i + 1, j, j));
            if (!v) throw PresentationMismatch("difference variable out of range");
            dm.factors.push_back({*v, 1});
            dm.grade += v->grade;
        }
        out += mul(c, GradedPolynomial::monomial(dm), pres);
    }
    return out;
}

DifferenceForm from_polynomial(const GradedPolynomial& p, int n) {
    DifferenceForm w;
    w.n = n;
    for (const auto& [m, c] : p.terms()) {
        std::vector<int> I(static_cast<std::size_t>(n), 0);
        Monomial coeff;
        for (const auto& [v, e] : m.factors) {
            if (v.family != "m" || v.site < 1 || v.site > n) throw InvalidArgument("not a difference form variable: " + v.name());
            if (v.depth == 0) {
                coeff.factors.push_back({v, e});
                continue;
            }
            if (e != 1 || I[static_cast<std::size_t>(v.site - 1)] != 0) throw InvalidArgument("repeated difference on one site");
            I[static_cast<std::size_t>(v.site - 1)] = v.depth;
        }
        w.add(I, GradedPolynomial::monomial(coeff, c));
    }
    return w;
}

std::string format_difference_form(const DifferenceForm& w) {
    int N = 2;
    for (const auto& [I, c] : w.terms)
        for (int j : I) N = std::max(N, j + 1);
    return format_polynomial(to_polynomial(w, *difference_presentation(w.n, N)));
}

DifferenceForm parse_difference_form(const std::string& text, int n, int N) {
    return from_polynomial(parse_polynomial(text, *difference_presentation(n, N)), n);
}

GradedPolynomial finite_difference(const GradedPolynomial& g, int i, const std::string& family) {
    GVar mi(family, i, 0, 0);
    GradedPolynomial out;
    for (const auto& [m, c] : g.terms()) {
        for (const auto& [v, e] : m.factors)
            if (v.family != family || v.depth != 0) throw InvalidArgument("non-polynomial coefficient: contains " + v.name());
        int e = m.exponent_of(mi);
        if (e == 0) continue;
        Integer binom = 1;
        for (int r = 0; r < e; ++r) {
            Monomial u;
            for (const auto& f : m.factors) {
                if (f.first == mi) {
                    if (r > 0) u.factors.push_back({f.first, r});
                } else {
                    u.factors.push_back(f);
                }
            }
            out.add_term(u, c * Rational(binom));
            binom = binom * (e - r) / (r + 1);
        }
    }
    return out;
}

DifferenceForm delta_leibniz(const DifferenceForm& w, int N) {
    auto pres = difference_presentation(w.n, N);
    Derivation shift(pres, 1);
    for (int i = 1; i <= w.n; ++i)
        for (int j = 1; j + 1 < N; ++j) shift.set_image(GVar("m", i, j, j), GradedPolynomial::variable(GVar("m", i, j + 1, j + 1)));
    GradedPolynomial out;
    for (const auto& [I, c] : w.terms) {
        DifferenceForm single;
        single.n = w.n;
        single.add(I, GradedPolynomial::constant(1));
        GradedPolynomial dm = to_polynomial(single, *pres);
        for (int i = 1; i <= w.n; ++i) {
            GradedPolynomial diff = finite_difference(c, i);
            if (diff.is_zero()) continue;
            GradedPolynomial lead = mul(diff, GradedPolynomial::variable(*pres->find(GVar("m", i, 1, 1))), *pres);
            out += mul(lead, dm, *pres);
        }
        for (const auto& [v, e] : c.terms())
            for (const auto& f : v.factors)
                if (f.first.depth != 0) throw InvalidArgument("non-polynomial coefficient");
        out += mul(c, apply_derivation(shift, dm), *pres);
    }
    return from_polynomial(out, w.n);
}

DifferenceForm delta_closed(const DifferenceForm& w, int N) {
    std::set<std::vector<int>> targets;
    for (const auto& [I, c] : w.terms)
        for (int i = 0; i < w.n; ++i)
            if (I[static_cast<std::size_t>(i)] + 1 <= N - 1) {
                std::vector<int> J = I;
                ++J[static_cast<std::size_t>(i)];
                targets.insert(J);
            }
    DifferenceForm out;
    out.n = w.n;
    for (const auto& J : targets) {
        GradedPolynomial acc;
        int prefix = 0;
        for (int i = 0; i < w.n; ++i) {
            int Ji = J[static_cast<std::size_t>(i)];
            if (Ji >= 1) {
                std::vector<int> I = J;
                --I[static_cast<std::size_t>(i)];
                auto it = w.terms.find(I);
                if (it != w.terms.end()) {
                    GradedPolynomial t = Ji == 1 ? finite_difference(it->second, i + 1) : it->second;
                    acc += prefix % 2 ? -t : t;
                }
            }
            prefix += Ji;
        }
        out.add(J, acc);
    }
    return out;
}

DifferenceForm delta_apply(const DifferenceForm& w, int N) {
    DifferenceForm a = delta_leibniz(w, N);
    DifferenceForm b = delta_closed(w, N);
    if (!(a == b)) throw ConsistencyError("difference operator: closed coefficient formula disagrees with Leibniz expansion");
    return a;
}

DifferenceForm random_difference_form(int n, int N, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> terms(1, 3), depth(0, N - 1), coeff(-3, 3), deg(0, 2), site(1, n);
    std::vector<GVar> vars;
    for (int i = 1; i <= n; ++i) vars.push_back(GVar("m", i, 0, 0));
    Presentation free = free_presentation(vars);
    DifferenceForm w;
    w.n = n;
    int k = terms(rng);
    for (int t = 0; t < k; ++t) {
        std::vector<int> I(static_cast<std::size_t>(n));
        for (int& j : I) j = depth(rng);
        GradedPolynomial c;
        for (int u = 0; u < 2; ++u) {
            int a = coeff(rng);
            if (a == 0) continue;
            GradedPolynomial m = GradedPolynomial::constant(a);
            int dg = deg(rng);
            for (int e = 0; e < dg; ++e) m = mul(m, GradedPolynomial::variable(vars[static_cast<std::size_t>(site(rng) - 1)]), free);
            c += m;
        }
        w.add(I, c);
    }
    return w;
}

PresentationPtr dn_simplex(int n, int N) { return omega_space(N, n, true, 1, "m").pres; }

AlgebraMorphism dn_map(const std::vector<int>& f, int m, int N) { return omega_map(f, m, N, "m"); }

}  // namespace ndga
