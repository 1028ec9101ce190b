#include "ndga/liealgebroid.hpp"

#include <algorithm>
#include <numeric>

#include "ndga/errors.hpp"

namespace ndga {

GVar base_var(int i) { return GVar("x", i + 1, 0, 0); }
GVar fiber_var(int alpha) { return GVar("th", alpha + 1, 0, 1); }

PresentationPtr algebroid_presentation(int n, int r) {
    if (n < 0 || r < 0) throw InvalidArgument("dimensions must be non-negative");
    auto p = std::make_shared<Presentation>();
    for (int i = 0; i < n; ++i) p->add_generator(base_var(i));
    for (int a = 0; a < r; ++a) p->add_generator(fiber_var(a));
    return p;
}

namespace {

GradedPolynomial th(int a) { return GradedPolynomial::variable(fiber_var(a)); }

GradedPolynomial dx(int i, const GradedPolynomial& p, const Presentation& pres) {
    return partial_derivative(base_var(i), p, pres);
}

bool is_constant(const GradedPolynomial& p) {
    return p.is_zero() || (p.size() == 1 && p.terms().begin()->first.is_one());
}

Rational constant_value(const GradedPolynomial& p) { return p.coefficient(Monomial::one()); }

void check_base_only(const GradedPolynomial& p, int n, const std::string& what) {
    for (const GVar& v : p.variables())
        if (v.family != "x" || v.depth != 0 || v.site < 1 || v.site > n || v.grade != 0)
            throw InvalidArgument(what + " mentions " + v.name() + ", expected a function of x1..x" + std::to_string(n));
}

int perm_sign(const std::vector<int>& p) {
    int s = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) s = -s;
    return s;
}

}  // namespace

StructureData StructureData::zero(int n, int r) {
    StructureData S;
    S.n = n;
    S.r = r;
    S.rho.assign(static_cast<std::size_t>(n), std::vector<GradedPolynomial>(static_cast<std::size_t>(r)));
    S.C.assign(static_cast<std::size_t>(r),
               std::vector<std::vector<GradedPolynomial>>(static_cast<std::size_t>(r),
                                                          std::vector<GradedPolynomial>(static_cast<std::size_t>(r))));
    return S;
}

void StructureData::set_bracket(int alpha, int beta, int gamma, const GradedPolynomial& c) {
    if (alpha < 0 || beta < 0 || gamma < 0 || alpha >= r || beta >= r || gamma >= r)
        throw InvalidArgument("bracket index out of range");
    if (alpha == beta) {
        if (!c.is_zero()) throw InvalidArgument("C^gamma_{alpha alpha} must vanish");
        return;
    }
    C[gamma][alpha][beta] = c;
    C[gamma][beta][alpha] = -c;
}

void StructureData::validate() const {
    if (n < 0 || r < 0) throw InvalidArgument("dimensions must be non-negative");
    if (static_cast<int>(rho.size()) != n) throw InvalidArgument("anchor must have n rows");
    for (const auto& row : rho) {
        if (static_cast<int>(row.size()) != r) throw InvalidArgument("anchor rows must have r entries");
        for (const auto& p : row) check_base_only(p, n, "anchor entry");
    }
    if (static_cast<int>(C.size()) != r) throw InvalidArgument("bracket must have r slices");
    for (int g = 0; g < r; ++g) {
        if (static_cast<int>(C[g].size()) != r) throw InvalidArgument("bracket slices must be r x r");
        for (int a = 0; a < r; ++a) {
            if (static_cast<int>(C[g][a].size()) != r) throw InvalidArgument("bracket slices must be r x r");
            for (int b = 0; b < r; ++b) {
                check_base_only(C[g][a][b], n, "bracket entry");
                if (C[g][a][b] != -C[g][b][a])
                    throw InvalidArgument("bracket is not antisymmetric at C^" + std::to_string(g + 1) + "_{" +
                                          std::to_string(a + 1) + "," + std::to_string(b + 1) + "}");
            }
        }
    }
}

bool StructureData::constant_bracket() const {
    for (const auto& s : C)
        for (const auto& row : s)
            for (const auto& p : row)
                if (!is_constant(p)) return false;
    return true;
}

Derivation ce_derivation(const StructureData& S) {
    S.validate();
    PresentationPtr pres = algebroid_presentation(S.n, S.r);
    Derivation d(pres, 1);
    for (int i = 0; i < S.n; ++i) {
        GradedPolynomial img;
        for (int a = 0; a < S.r; ++a) img += mul(S.rho[i][a], th(a), *pres);
        d.set_image(base_var(i), img);
    }
    for (int g = 0; g < S.r; ++g) {
        GradedPolynomial img;
        for (int a = 0; a < S.r; ++a)
            for (int b = a + 1; b < S.r; ++b) img -= mul(S.C[g][a][b], mul(th(a), th(b), *pres), *pres);
        d.set_image(fiber_var(g), img);
    }
    return d;
}

Rational evaluate_form(const GradedPolynomial& w, const std::vector<int>& args) {
    std::vector<int> sorted = args;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return 0;
    Monomial m;
    for (int a : sorted) {
        Monomial f = Monomial::of(fiber_var(a));
        SignedMonomial s = free_mul(m, f);
        m = s.mono;
    }
    for (const auto& [mono, c] : w.terms())
        for (const auto& [v, e] : mono.factors)
            if (v.family != "th") throw InvalidArgument("form evaluation needs constant coefficients");
    // th^{a1}...th^{ak}(e_{b1},...,e_{bk}) = det[th^{ai}(e_{bj})]
    return w.coefficient(m) * perm_sign(args);
}

std::vector<Rational> bracket(const StructureData& S, const std::vector<Rational>& u, const std::vector<Rational>& v) {
    if (!S.constant_bracket()) throw InvalidArgument("bracket evaluation needs constant structure constants");
    std::vector<Rational> w(static_cast<std::size_t>(S.r));
    for (int a = 0; a < S.r; ++a) {
        if (u[a] == 0) continue;
        for (int b = 0; b < S.r; ++b) {
            if (v[b] == 0) continue;
            for (int g = 0; g < S.r; ++g) {
                Rational c = constant_value(S.C[g][a][b]);
                if (c != 0) w[g] += u[a] * v[b] * c;
            }
        }
    }
    return w;
}

namespace {

std::vector<Rational> unit(int r, int a) {
    std::vector<Rational> e(static_cast<std::size_t>(r));
    e[a] = 1;
    return e;
}

}  // namespace

CartanCheck cartan_check(const StructureData& S) {
    if (S.n != 0) throw InvalidArgument("multilinear evaluation is defined here for Lie algebras (n = 0)");
    Derivation d = ce_derivation(S);
    CartanCheck out{true, true};
    const int r = S.r;
    for (int g = 0; g < r; ++g) {
        GradedPolynomial d1 = d.image(fiber_var(g));
        GradedPolynomial d2 = apply_derivation(d, d1);
        for (int a = 0; a < r; ++a)
            for (int b = 0; b < r; ++b)
                if (evaluate_form(d1, {a, b}) != -bracket(S, unit(r, a), unit(r, b))[g]) out.first = false;
        auto sh = shuffles({2, 1});
        for (int a = 0; a < r; ++a)
            for (int b = 0; b < r; ++b)
                for (int c = 0; c < r; ++c) {
                    std::vector<std::vector<Rational>> v{unit(r, a), unit(r, b), unit(r, c)};
                    Rational rhs = 0;
                    for (const auto& [p, s] : sh) rhs += s * bracket(S, bracket(S, v[p[0]], v[p[1]]), v[p[2]])[g];
                    if (evaluate_form(d2, {a, b, c}) != rhs) out.second = false;
                }
    }
    return out;
}

std::vector<std::pair<std::vector<int>, int>> shuffles(const std::vector<int>& blocks) {
    int total = std::accumulate(blocks.begin(), blocks.end(), 0);
    std::vector<int> p(static_cast<std::size_t>(total));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::pair<std::vector<int>, int>> out;
    do {
        bool ok = true;
        int start = 0;
        for (int b : blocks) {
            for (int k = start; k + 1 < start + b; ++k)
                if (p[k] > p[k + 1]) ok = false;
            start += b;
        }
        if (ok) out.push_back({p, perm_sign(p)});
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

ThreeLieVerdict is_3_lie(const StructureData& S) {
    S.validate();
    if (S.n != 0 || !S.constant_bracket()) throw InvalidArgument("3-Lie check needs a Lie algebra: n = 0, constant C");
    ThreeLieVerdict v;
    Derivation d = ce_derivation(S);
    v.jacobi = diamond_power(d, 2).is_zero();
    v.three_lie_operator = diamond_power(d, 3).is_zero();
    const int r = S.r;
    auto sh211 = shuffles({2, 1, 1});
    auto sh22 = shuffles({2, 2});
    v.three_lie_shuffle = true;
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int c = 0; c < r; ++c)
                for (int e = 0; e < r; ++e) {
                    std::vector<std::vector<Rational>> u{unit(r, a), unit(r, b), unit(r, c), unit(r, e)};
                    std::vector<Rational> lhs(static_cast<std::size_t>(r)), rhs(static_cast<std::size_t>(r));
                    for (const auto& [p, s] : sh211) {
                        auto w = bracket(S, bracket(S, bracket(S, u[p[0]], u[p[1]]), u[p[2]]), u[p[3]]);
                        for (int g = 0; g < r; ++g) lhs[g] += s * w[g];
                    }
                    for (const auto& [p, s] : sh22) {
                        auto w = bracket(S, bracket(S, u[p[0]], u[p[1]]), bracket(S, u[p[2]], u[p[3]]));
                        for (int g = 0; g < r; ++g) rhs[g] += s * w[g];
                    }
                    for (int g = 0; g < r; ++g)
                        if (lhs[g] != rhs[g]) {
                            v.three_lie_shuffle = false;
                            v.residuals.push_back("(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "," +
                                                  std::to_string(c + 1) + "," + std::to_string(e + 1) +
                                                  "): " + std::to_string(g + 1) + " -> " + Rational(lhs[g] - rhs[g]).get_str());
                        }
                }
    return v;
}

DeformationMatrix DeformationMatrix::from_rows(const std::vector<std::vector<GradedPolynomial>>& rows,
                                               bool infinitesimal) {
    DeformationMatrix m;
    m.n = static_cast<int>(rows.size());
    m.infinitesimal = infinitesimal;
    m.a.assign(static_cast<std::size_t>(m.n), std::vector<GradedPolynomial>(static_cast<std::size_t>(m.n)));
    for (int b = 0; b < m.n; ++b) {
        if (static_cast<int>(rows[b].size()) != m.n) throw InvalidArgument("deformation matrix must be square");
        for (int j = 0; j < m.n; ++j) m.a[j][b] = rows[b][j];
    }
    return m;
}

void DeformationMatrix::validate() const {
    if (static_cast<int>(a.size()) != n) throw InvalidArgument("deformation matrix must be square");
    for (const auto& row : a) {
        if (static_cast<int>(row.size()) != n) throw InvalidArgument("deformation matrix must be square");
        for (const auto& p : row) check_base_only(p, n, "deformation entry");
    }
}

GVar deformation_parameter() { return GVar("t", -1, 0, 0); }

PresentationPtr deformation_presentation(int n, bool infinitesimal) {
    auto p = std::make_shared<Presentation>();
    for (int i = 0; i < n; ++i) p->add_generator(base_var(i));
    for (int a = 0; a < n; ++a) p->add_generator(fiber_var(a));
    if (infinitesimal) {
        p->add_generator(deformation_parameter());
        p->add_annihilator(deformation_parameter(), deformation_parameter());
    }
    return p;
}

namespace {

// delta^i_alpha + [t] a^i_alpha
GradedPolynomial deformed_entry(const DeformationMatrix& m, int i, int alpha, const Presentation& pres) {
    GradedPolynomial e = m.a[i][alpha];
    if (m.infinitesimal) e = mul(GradedPolynomial::variable(deformation_parameter()), e, pres);
    if (i == alpha) e += GradedPolynomial::constant(1);
    return e;
}

}  // namespace

Derivation deformation_field(const DeformationMatrix& m) {
    m.validate();
    PresentationPtr pres = deformation_presentation(m.n, m.infinitesimal);
    Derivation d(pres, 1);
    for (int i = 0; i < m.n; ++i) {
        GradedPolynomial img;
        for (int a = 0; a < m.n; ++a) img += mul(deformed_entry(m, i, a, *pres), th(a), *pres);
        d.set_image(base_var(i), img);
    }
    return d;
}

Derivation infinitesimal_square_closed(const DeformationMatrix& m) {
    m.validate();
    PresentationPtr pres = deformation_presentation(m.n, true);
    GradedPolynomial t = GradedPolynomial::variable(deformation_parameter());
    Derivation d(pres, 2);
    for (int j = 0; j < m.n; ++j) {
        GradedPolynomial img;
        for (int a = 0; a < m.n; ++a)
            for (int b = 0; b < m.n; ++b)
                img += mul(mul(t, dx(a, m.a[j][b], *pres), *pres), mul(th(a), th(b), *pres), *pres);
        d.set_image(base_var(j), img);
    }
    return d;
}

namespace {

Derivation full_cube(const DeformationMatrix& m, bool corrected) {
    m.validate();
    if (m.infinitesimal) throw InvalidArgument("the bracketed cube formula is for full deformations");
    PresentationPtr pres = deformation_presentation(m.n, false);
    const int n = m.n;
    Derivation d(pres, 3);
    for (int j = 0; j < n; ++j) {
        GradedPolynomial img;
        for (int g = 0; g < n; ++g)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    if (g == a || a == b || g == b) continue;
                    GradedPolynomial coeff;
                    for (int l = 0; l < n; ++l) {
                        GradedPolynomial outer = deformed_entry(m, l, g, *pres);
                        if (outer.is_zero()) continue;
                        GradedPolynomial inner;
                        for (int i = 0; i < n; ++i) {
                            inner += mul(dx(l, m.a[i][a], *pres), dx(i, m.a[j][b], *pres), *pres);
                            GradedPolynomial lead = corrected ? deformed_entry(m, i, a, *pres) : m.a[i][a];
                            inner += mul(lead, dx(l, dx(i, m.a[j][b], *pres), *pres), *pres);
                        }
                        coeff += mul(outer, inner, *pres);
                    }
                    img += mul(coeff, mul(th(g), mul(th(a), th(b), *pres), *pres), *pres);
                }
        d.set_image(base_var(j), img);
    }
    return d;
}

}  // namespace

Derivation full_cube_printed(const DeformationMatrix& a) { return full_cube(a, false); }
Derivation full_cube_corrected(const DeformationMatrix& a) { return full_cube(a, true); }

DeformationReport deform_de_rham(const DeformationMatrix& a) {
    DeformationReport rep;
    rep.field = deformation_field(a);
    rep.square = diamond_power(rep.field, 2);
    rep.cube = diamond_power(rep.field, 3);
    rep.square_zero = rep.square.is_zero();
    rep.cube_zero = rep.cube.is_zero();
    if (a.infinitesimal) {
        rep.square_matches_closed = rep.square == infinitesimal_square_closed(a);
    } else {
        rep.cube_matches_printed = rep.cube == full_cube_printed(a);
        rep.cube_matches_corrected = rep.cube == full_cube_corrected(a);
    }
    return rep;
}

namespace {

GradedPolynomial xv(int i) { return GradedPolynomial::variable(base_var(i - 1)); }

GradedPolynomial xprod(int i, int j) {
    std::vector<GVar> vars{base_var(i - 1)};
    if (j != i) vars.push_back(base_var(j - 1));
    Presentation free = free_presentation(vars);
    return mul(xv(i), xv(j), free);
}

}  // namespace

DeformationMatrix example_square_zero() {
    GradedPolynomial half_x4sq = xprod(4, 4) * Rational(1, 2);
    std::vector<std::vector<GradedPolynomial>> rows{
        {xv(1), half_x4sq, xv(1), xv(1)},
        {xv(2), xv(2), xv(3), xv(2)},
        {xv(3), xv(3), xv(2), xv(4)},
        {xv(4), xprod(4, 1), xv(4), xv(3)},
    };
    return DeformationMatrix::from_rows(rows, true);
}

DeformationMatrix example_square_nonzero() {
    std::vector<std::vector<GradedPolynomial>> rows{
        {xprod(1, 4), xv(1), xv(1), xv(1)},
        {xv(2), xprod(2, 4), xv(2), xv(2)},
        {xv(3), xv(3), xprod(3, 4), xv(3)},
        {xv(4), xv(4), xv(4), xprod(1, 4)},
    };
    return DeformationMatrix::from_rows(rows, true);
}

DeformationMatrix linear_deformation(const Matrix& A) {
    if (A.rows() != A.cols()) throw InvalidArgument("A must be square");
    DeformationMatrix m;
    m.n = A.rows();
    m.a.assign(static_cast<std::size_t>(m.n), std::vector<GradedPolynomial>(static_cast<std::size_t>(m.n)));
    for (int i = 0; i < m.n; ++i)
        for (int a = 0; a < m.n; ++a) m.a[i][a] = GradedPolynomial::variable(base_var(a)) * A.at(i, a);
    return m;
}

IdentityReport algebroid_identities(const StructureData& S, int order) {
    if (order != 2 && order != 3) throw InvalidArgument("order must be 2 or 3");
    S.validate();
    IdentityReport rep;
    rep.order = order;
    Derivation d = ce_derivation(S);
    const Presentation& pres = *d.presentation();
    const int n = S.n, r = S.r;
    const auto& rho = S.rho;
    auto push = [&](const std::string& label, const GradedPolynomial& p) {
        if (!p.is_zero()) rep.residuals.push_back({label, p});
    };
    auto M = [&](const GradedPolynomial& a, const GradedPolynomial& b) { return mul(a, b, pres); };

    if (order == 2) {
        rep.operator_vanishes = diamond_power(d, 2).is_zero();
        for (int i = 0; i < n; ++i)
            for (int a = 0; a < r; ++a)
                for (int b = a + 1; b < r; ++b) {
                    GradedPolynomial res;
                    for (int j = 0; j < n; ++j) res += M(rho[j][a], dx(j, rho[i][b], pres)) - M(rho[j][b], dx(j, rho[i][a], pres));
                    for (int g = 0; g < r; ++g) res -= M(rho[i][g], S.C[g][a][b]);
                    push("anchor i=" + std::to_string(i + 1) + " (" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")", res);
                }
        for (int mu = 0; mu < r; ++mu)
            for (int a = 0; a < r; ++a)
                for (int b = a + 1; b < r; ++b)
                    for (int g = b + 1; g < r; ++g) {
                        GradedPolynomial res;
                        int cyc[3][3] = {{a, b, g}, {b, g, a}, {g, a, b}};
                        for (auto& c : cyc) {
                            for (int i = 0; i < n; ++i) res += M(rho[i][c[0]], dx(i, S.C[mu][c[1]][c[2]], pres));
                            for (int nu = 0; nu < r; ++nu) res += M(S.C[mu][c[0]][nu], S.C[nu][c[1]][c[2]]);
                        }
                        push("cyclic mu=" + std::to_string(mu + 1) + " (" + std::to_string(a + 1) + "," +
                                 std::to_string(b + 1) + "," + std::to_string(g + 1) + ")",
                             res);
                    }
        rep.residuals_vanish = rep.residuals.empty();
        if (!rep.agree()) throw ConsistencyError("order-2 identities disagree with the square of the CE derivation");
        return rep;
    }

    rep.operator_vanishes = diamond_power(d, 3).is_zero();
    // The displayed identities use the half-bracket coordinate field, whose constants are -C here.
    auto Cp = [&](int g, int a, int b) { return -S.C[g][a][b]; };
    Rational half(1, 2), quarter(1, 4);
    auto theta_word = [&](std::initializer_list<int> idx) {
        GradedPolynomial w = GradedPolynomial::constant(1);
        for (int k : idx) w = M(w, th(k));
        return w;
    };
    auto distinct = [](std::initializer_list<int> idx) {
        std::vector<int> v(idx);
        std::sort(v.begin(), v.end());
        return std::adjacent_find(v.begin(), v.end()) == v.end();
    };

    for (int g = 0; g < r; ++g) {
        GradedPolynomial total;
        for (int nu = 0; nu < r; ++nu)
            for (int si = 0; si < r; ++si)
                for (int mu = 0; mu < r; ++mu)
                    for (int be = 0; be < r; ++be) {
                        if (!distinct({nu, si, mu, be})) continue;
                        GradedPolynomial c;
                        for (int j = 0; j < n; ++j) {
                            GradedPolynomial in1;
                            for (int i = 0; i < n; ++i) in1 += M(rho[i][be], dx(i, Cp(g, si, mu), pres));
                            c += half * M(rho[j][nu], dx(j, in1, pres));
                            GradedPolynomial in2;
                            for (int al = 0; al < r; ++al) in2 += M(Cp(g, al, be), Cp(al, si, mu));
                            c += half * M(rho[j][nu], dx(j, in2, pres));
                        }
                        for (int i = 0; i < n; ++i)
                            for (int la = 0; la < r; ++la) {
                                c += half * M(M(rho[i][be], dx(i, Cp(g, la, mu), pres)), Cp(la, nu, si));
                                c -= quarter * M(M(rho[i][la], Cp(la, nu, si)), dx(i, Cp(g, be, mu), pres));
                            }
                        for (int al = 0; al < r; ++al)
                            for (int la = 0; la < r; ++la) c += half * M(M(Cp(g, al, be), Cp(al, la, mu)), Cp(la, nu, si));
                        for (int al = 0; al < r; ++al)
                            for (int ep = 0; ep < r; ++ep) c -= quarter * M(M(Cp(al, be, mu), Cp(g, al, ep)), Cp(ep, nu, si));
                        if (!c.is_zero()) total += M(c, theta_word({nu, si, mu, be}));
                    }
        push("fiber gamma=" + std::to_string(g + 1), total);
    }
    for (int i = 0; i < n; ++i) {
        GradedPolynomial total;
        for (int si = 0; si < r; ++si)
            for (int nu = 0; nu < r; ++nu)
                for (int ga = 0; ga < r; ++ga) {
                    if (!distinct({si, nu, ga})) continue;
                    GradedPolynomial c;
                    for (int l = 0; l < n; ++l) {
                        GradedPolynomial in1;
                        for (int j = 0; j < n; ++j) in1 += M(rho[j][nu], dx(j, rho[i][ga], pres));
                        c += M(rho[l][si], dx(l, in1, pres));
                        GradedPolynomial in2;
                        for (int al = 0; al < r; ++al) in2 += M(rho[i][al], Cp(al, nu, ga));
                        c += half * M(rho[l][si], dx(l, in2, pres));
                    }
                    for (int j = 0; j < n; ++j)
                        for (int ep = 0; ep < r; ++ep) {
                            c += half * M(M(rho[j][ep], dx(j, rho[i][ga], pres)), Cp(ep, si, nu));
                            c -= half * M(M(rho[j][ga], dx(j, rho[i][ep], pres)), Cp(ep, si, nu));
                        }
                    for (int al = 0; al < r; ++al)
                        for (int be = 0; be < r; ++be) c += half * M(M(rho[i][al], Cp(al, be, ga)), Cp(be, si, nu));
                    if (!c.is_zero()) total += M(c, theta_word({si, nu, ga}));
                }
        push("base i=" + std::to_string(i + 1), total);
    }
    rep.residuals_vanish = rep.residuals.empty();
    return rep;
}

GradedPolynomial random_polynomial(int n, int max_degree, std::mt19937_64& rng, int max_terms) {
    std::uniform_int_distribution<int> coeff(-3, 3), terms(0, max_terms), deg(0, max_degree), var(0, std::max(0, n - 1));
    std::vector<GVar> vars;
    for (int i = 0; i < n; ++i) vars.push_back(base_var(i));
    Presentation free = free_presentation(vars);
    GradedPolynomial p;
    int k = terms(rng);
    for (int t = 0; t < k; ++t) {
        int c = coeff(rng);
        if (c == 0) continue;
        GradedPolynomial m = GradedPolynomial::constant(c);
        int dg = n == 0 ? 0 : deg(rng);
        for (int e = 0; e < dg; ++e) m = mul(m, GradedPolynomial::variable(vars[var(rng)]), free);
        p += m;
    }
    return p;
}

StructureData random_structure(int n, int r, int max_degree, std::mt19937_64& rng) {
    StructureData S = StructureData::zero(n, r);
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < r; ++a) S.rho[i][a] = random_polynomial(n, max_degree, rng, 2);
    for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b)
            for (int g = 0; g < r; ++g) S.set_bracket(a, b, g, random_polynomial(n, max_degree, rng, 2));
    return S;
}

StructureData random_constants(int r, std::mt19937_64& rng) {
    StructureData S = StructureData::zero(0, r);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double density = std::vector<double>{0.1, 0.2, 0.3}[std::uniform_int_distribution<int>(0, 2)(rng)];
    const int choices[3] = {-1, 1, 2};
    for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b)
            for (int g = 0; g < r; ++g)
                if (u(rng) < density)
                    S.set_bracket(a, b, g, GradedPolynomial::constant(choices[std::uniform_int_distribution<int>(0, 2)(rng)]));
    return S;
}

DeformationMatrix random_deformation(int n, int max_degree, bool infinitesimal, std::mt19937_64& rng) {
    DeformationMatrix m;
    m.n = n;
    m.infinitesimal = infinitesimal;
    m.a.assign(static_cast<std::size_t>(n), std::vector<GradedPolynomial>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < n; ++a) m.a[i][a] = random_polynomial(n, max_degree, rng, 2);
    return m;
}

Matrix random_square_zero(int n, std::mt19937_64& rng) {
    Matrix J(n, n);
    int blocks = n / 2 == 0 ? 0 : std::uniform_int_distribution<int>(1, n / 2)(rng);
    for (int b = 0; b < blocks; ++b) J.at(2 * b, 2 * b + 1) = 1;
    std::uniform_int_distribution<int> u(-2, 2);
    Matrix P;
    do {
        P = Matrix(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) P.at(i, j) = u(rng);
    } while (rank(P) < n);
    return P * J * inverse(P);
}

Matrix random_upper_square_zero(int n, std::mt19937_64& rng) {
    if (n < 2) throw InvalidArgument("a nonzero square-zero matrix needs n >= 2");
    std::uniform_int_distribution<int> u(-2, 2);
    std::bernoulli_distribution keep(0.4);
    for (;;) {
        Matrix A(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (keep(rng)) A.at(i, j) = u(rng);
        if (!A.is_zero() && (A * A).is_zero()) return A;
    }
}

StructureData sl2_structure() {
    // e1 = h, e2 = e, e3 = f: [h,e] = 2e, [h,f] = -2f, [e,f] = h
    StructureData S = StructureData::zero(0, 3);
    S.set_bracket(0, 1, 1, GradedPolynomial::constant(2));
    S.set_bracket(0, 2, 2, GradedPolynomial::constant(-2));
    S.set_bracket(1, 2, 0, GradedPolynomial::constant(1));
    return S;
}

StructureData tangent_structure(int n) {
    StructureData S = StructureData::zero(n, n);
    for (int i = 0; i < n; ++i) S.rho[i][i] = GradedPolynomial::constant(1);
    return S;
}

}  // namespace ndga
