#include "ndga/acceptance.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "ndga/dga.hpp"
#include "ndga/forms.hpp"
#include "ndga/liealgebroid.hpp"
#include "ndga/ncomplex.hpp"

namespace ndga {

int bareiss_rank(const Matrix& m) {
    const int R = m.rows(), C = m.cols();
    std::vector<std::vector<Integer>> a(static_cast<std::size_t>(R), std::vector<Integer>(static_cast<std::size_t>(C)));
    for (int r = 0; r < R; ++r) {
        Integer l = 1;
        for (int c = 0; c < C; ++c) l = lcm(l, m.at(r, c).get_den());
        for (int c = 0; c < C; ++c) a[r][c] = m.at(r, c).get_num() * (l / m.at(r, c).get_den());
    }
    int rank = 0;
    Integer prev = 1;
    for (int c = 0; c < C && rank < R; ++c) {
        int piv = -1;
        for (int r = rank; r < R; ++r)
            if (a[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[piv], a[rank]);
        for (int r = rank + 1; r < R; ++r) {
            for (int k = c + 1; k < C; ++k) a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
            a[r][c] = 0;
        }
        prev = a[rank][c];
        ++rank;
    }
    return rank;
}

bool criterion_selected(int criterion, const std::string& group, const std::string& filter) {
    if (filter.empty()) return true;
    if (filter == group) return true;
    return filter == std::to_string(criterion);
}

namespace {

struct Ctx {
    std::vector<CheckResult> checks;
    int criterion = 0;
    std::string group;

    void check(const std::string& name, bool pass, const std::string& detail = "") {
        checks.push_back({criterion, group, name, pass, detail});
    }
};

// c_k parts written as lists of (word, coefficient)
using Part = std::vector<std::pair<std::vector<int>, int>>;

bool part_equals(const NCPolynomial& eq, int k, const Part& expected, std::string& detail) {
    NCPolynomial want;
    for (const auto& [w, c] : expected) want.add(w, k, c);
    NCPolynomial got = eq.part(k);
    if (got == want) return true;
    detail = "c" + std::to_string(k) + " = " + render_mc_equation(got, 99);
    return false;
}

void criterion1(Ctx& c, const AcceptanceOptions& o) {
    NCPolynomial eq = mc_equation(3, 3, o.weights);
    std::string d;
    c.check("c0 = E2 + E1E0 + E0^3", part_equals(eq, 0, {{{2}, 1}, {{1, 0}, 1}, {{0, 0, 0}, 1}}, d), d);
    c.check("c1 = E1 + E0^2", part_equals(eq, 1, {{{1}, 1}, {{0, 0}, 1}}, d), d);
    c.check("c2 = E0", part_equals(eq, 2, {{{0}, 1}}, d), d);
    std::string r = render_mc_equation(eq);
    c.check("rendering", r == "(d2(e) + d(e)e + e^3) + (d(e) + e^2) d + e d^2 = 0", r);
}

void criterion2(Ctx& c, const AcceptanceOptions& o) {
    NCPolynomial eq = mc_equation(4, 3, o.weights);
    std::string d;
    c.check("c0 = E0^4 + E0^2E1 + E1E0^2 + E2E0 + E0E2 + E1^2",
            part_equals(eq, 0, {{{0, 0, 0, 0}, 1}, {{0, 0, 1}, 1}, {{1, 0, 0}, 1}, {{2, 0}, 1}, {{0, 2}, 1}, {{1, 1}, 1}}, d),
            d);
    c.check("c1 = 0", part_equals(eq, 1, {}, d), d);
    c.check("c2 = 2E0^2 + 2E1", part_equals(eq, 2, {{{0, 0}, 2}, {{1}, 2}}, d), d);
    c.check("c3 = 0", part_equals(eq, 3, {}, d), d);
}

void criterion3(Ctx& c, const AcceptanceOptions& o) {
    struct Spot {
        const char* s;
        int N;
        int value;
        int paths;
    };
    const Spot spots[] = {{"2", 3, 1, 1}, {"1,0", 3, 1, 1}, {"0", 3, 1, 3},
                          {"1,1", 4, 2, 2}, {"0", 4, 0, 4}, {"0,0,0,0", 4, 1, 1}};
    for (const Spot& s : spots) {
        MultiIndex m = MultiIndex::parse(s.s);
        Integer v = mc_coefficient(m, s.N, o.weights);
        auto paths = enumerate_paths(m, s.N, o.weights);
        Integer sum = 0;
        for (const auto& p : paths) sum += p.weight;
        std::string label = "c(" + m.str() + "," + std::to_string(s.N) + ")";
        std::ostringstream det;
        det << "value " << v << " (expected " << s.value << "), paths " << paths.size() << " (expected " << s.paths << ")";
        if (v != s.value || static_cast<int>(paths.size()) != s.paths)
            for (const auto& p : paths) det << "; " << p.str() << " [" << p.weight << "]";
        c.check(label, v == s.value && static_cast<int>(paths.size()) == s.paths && sum == v, det.str());
    }
}

void criterion4(Ctx& c, const AcceptanceOptions& o) {
    for (int N = 3; N <= 6; ++N) {
        McIdentityVerdict v = verify_mc_identity(N, o.weights);
        std::ostringstream det;
        det << "unfiltered sum " << (v.unfiltered_equal ? "matches" : "differs");
        if (!v.filtered_equal && !v.residual.empty()) {
            const auto& [w, x] = *v.residual.begin();
            det << "; residual has " << v.residual.size() << " words, first " << w << " with coefficient " << x;
        }
        c.check("N=" + std::to_string(N), v.filtered_equal, det.str());
    }
}

void criterion5(Ctx& c, const AcceptanceOptions&) {
    bool sums = true, words = true;
    std::string det;
    for (int N = 2; N <= 10; ++N) {
        InfinitesimalVerdict v = verify_infinitesimal(N);
        if (!v.matches_path_sums && sums) det += "path sums differ at N=" + std::to_string(N) + "; ";
        if (!v.matches_words && words) det += "words differ at N=" + std::to_string(N) + "; ";
        sums = sums && v.matches_path_sums;
        words = words && v.matches_words;
    }
    c.check("composition sums equal c((N-k-1),N), 2<=N<=10", sums, det);
    c.check("t-linear part of (d+te)^N, 2<=N<=10", words, det);
}

void criterion6(Ctx& c, const AcceptanceOptions&) {
    Bounds b{8, 4};
    struct Case {
        int N, n, order;
        bool witness;
    };
    const Case cases[] = {{3, 1, 3, true}, {3, 2, 5, true}, {4, 1, 4, false}};
    for (const Case& k : cases) {
        Dga D = omega_space(k.N, k.n);
        NilpotencyVerdict v = nilpotency_check(D.d, k.order, b);
        std::string label = "Omega_" + std::to_string(k.N) + "(R^" + std::to_string(k.n) + ")";
        c.check(label + " d^" + std::to_string(k.order) + " = 0", v.verified && D.claimed_order == k.order,
                std::to_string(v.monomials_checked) + " monomials" +
                    (v.counterexample ? ", counterexample " + v.counterexample->str() : ""));
        if (k.witness) {
            auto w = nonzero_power_witness(D.d, k.order - 1, b);
            c.check(label + " d^" + std::to_string(k.order - 1) + " != 0", w.has_value(),
                    w ? w->first.str() + " -> " + format_polynomial(w->second) : "no witness");
        }
    }
}

void criterion7(Ctx& c, const AcceptanceOptions& o) {
    std::mt19937_64 rng(o.seed + 7);
    for (auto [n, N] : std::vector<std::pair<int, int>>{{1, 3}, {2, 3}, {1, 4}}) {
        int order = n * (N - 1) + 1;
        int ok = 0;
        for (int t = 0; t < 100; ++t) {
            DifferenceForm w = random_difference_form(n, N, rng);
            for (int k = 0; k < order; ++k) w = delta_apply(w, N);
            ok += w.terms.empty();
        }
        c.check("delta^" + std::to_string(order) + " = 0 on D_" + std::to_string(N) + "(Z^" + std::to_string(n) + ")",
                ok == 100, std::to_string(ok) + "/100");
    }
    int agree = 0;
    for (int t = 0; t < 500; ++t) {
        int n = std::uniform_int_distribution<int>(1, 3)(rng);
        int N = std::uniform_int_distribution<int>(2, 4)(rng);
        DifferenceForm w = random_difference_form(n, N, rng);
        agree += delta_closed(w, N) == delta_leibniz(w, N);
    }
    c.check("closed coefficient formula = Leibniz", agree == 500, std::to_string(agree) + "/500");
}

void criterion8(Ctx& c, const AcceptanceOptions& o) {
    std::mt19937_64 rng(o.seed + 8);
    int ok[5] = {0, 0, 0, 0, 0}, display = 0;
    for (int t = 0; t < 200; ++t) {
        int m = std::uniform_int_distribution<int>(1, 3)(rng);
        std::vector<int> grades;
        for (int i = 0; i < m; ++i) grades.push_back(std::uniform_int_distribution<int>(0, 1)(rng));
        PresentationPtr P = field_presentation(grades);
        VectorField a = random_vector_field(P, rng);
        for (int N = 2; N <= 4; ++N) ok[N] += field_power_closed(P, a, N) == field_power_direct(P, a, N);
        display += field_square_display(P, a) == field_power_closed(P, a, 2);
    }
    for (int N = 2; N <= 4; ++N)
        c.check("closed = direct, N=" + std::to_string(N), ok[N] == 200, std::to_string(ok[N]) + "/200");
    c.check("N=2 two-term form", display == 200, std::to_string(display) + "/200");
}

void criterion9(Ctx& c, const AcceptanceOptions& o) {
    std::mt19937_64 rng(o.seed + 9);
    DeformationReport r1 = deform_de_rham(example_square_zero());
    c.check("first matrix: square = 0", r1.square_zero);
    DeformationReport r2 = deform_de_rham(example_square_nonzero());
    c.check("second matrix: square != 0", !r2.square_zero);
    int cube = 0, closed = 0;
    for (int t = 0; t < 100; ++t) {
        int n = std::uniform_int_distribution<int>(1, 4)(rng);
        DeformationReport r = deform_de_rham(random_deformation(n, 2, true, rng));
        cube += r.cube_zero;
        closed += r.square_matches_closed;
    }
    c.check("infinitesimal cube = 0", cube == 100, std::to_string(cube) + "/100");
    c.check("infinitesimal square = closed form", closed == 100, std::to_string(closed) + "/100");
    int printed = 0, corrected = 0;
    std::string first_miss;
    for (int t = 0; t < 50; ++t) {
        int n = std::uniform_int_distribution<int>(2, 4)(rng);
        DeformationMatrix a = random_deformation(n, 2, false, rng);
        DeformationReport r = deform_de_rham(a);
        printed += r.cube_matches_printed;
        corrected += r.cube_matches_corrected;
        if (!r.cube_matches_printed && first_miss.empty()) first_miss = "first mismatch at n=" + std::to_string(n);
    }
    c.check("full cube = bracketed closed form", printed == 50,
            std::to_string(printed) + "/50; with (delta + a) before the second derivatives " + std::to_string(corrected) +
                "/50" + (first_miss.empty() ? "" : "; " + first_miss));
    int zero = 0;
    for (int t = 0; t < 50; ++t) {
        int n = std::uniform_int_distribution<int>(2, 4)(rng);
        zero += deform_de_rham(linear_deformation(random_upper_square_zero(n, rng))).cube_zero;
    }
    int general = 0;
    for (int t = 0; t < 50; ++t) {
        int n = std::uniform_int_distribution<int>(2, 4)(rng);
        general += deform_de_rham(linear_deformation(random_square_zero(n, rng))).cube_zero;
    }
    c.check("A^2 = 0 (strictly upper triangular) gives cube 0", zero == 50,
            std::to_string(zero) + "/50; conjugated Jordan forms " + std::to_string(general) + "/50");
}

void criterion10(Ctx& c, const AcceptanceOptions& o) {
    std::mt19937_64 rng(o.seed + 10);
    int agree = 0, implication = 0, witnesses = 0;
    for (int t = 0; t < 200; ++t) {
        int r = std::uniform_int_distribution<int>(2, 4)(rng);
        ThreeLieVerdict v = is_3_lie(random_constants(r, rng));
        agree += v.agree();
        implication += !v.jacobi || v.three_lie_operator;
        witnesses += !v.jacobi && v.three_lie_operator;
    }
    c.check("operator verdict = shuffle verdict", agree == 200,
            std::to_string(agree) + "/200, non-Jacobi 3-Lie witnesses " + std::to_string(witnesses));
    c.check("Jacobi implies 3-Lie", implication == 200, std::to_string(implication) + "/200");
    ThreeLieVerdict s = is_3_lie(sl2_structure());
    c.check("sl2", s.jacobi && s.three_lie_operator && s.three_lie_shuffle);
    ThreeLieVerdict z = is_3_lie(StructureData::zero(0, 3));
    c.check("abelian", z.jacobi && z.three_lie_operator && z.three_lie_shuffle);
}

void criterion11(Ctx& c, const AcceptanceOptions& o) {
    std::mt19937_64 rng(o.seed + 11);
    int agree2 = 0, agree3 = 0, errors = 0, nonlie = 0;
    for (int t = 0; t < 100; ++t) {
        StructureData S = random_structure(2, 2, 1, rng);
        try {
            IdentityReport r2 = algebroid_identities(S, 2);
            agree2 += r2.agree();
            nonlie += !r2.operator_vanishes;
        } catch (const ConsistencyError&) {
            ++errors;
        }
        agree3 += algebroid_identities(S, 3).agree();
    }
    c.check("order 2: residuals vanish iff d^2 = 0", agree2 == 100,
            std::to_string(agree2) + "/100, " + std::to_string(nonlie) + " with d^2 != 0");
    c.check("order 3: residuals vanish iff cube = 0", agree3 == 100, std::to_string(agree3) + "/100");
    IdentityReport tan = algebroid_identities(tangent_structure(2), 3);
    c.check("tangent bundle", tan.residuals_vanish && tan.operator_vanishes &&
                                  algebroid_identities(tangent_structure(2), 2).residuals_vanish);
}

void criterion12(Ctx& c, const AcceptanceOptions& o) {
    std::mt19937_64 rng(o.seed + 12);
    NComplex z;
    z.order = 3;
    z.dims = {{0, 2}, {1, 3}, {2, 1}};
    bool zero_ok = true;
    for (int p = 1; p <= 2; ++p)
        for (int i = -1; i <= 3; ++i) zero_ok = zero_ok && cohomology(z, p, i).dimension == z.dim(i);
    c.check("zero differential: pH^i = V^i", zero_ok);
    int invariant = 0, oracle = 0;
    for (int t = 0; t < 50; ++t) {
        int total = std::uniform_int_distribution<int>(1, 12)(rng);
        StringDecomposition s = random_strings(3, total, 4, rng());
        NComplex C = complex_from_strings(3, s);
        std::map<int, Matrix> P;
        for (const auto& [i, d] : C.dims) P[i] = random_invertible(d, rng());
        NComplex D = change_basis(C, P);
        bool inv = check_ncomplex(D).valid, orc = true;
        for (int p = 1; p <= 2; ++p)
            for (int i = -1; i <= 7; ++i) {
                int a = cohomology(C, p, i).dimension, b = cohomology(D, p, i).dimension;
                int ker = D.dim(i) - bareiss_rank(D.power(i, p));
                int img = bareiss_rank(D.power(i - (3 - p), 3 - p));
                inv = inv && a == b;
                orc = orc && b == ker - img;
            }
        invariant += inv;
        oracle += orc;
    }
    c.check("basis-change invariance", invariant == 50, std::to_string(invariant) + "/50");
    c.check("fraction-free rank oracle", oracle == 50, std::to_string(oracle) + "/50");
}

struct Entry {
    int criterion;
    const char* group;
    const char* title;
    double budget;
    void (*run)(Ctx&, const AcceptanceOptions&);
};

const Entry kEntries[] = {
    {1, "pathsum", "(3,3) Maurer-Cartan equation", 1, criterion1},
    {2, "pathsum", "(3,4) Maurer-Cartan equation", 1, criterion2},
    {3, "pathsum", "coefficient spot checks", 1, criterion3},
    {4, "pathsum", "word oracle", 10, criterion4},
    {5, "pathsum", "infinitesimal identity", 5, criterion5},
    {6, "forms", "Omega_N nilpotency", 30, criterion6},
    {7, "forms", "difference forms", 30, criterion7},
    {8, "operators", "vector-field powers", 30, criterion8},
    {9, "liealgebroid", "de Rham deformations", 60, criterion9},
    {10, "liealgebroid", "3-Lie dual path", 30, criterion10},
    {11, "liealgebroid", "algebroid identities", 60, criterion11},
    {12, "ncomplex", "N-complex cohomology", 10, criterion12},
};

}  // namespace

std::vector<CriterionSummary> run_acceptance(const AcceptanceOptions& opt) {
    std::vector<CriterionSummary> out;
    for (const Entry& e : kEntries) {
        if (!criterion_selected(e.criterion, e.group, opt.filter)) continue;
        Ctx ctx;
        ctx.criterion = e.criterion;
        ctx.group = e.group;
        auto start = std::chrono::steady_clock::now();
        try {
            e.run(ctx, opt);
        } catch (const std::exception& ex) {
            ctx.check("completed without error", false, ex.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        ctx.check("within " + std::to_string(static_cast<int>(e.budget)) + " s", secs <= e.budget);
        CriterionSummary s;
        s.criterion = e.criterion;
        s.group = e.group;
        s.title = e.title;
        s.seconds = secs;
        s.budget_seconds = e.budget;
        s.checks = std::move(ctx.checks);
        s.pass = true;
        for (const auto& ch : s.checks) s.pass = s.pass && ch.pass;
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace ndga
