#include <algorithm>

#include "ndga/dga.hpp"
#include "ndga/forms.hpp"
#include "support.hpp"

using namespace ndga;
using ndga::test::P;
using ndga::test::random_homogeneous;
using ndga::test::random_raw;

namespace {

// Sorts the factors by adjacent swaps, tracking the Koszul sign, then applies odd squares and annihilators.
GradedPolynomial oracle_normal_form(const RawTerm& t, const Presentation& pres) {
    std::vector<GVar> f = t.factors;
    int sign = 1;
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j + 1 < f.size() - i; ++j)
            if (f[j + 1] < f[j]) {
                if (f[j].odd() && f[j + 1].odd()) sign = -sign;
                std::swap(f[j], f[j + 1]);
            }
    std::map<GVar, int> exps;
    for (const GVar& v : f) ++exps[v];
    for (const auto& [v, e] : exps)
        if (v.odd() && e > 1) return {};
    for (const auto& [a, b] : pres.annihilators()) {
        if (a == b ? exps.count(a) && exps[a] > 1 : exps.count(a) && exps.count(b)) return {};
    }
    Monomial m;
    for (const auto& [v, e] : exps) {
        m.factors.push_back({v, e});
        m.grade += v.grade * e;
    }
    return GradedPolynomial::monomial(m, t.coeff * sign);
}

int grade_of(const GradedPolynomial& p) { return p.grade().value_or(0); }

}  // namespace

TEST_CASE("normal_form on the worked cases") {
    auto th1 = GVar("th", 1, 0, 1), th2 = GVar("th", 2, 0, 1);
    Presentation ext = free_presentation({th1, th2});
    CHECK(normal_form({RawTerm{1, {th2, th1}}}, ext) == -P("th1 * th2", ext));
    CHECK(normal_form({RawTerm{1, {th1, th1}}}, ext).is_zero());

    Dga om = omega_space(3, 1);
    CHECK(P("d1x1 * d2x1", *om.pres).is_zero());
    CHECK(P("d2x1 * d2x1", *om.pres).is_zero());
    CHECK(P("x1^3 * d2x1", *om.pres).size() == 1);

    Dga simplex = omega_space(3, 1, true);
    CHECK(P("x0", *simplex.pres) == P("1 - x1", *simplex.pres));
    CHECK(P("d2x0", *simplex.pres) == -P("d2x1", *simplex.pres));
}

TEST_CASE("unknown variables are rejected") {
    Dga om = omega_space(3, 1);
    CHECK_THROWS_AS(P("x2", *om.pres), PresentationMismatch);
    CHECK_THROWS_AS(P("d3x1", *om.pres), PresentationMismatch);
    CHECK_THROWS_AS(P("x1 +", *om.pres), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
}

TEST_CASE("mul on the worked cases") {
    Dga om = omega_space(3, 2);
    const Presentation& pr = *om.pres;
    auto p = P("x1 * d2x2 + 3/2 * d1x1", pr);
    CHECK(mul(GradedPolynomial::constant(1), p, pr) == p);
    CHECK(mul(P("d1x1", pr), P("d1x2", pr), pr) == P("d1x1 * d1x2", pr));
    CHECK(mul(P("d1x2", pr), P("d1x1", pr), pr) == -P("d1x1 * d1x2", pr));
    Dga one = omega_space(3, 1);
    auto s = P("x1 + d1x1", *one.pres);
    CHECK(mul(s, s, *one.pres) == P("x1^2 + 2 * x1 * d1x1", *one.pres));
}

TEST_CASE("format and parse round trip") {
    Dga om = omega_space(4, 2, true);
    auto rng = ndga::test::rng_for("roundtrip");
    for (int i = 0; i < 200; ++i) {
        GradedPolynomial p = normal_form({random_raw(om.pres->generators(), rng, 4)}, *om.pres);
        CHECK(P(format_polynomial(p), *om.pres) == p);
    }
}

TEST_CASE("normal_form matches the adjacent-swap oracle") {
    Dga om = omega_space(3, 2);
    auto th = GVar("th", 1, 0, 1);
    Presentation pres = *om.pres;
    pres.add_generator(th);
    auto rng = ndga::test::rng_for("oracle");
    for (int i = 0; i < 1000; ++i) {
        RawTerm t = random_raw(pres.generators(), rng, 5);
        CHECK(normal_form({t}, pres) == oracle_normal_form(t, pres));
    }
}

TEST_CASE("normal_form is idempotent") {
    Dga om = omega_space(3, 2, true);
    auto rng = ndga::test::rng_for("idempotent");
    std::vector<GVar> all = om.pres->generators();
    for (const auto& [v, img] : om.pres->substitutions()) all.push_back(v);
    for (int i = 0; i < 1000; ++i) {
        GradedPolynomial p = normal_form({random_raw(all, rng, 5), random_raw(all, rng, 3)}, *om.pres);
        CHECK(normal_form(p, *om.pres) == p);
    }
}

TEST_CASE("same-site positive-depth products vanish") {
    for (int N = 3; N <= 5; ++N) {
        Dga om = omega_space(N, 2);
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j < N; ++j)
                for (int k = 1; k < N; ++k) {
                    RawTerm t{1, {GVar("x", 1, 0, 0), GVar("x", i, j, j), GVar("x", 3 - i, 1, 1), GVar("x", i, k, k)}};
                    CHECK(normal_form({t}, *om.pres).is_zero());
                }
    }
}

TEST_CASE("mul is associative and graded-commutative on homogeneous inputs") {
    Dga om = omega_space(3, 2);
    auto th = GVar("th", 1, 0, 1);
    Presentation pres = *om.pres;
    pres.add_generator(th);
    auto rng = ndga::test::rng_for("assoc");
    std::uniform_int_distribution<int> g(0, 3);
    for (int i = 0; i < 300; ++i) {
        auto p = random_homogeneous(pres, g(rng), rng);
        auto q = random_homogeneous(pres, g(rng), rng);
        auto r = random_homogeneous(pres, g(rng), rng);
        CHECK(mul(mul(p, q, pres), r, pres) == mul(p, mul(q, r, pres), pres));
        int s = (grade_of(p) * grade_of(q)) % 2 ? -1 : 1;
        CHECK(mul(p, q, pres) == s * mul(q, p, pres));
        CHECK(mul(p, q + r, pres) == mul(p, q, pres) + mul(p, r, pres));
    }
}

TEST_CASE("tensor products of form algebras") {
    Bounds b{6, 4};
    Dga a = omega_space(3, 1);
    Dga t = tensor_dga(a, omega_space(3, 1, false, 2));
    Dga two = omega_space(3, 2);
    CHECK(*t.pres == *two.pres);
    CHECK(t.d == two.d);
    CHECK(t.claimed_order == 5);

    Dga unit = tensor_dga(a, ground_field_dga());
    CHECK(*unit.pres == *a.pres);
    CHECK(unit.claimed_order == 3);

    Dga mixed = tensor_dga(a, omega_space(4, 1, false, 1, "y"));
    CHECK(mixed.claimed_order == 6);
    CHECK(nilpotency_check(mixed.d, 6, b).verified);
    CHECK_FALSE(nilpotency_check(mixed.d, 5, b).verified);

    CHECK_THROWS_AS(tensor_dga(a, a), InvalidArgument);
}
