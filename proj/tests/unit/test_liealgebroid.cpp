#include "ndga/liealgebroid.hpp"
#include "support.hpp"

using namespace ndga;

namespace {

GradedPolynomial c(Rational v) { return GradedPolynomial::constant(v); }

// gl2 with basis E11, E12, E21, E22; constants read off matrix commutators.
StructureData gl2() {
    auto unit = [](int k) {
        Matrix m(2, 2);
        m.at(k / 2, k % 2) = 1;
        return m;
    };
    StructureData S = StructureData::zero(0, 4);
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
            Matrix ab = unit(a) * unit(b), ba = unit(b) * unit(a);
            for (int g = 0; g < 4; ++g) {
                Rational v = ab.at(g / 2, g % 2) - ba.at(g / 2, g % 2);
                if (v != 0) S.set_bracket(a, b, g, c(v));
            }
        }
    return S;
}

Rational C(const StructureData& S, int g, int a, int b) { return S.C[g][a][b].coefficient(Monomial::one()); }

// sum over cyclic (a,b,c) of [[e_a, e_b], e_c], straight from the constants
bool jacobi_oracle(const StructureData& S) {
    const int r = S.r;
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int cc = 0; cc < r; ++cc)
                for (int g = 0; g < r; ++g) {
                    Rational s = 0;
                    for (int m = 0; m < r; ++m)
                        s += C(S, m, a, b) * C(S, g, m, cc) + C(S, m, b, cc) * C(S, g, m, a) + C(S, m, cc, a) * C(S, g, m, b);
                    if (s != 0) return false;
                }
    return true;
}

int inversions_sign(const std::vector<int>& p) {
    int s = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) s = -s;
    return s;
}

bool d_squared_zero(const StructureData& S) {
    Derivation d = ce_derivation(S);
    for (const GVar& v : d.presentation()->generators())
        if (!apply_derivation(d, apply_derivation(d, GradedPolynomial::variable(v))).is_zero()) return false;
    return true;
}

}  // namespace

TEST_CASE("Cartan formulas hold for sl2 and gl2") {
    CartanCheck s = cartan_check(sl2_structure());
    CHECK(s.first);
    CHECK(s.second);
    CartanCheck g = cartan_check(gl2());
    CHECK(g.first);
    CHECK(g.second);
}

TEST_CASE("evaluation of forms on basis vectors") {
    PresentationPtr pres = algebroid_presentation(0, 3);
    GradedPolynomial w = mul(GradedPolynomial::variable(fiber_var(0)), GradedPolynomial::variable(fiber_var(2)), *pres);
    CHECK(evaluate_form(w, {0, 2}) == 1);
    CHECK(evaluate_form(w, {2, 0}) == -1);
    CHECK(evaluate_form(w, {0, 1}) == 0);
    CHECK(evaluate_form(w, {0, 0}) == 0);
}

TEST_CASE("CE differential squares to zero exactly for Lie algebras") {
    CHECK(d_squared_zero(sl2_structure()));
    CHECK(d_squared_zero(gl2()));
    CHECK(d_squared_zero(tangent_structure(3)));
    auto rng = ndga::test::rng_for("ce");
    int lie = 0, nonlie = 0;
    for (int t = 0; t < 100; ++t) {
        StructureData S = random_constants(2 + t % 3, rng);
        bool j = jacobi_oracle(S);
        CHECK(d_squared_zero(S) == j);
        CHECK(is_3_lie(S).jacobi == j);
        (j ? lie : nonlie)++;
    }
    CHECK(nonlie > 0);
}

TEST_CASE("shuffle sets") {
    auto a = shuffles({2, 1, 1});
    auto b = shuffles({2, 2});
    CHECK(a.size() == 12);
    CHECK(b.size() == 6);
    for (const auto& [p, s] : a) {
        CHECK(p[0] < p[1]);
        CHECK(s == inversions_sign(p));
    }
    for (const auto& [p, s] : b) {
        CHECK(p[0] < p[1]);
        CHECK(p[2] < p[3]);
        CHECK(s == inversions_sign(p));
    }
}

TEST_CASE("3-Lie: operator and shuffle routes agree, Jacobi implies 3-Lie") {
    auto rng = ndga::test::rng_for("three-lie");
    for (int t = 0; t < 200; ++t) {
        StructureData S = random_constants(2 + t % 3, rng);
        ThreeLieVerdict v = is_3_lie(S);
        CHECK(v.agree());
        if (v.jacobi) CHECK(v.three_lie_operator);
        CHECK(v.three_lie_shuffle == v.residuals.empty());
    }
    for (const StructureData& S : {sl2_structure(), gl2(), StructureData::zero(0, 3)}) {
        ThreeLieVerdict v = is_3_lie(S);
        CHECK(v.jacobi);
        CHECK(v.three_lie_operator);
        CHECK(v.three_lie_shuffle);
    }
    CHECK_THROWS_AS(is_3_lie(tangent_structure(2)), InvalidArgument);
}

TEST_CASE("de Rham deformations: the two example matrices") {
    DeformationReport one = deform_de_rham(example_square_zero());
    CHECK(one.square_zero);
    CHECK(one.square_matches_closed);
    DeformationReport two = deform_de_rham(example_square_nonzero());
    CHECK_FALSE(two.square_zero);
    CHECK(two.square_matches_closed);
    CHECK(two.cube_zero);
}

TEST_CASE("infinitesimal deformations: cube vanishes, square has the closed form") {
    auto rng = ndga::test::rng_for("infinitesimal");
    for (int t = 0; t < 100; ++t) {
        DeformationReport r = deform_de_rham(random_deformation(1 + t % 4, 2, true, rng));
        CHECK(r.cube_zero);
        CHECK(r.square_matches_closed);
    }
}

TEST_CASE("full deformations: cube against the bracketed forms") {
    auto rng = ndga::test::rng_for("full");
    for (int t = 0; t < 30; ++t) {
        DeformationMatrix a = random_deformation(2 + t % 3, 2, false, rng);
        CHECK(deform_de_rham(a).cube_matches_corrected);
    }
    // with linear entries the second derivatives vanish and the two forms coincide
    for (int t = 0; t < 20; ++t) {
        DeformationMatrix a = linear_deformation(random_square_zero(2 + t % 3, rng));
        DeformationReport r = deform_de_rham(a);
        CHECK(r.cube_matches_printed);
        CHECK(r.cube_matches_corrected);
    }
    // a^1_3 = 1 and a^3_1 = x1 x2: the extra term a^l_g d_l d_a a^j_b th^g th^a th^b survives for (g,a,b) = (3,2,1)
    GradedPolynomial x1 = GradedPolynomial::variable(base_var(0)), x2 = GradedPolynomial::variable(base_var(1));
    PresentationPtr pres = deformation_presentation(3, false);
    DeformationMatrix w = DeformationMatrix::from_rows({{c(0), c(0), mul(x1, x2, *pres)}, {c(0), c(0), c(0)}, {c(1), c(0), c(0)}}, false);
    DeformationReport r = deform_de_rham(w);
    CHECK(r.cube_matches_corrected);
    CHECK_FALSE(r.cube_matches_printed);
}

TEST_CASE("linear deformations with strictly upper triangular A, A^2 = 0") {
    auto rng = ndga::test::rng_for("upper");
    for (int t = 0; t < 40; ++t) {
        Matrix A = random_upper_square_zero(2 + t % 3, rng);
        REQUIRE((A * A).is_zero());
        CHECK(deform_de_rham(linear_deformation(A)).cube_zero);
    }
}

TEST_CASE("algebroid identities") {
    CHECK(algebroid_identities(tangent_structure(2), 2).residuals_vanish);
    IdentityReport tan3 = algebroid_identities(tangent_structure(2), 3);
    CHECK(tan3.residuals_vanish);
    CHECK(tan3.operator_vanishes);
    IdentityReport lie = algebroid_identities(sl2_structure(), 2);
    CHECK(lie.residuals_vanish);
    CHECK(lie.operator_vanishes);

    auto rng = ndga::test::rng_for("identities");
    int nonlie = 0;
    for (int t = 0; t < 60; ++t) {
        StructureData S = random_structure(2, 2, 1, rng);
        IdentityReport r2 = algebroid_identities(S, 2);
        CHECK(r2.agree());
        CHECK(r2.operator_vanishes == d_squared_zero(S));
        nonlie += !r2.operator_vanishes;
        CHECK(algebroid_identities(S, 3).agree());
    }
    CHECK(nonlie > 0);
}

TEST_CASE("structure data validation") {
    StructureData S = StructureData::zero(1, 2);
    CHECK_THROWS_AS(S.set_bracket(0, 0, 1, c(1)), InvalidArgument);
    CHECK_THROWS_AS(S.set_bracket(0, 2, 1, c(1)), InvalidArgument);
    S.C[0][0][1] = c(1);
    CHECK_THROWS_AS(S.validate(), InvalidArgument);
    StructureData T = StructureData::zero(1, 2);
    T.rho[0][0] = GradedPolynomial::variable(fiber_var(0));
    CHECK_THROWS_AS(T.validate(), InvalidArgument);
    T.rho.pop_back();
    CHECK_THROWS_AS(T.validate(), InvalidArgument);
    CHECK_THROWS_AS(algebroid_identities(tangent_structure(1), 4), InvalidArgument);
    CHECK_THROWS_AS(DeformationMatrix::from_rows({{c(1), c(0)}, {c(0)}}, false), InvalidArgument);
    CHECK_THROWS_AS(linear_deformation(Matrix(2, 3)), InvalidArgument);
}
