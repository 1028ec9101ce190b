#include <functional>

#include "ndga/forms.hpp"
#include "ndga/io.hpp"
#include "support.hpp"

using namespace ndga;
using ndga::test::P;

namespace {

std::vector<std::vector<int>> monotone_maps(int n, int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int lo) {
        if (static_cast<int>(cur.size()) == n + 1) {
            out.push_back(cur);
            return;
        }
        for (int v = lo; v <= m; ++v) {
            cur.push_back(v);
            rec(v);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

SimplicialSet sset(const std::string& json) { return simplicial_set_from_json(Json::parse(json)); }

DifferenceForm delta_times(DifferenceForm w, int N, int k) {
    for (int i = 0; i < k; ++i) w = delta_apply(w, N);
    return w;
}

}  // namespace

TEST_CASE("omega_space presentations") {
    Dga one = omega_space(3, 1);
    CHECK(one.claimed_order == 3);
    CHECK(one.pres->generators().size() == 3);
    CHECK(apply_derivation(one.d, P("d2x1", *one.pres)).is_zero());

    Dga two = omega_space(3, 2);
    CHECK(two.claimed_order == 5);

    Dga simplex = omega_space(3, 1, true);
    CHECK(P("x0", *simplex.pres) == P("1 - x1", *simplex.pres));
    CHECK(P("d1x0", *simplex.pres) == -P("d1x1", *simplex.pres));
    CHECK(P("d2x0", *simplex.pres) == -P("d2x1", *simplex.pres));
}

TEST_CASE("claimed orders are certified and sharp") {
    Bounds b{8, 4};
    for (int n = 1; n <= 2; ++n)
        for (int N = 3; N <= 4; ++N) {
            CAPTURE(n);
            CAPTURE(N);
            Dga om = omega_space(N, n);
            int order = n * (N - 1) + 1;
            CHECK(om.claimed_order == order);
            CHECK(nilpotency_check(om.d, order, b).verified);
            CHECK(nonzero_power_witness(om.d, order - 1, b).has_value());
            GradedPolynomial prod = GradedPolynomial::constant(1);
            for (int i = 1; i <= n; ++i) prod = mul(prod, GradedPolynomial::variable(GVar("x", i, 0, 0)), *om.pres);
            GradedPolynomial p = prod;
            for (int k = 0; k < order - 1; ++k) p = apply_derivation(om.d, p);
            CHECK_FALSE(p.is_zero());
        }
}

TEST_CASE("simplex maps on the worked cases") {
    int N = 3;
    AlgebraMorphism id = omega_map({0, 1, 2}, 2, N);
    for (const GVar& v : id.source->generators())
        CHECK(apply_morphism(id, GradedPolynomial::variable(v)) == GradedPolynomial::variable(v));

    AlgebraMorphism collapse = omega_map({0, 0}, 0, N);
    CHECK(apply_morphism(collapse, P("x0", *collapse.source)) == GradedPolynomial::constant(1));

    AlgebraMorphism face = omega_map({1}, 1, N);
    CHECK(apply_morphism(face, P("x0", *face.source)).is_zero());
    CHECK(apply_morphism(face, P("x1", *face.source)) == GradedPolynomial::constant(1));
    CHECK(apply_morphism(face, P("d1x1", *face.source)).is_zero());

    CHECK_THROWS_AS(omega_map({1, 0}, 1, N), InvalidArgument);
    CHECK_THROWS_AS(omega_map({0, 2}, 1, N), InvalidArgument);
}

TEST_CASE("simplex maps are functorial and commute with d") {
    int N = 3;
    for (int n = 0; n <= 3; ++n)
        for (int m = 0; m <= 3; ++m)
            for (const auto& f : monotone_maps(n, m)) {
                AlgebraMorphism F = omega_map(f, m, N);
                Dga src = omega_space(N, m, true), tgt = omega_space(N, n, true);
                for (const GVar& v : F.source->generators()) {
                    auto x = GradedPolynomial::variable(v);
                    CHECK(apply_derivation(tgt.d, apply_morphism(F, x)) == apply_morphism(F, apply_derivation(src.d, x)));
                }
                for (int k = 0; k <= 3; ++k)
                    for (const auto& g : monotone_maps(m, k)) {
                        AlgebraMorphism G = omega_map(g, k, N);
                        AlgebraMorphism GF = omega_map(compose_delta(g, f), k, N);
                        AlgebraMorphism both = compose_morphisms(F, G);
                        for (const GVar& v : GF.source->generators()) {
                            auto x = GradedPolynomial::variable(v);
                            CHECK(apply_morphism(GF, x) == apply_morphism(both, x));
                        }
                    }
            }
}

TEST_CASE("forms on simplicial sets") {
    SimplicialSet point = sset(R"({"K":0,"simplices":{"0":["p"]}})");
    CHECK(omega_simplicial_set(point, 3, 0, 0).basis.size() == 1);

    SimplicialSet interval = sset(R"({"K":1,"simplices":{"0":["v0","v1"],"1":["e"]},"faces":{"e":["v0","v1"]}})");
    auto f = omega_simplicial_set(interval, 3, 0, 1);
    CHECK(f.basis.size() == 2);
    for (const auto& fam : f.basis) CHECK(is_compatible(interval, fam, 3));

    SimplicialSet two_points = sset(R"({"K":0,"simplices":{"0":["a","b"]}})");
    CHECK(omega_simplicial_set(two_points, 3, 0, 2).basis.size() == 2);

    // a loop: values at both ends agree, so p(0) = p(1)
    SimplicialSet circle = sset(R"({"K":1,"simplices":{"0":["v"],"1":["e"]},"faces":{"e":["v","v"]}})");
    CHECK(omega_simplicial_set(circle, 3, 0, 2).basis.size() == 2);
    CHECK(omega_simplicial_set(circle, 3, 0, 3).basis.size() == 3);
    for (int deg = 1; deg <= 2; ++deg)
        CHECK(omega_simplicial_set(circle, 3, deg, 2).basis.size() == omega_simplicial_set(interval, 3, deg, 2).basis.size());

    CHECK_THROWS(sset(R"({"K":1,"simplices":{"0":["v"],"1":["e"]},"faces":{"e":["v","w"]}})"));
}

TEST_CASE("pullback along the collapse of an interval") {
    SimplicialSet point = sset(R"({"K":0,"simplices":{"0":["p"]}})");
    SimplicialSet interval = sset(R"({"K":1,"simplices":{"0":["v0","v1"],"1":["e"]},"faces":{"e":["v0","v1"]}})");
    auto basis = omega_simplicial_set(point, 3, 0, 0).basis;
    REQUIRE(basis.size() == 1);
    std::map<std::string, SimplexRef> l{{"v0", {"p", {}}}, {"v1", {"p", {}}}, {"e", {"p", {0}}}};
    FormFamily pulled = pullback(point, l, basis[0], 3);
    CHECK(is_compatible(interval, pulled, 3));
    CHECK(pulled.at("e") == GradedPolynomial::constant(1));
}

TEST_CASE("delta on the worked cases") {
    DifferenceForm sq = parse_difference_form("m1^2", 1, 3);
    CHECK(delta_apply(sq, 3) == parse_difference_form("2 * m1 * d1m1 + d1m1", 1, 3));
    for (int N = 3; N <= 5; ++N) {
        std::string top = "d" + std::to_string(N - 1) + "m1";
        CHECK(delta_apply(parse_difference_form(top, 2, N), N).terms.empty());
    }
    CHECK(delta_apply(parse_difference_form("d1m1", 1, 3), 3) == parse_difference_form("d2m1", 1, 3));
}

TEST_CASE("closed coefficient formula equals the Leibniz expansion") {
    auto rng = ndga::test::rng_for("delta");
    int checked = 0;
    for (int n = 1; n <= 2; ++n)
        for (int N = 3; N <= 4; ++N)
            for (int t = 0; t < 125; ++t) {
                DifferenceForm w = random_difference_form(n, N, rng);
                CHECK(delta_closed(w, N) == delta_leibniz(w, N));
                ++checked;
            }
    CHECK(checked == 500);
}

TEST_CASE("delta is nilpotent of order n(N-1)+1") {
    auto rng = ndga::test::rng_for("nilpotent");
    for (auto [n, N] : std::vector<std::pair<int, int>>{{1, 3}, {2, 3}, {1, 4}}) {
        int order = n * (N - 1) + 1;
        for (int t = 0; t < 30; ++t) CHECK(delta_times(random_difference_form(n, N, rng), N, order).terms.empty());
        std::string cubic = n == 1 ? "m1^3" : "m1^3 * m2^3";
        DifferenceForm w = parse_difference_form(cubic, n, N);
        CHECK(delta_times(w, N, order).terms.empty());
        CHECK_FALSE(delta_times(w, N, order - 1).terms.empty());
    }
}

namespace {

bool commutes(const AlgebraMorphism& F, const GradedPolynomial& p, int n, int m, int N) {
    GradedPolynomial dp = to_polynomial(delta_apply(from_polynomial(p, m), N), *F.source);
    DifferenceForm lhs = delta_apply(from_polynomial(apply_morphism(F, p), n), N);
    return lhs == from_polynomial(apply_morphism(F, dp), n);
}

}  // namespace

TEST_CASE("difference-form maps commute with delta on generators") {
    int N = 3;
    for (int n = 0; n <= 2; ++n)
        for (int m = 0; m <= 2; ++m)
            for (const auto& f : monotone_maps(n, m)) {
                AlgebraMorphism F = dn_map(f, m, N);
                CHECK(*F.source == *dn_simplex(m, N));
                for (const GVar& v : F.source->generators()) CHECK(commutes(F, GradedPolynomial::variable(v), n, m, N));
            }
}

TEST_CASE("nonlinear coefficients: maps fixing vertex 0 commute with delta") {
    int N = 3;
    for (int n = 1; n <= 2; ++n)
        for (int m = 1; m <= 2; ++m)
            for (const auto& f : monotone_maps(n, m)) {
                if (f[0] != 0) continue;
                AlgebraMorphism F = dn_map(f, m, N);
                CHECK(commutes(F, P("m1^2", *F.source), n, m, N));
                if (m >= 2) CHECK(commutes(F, P("m1 * m2^2 * d1m2", *F.source), n, m, N));
            }
    // Moving vertex 0 turns Delta_i into a difference along e_f(i) - e_f(0).
    AlgebraMorphism shift = dn_map({1, 2}, 2, N);
    CHECK_FALSE(commutes(shift, P("m1^2", *shift.source), 1, 2, N));
}

TEST_CASE("graded pieces round trip") {
    Dga om = omega_space(3, 2, true);
    GradedPiece piece(om.pres, 2, 2);
    CHECK(piece.dimension() > 0);
    for (int i = 0; i < piece.dimension(); ++i) {
        std::vector<Rational> e(static_cast<std::size_t>(piece.dimension()));
        e[static_cast<std::size_t>(i)] = 1;
        CHECK(piece.coordinates(piece.element(e)) == e);
    }
}
