#include "ndga/io.hpp"
#include "ndga/ncomplex.hpp"
#include "support.hpp"

using namespace ndga;

namespace {

// Fraction-free elimination on the integer matrix obtained by clearing row denominators.
int bareiss_rank(const Matrix& m) {
    int R = m.rows(), C = m.cols();
    std::vector<std::vector<Integer>> a(static_cast<std::size_t>(R), std::vector<Integer>(static_cast<std::size_t>(C)));
    for (int r = 0; r < R; ++r) {
        Integer l = 1;
        for (int c = 0; c < C; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(r, c).get_den_mpz_t());
        for (int c = 0; c < C; ++c) {
            Rational v = m.at(r, c) * l;
            a[r][c] = v.get_num();
        }
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
        std::swap(a[rank], a[piv]);
        for (int r = rank + 1; r < R; ++r) {
            for (int k = c + 1; k < C; ++k) a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
            a[r][c] = 0;
        }
        prev = a[rank][c];
        ++rank;
    }
    return rank;
}

int analytic_dimension(const StringDecomposition& s, int order, int p, int i) {
    int count = 0;
    for (auto [start, len] : s.strings) {
        int j = i - start;
        if (j >= 0 && j < len && j >= len - p && j < order - p) ++count;
    }
    return count;
}

Matrix stack_columns(const std::vector<std::vector<Rational>>& a, const std::vector<std::vector<Rational>>& b, int rows) {
    std::vector<std::vector<Rational>> cols = a;
    cols.insert(cols.end(), b.begin(), b.end());
    return from_columns(cols, rows);
}

std::vector<std::vector<Rational>> image_columns(const Matrix& m) {
    std::vector<std::vector<Rational>> out;
    for (int c = 0; c < m.cols(); ++c) out.push_back(m.column(c));
    return out;
}

NComplex identity_chain() {
    NComplex c;
    c.order = 3;
    for (int i = 0; i <= 2; ++i) c.dims[i] = 1;
    c.maps[0] = Matrix::identity(1);
    c.maps[1] = Matrix::identity(1);
    return c;
}

}  // namespace

TEST_CASE("zero differential: cohomology is the whole space") {
    NComplex c;
    c.order = 4;
    c.dims = {{0, 2}, {1, 3}, {2, 1}};
    for (int p = 1; p <= 3; ++p)
        for (const auto& [i, d] : c.dims) {
            CohomologyResult h = cohomology(c, p, i);
            CHECK(h.dimension == d);
            CHECK(h.image_rank == 0);
        }
    NComplexVerdict v = check_ncomplex(c);
    CHECK(v.valid);
    CHECK_FALSE(v.proper);
}

TEST_CASE("identity chain as a 3-complex") {
    NComplex c = identity_chain();
    NComplexVerdict v = check_ncomplex(c);
    CHECK(v.valid);
    CHECK(v.proper);
    // a single string of full length: acyclic everywhere
    for (int p = 1; p <= 2; ++p)
        for (int i = 0; i <= 2; ++i) CHECK(cohomology(c, p, i).dimension == 0);

    NComplex two = c;
    two.order = 2;
    NComplexVerdict bad = check_ncomplex(two);
    CHECK_FALSE(bad.valid);
    REQUIRE(bad.counterexample_degree);
    CHECK(*bad.counterexample_degree == 0);
}

TEST_CASE("input validation") {
    NComplex c = identity_chain();
    CHECK_THROWS_AS(cohomology(c, 0, 1), InvalidArgument);
    CHECK_THROWS_AS(cohomology(c, 3, 1), InvalidArgument);
    c.maps[0] = Matrix(2, 1);
    CHECK_THROWS_AS(c.validate(), InvalidArgument);
}

TEST_CASE("string complexes: analytic dimensions, rank oracle, basis-change invariance") {
    for (int t = 0; t < 60; ++t) {
        int order = 3 + t % 3;
        StringDecomposition s = random_strings(order, 4 + t % 9, 4, 1000 + static_cast<std::uint64_t>(t));
        NComplex base = complex_from_strings(order, s);
        REQUIRE(check_ncomplex(base).valid);
        std::map<int, Matrix> P;
        for (const auto& [i, d] : base.dims) P[i] = random_invertible(d, 77 * static_cast<std::uint64_t>(t) + static_cast<std::uint64_t>(i));
        NComplex moved = change_basis(base, P);
        REQUIRE(check_ncomplex(moved).valid);
        for (int p = 1; p < order; ++p)
            for (const auto& [i, d] : base.dims) {
                CohomologyResult h0 = cohomology(base, p, i);
                CohomologyResult h1 = cohomology(moved, p, i);
                CHECK(h0.dimension == analytic_dimension(s, order, p, i));
                CHECK(h1.dimension == h0.dimension);
                CHECK(h1.kernel_dim == d - bareiss_rank(moved.power(i, p)));
                Matrix into = moved.power(i - (order - p), order - p);
                int img = moved.dims.count(i - (order - p)) ? bareiss_rank(into) : 0;
                CHECK(h1.image_rank == img);
                // representatives are killed by d^p and independent modulo the image
                for (const auto& v : h1.basis) {
                    auto dv = moved.power(i, p) * v;
                    for (const auto& x : dv) CHECK(x == 0);
                }
                if (d > 0 && moved.dims.count(i - (order - p)))
                    CHECK(bareiss_rank(stack_columns(image_columns(into), h1.basis, d)) == img + h1.dimension);
            }
    }
}

TEST_CASE("json round trip") {
    NComplex c = complex_from_strings(3, random_strings(3, 8, 3, 5));
    NComplex back = ncomplex_from_json(ncomplex_to_json(c));
    CHECK(back.order == c.order);
    CHECK(back.dims == c.dims);
    for (const auto& [i, d] : c.dims) CHECK(back.map(i) == c.map(i));
}
