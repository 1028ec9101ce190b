#include "ndga/ncomplex.hpp"

#include <algorithm>
#include <random>

#include "ndga/errors.hpp"

namespace ndga {

int NComplex::dim(int i) const {
    auto it = dims.find(i);
    return it == dims.end() ? 0 : it->second;
}

Matrix NComplex::map(int i) const {
    auto it = maps.find(i);
    if (it != maps.end()) return it->second;
    return Matrix(dim(i + 1), dim(i));
}

Matrix NComplex::power(int i, int k) const {
    Matrix acc = Matrix::identity(dim(i));
    for (int j = 0; j < k; ++j) acc = map(i + j) * acc;
    return acc;
}

void NComplex::validate() const {
    if (order < 1) throw InvalidArgument("order must be at least 1");
    for (const auto& [i, d] : dims)
        if (d < 0) throw InvalidArgument("negative dimension at degree " + std::to_string(i));
    for (const auto& [i, m] : maps)
        if (m.rows() != dim(i + 1) || m.cols() != dim(i))
            throw InvalidArgument("map at degree " + std::to_string(i) + " has shape " + std::to_string(m.rows()) +
                                  "x" + std::to_string(m.cols()) + ", expected " + std::to_string(dim(i + 1)) + "x" +
                                  std::to_string(dim(i)));
}

namespace {

std::pair<int, int> degree_range(const NComplex& c) {
    int lo = 0, hi = -1;
    bool first = true;
    for (const auto& [i, d] : c.dims) {
        if (d == 0) continue;
        if (first) lo = hi = i, first = false;
        lo = std::min(lo, i);
        hi = std::max(hi, i);
    }
    return {lo, hi};
}

}  // namespace

NComplexVerdict check_ncomplex(const NComplex& c) {
    c.validate();
    NComplexVerdict v;
    v.valid = true;
    auto [lo, hi] = degree_range(c);
    for (int i = lo; i <= hi; ++i) {
        if (!c.power(i, c.order).is_zero()) {
            v.valid = false;
            if (!v.counterexample_degree) v.counterexample_degree = i;
        }
        if (!c.power(i, c.order - 1).is_zero()) v.proper = true;
    }
    return v;
}

CohomologyResult cohomology(const NComplex& c, int p, int i) {
    c.validate();
    if (p < 1 || p > c.order - 1)
        throw InvalidArgument("p must lie in [1, " + std::to_string(c.order - 1) + "], got " + std::to_string(p));
    CohomologyResult r;
    r.p = p;
    r.i = i;
    int n = c.dim(i);
    Matrix dp = c.power(i, p);
    Matrix img = c.power(i - (c.order - p), c.order - p);
    if (!(dp * img).is_zero()) throw ConsistencyError("image of d^{N-p} is not inside the kernel of d^p");
    auto ker = kernel_basis(dp);
    r.kernel_dim = static_cast<int>(ker.size());
    if (r.kernel_dim + rank(dp) != n) throw ConsistencyError("rank-nullity fails for d^p");
    r.image_rank = rank(img);
    r.dimension = r.kernel_dim - r.image_rank;
    std::vector<std::vector<Rational>> cols;
    for (int j = 0; j < img.cols(); ++j) cols.push_back(img.column(j));
    int nimg = static_cast<int>(cols.size());
    cols.insert(cols.end(), ker.begin(), ker.end());
    if (n > 0 && !cols.empty()) {
        RowEchelon e = rref(from_columns(cols, n));
        for (int col : e.pivots)
            if (col >= nimg) r.basis.push_back(cols[static_cast<std::size_t>(col)]);
    }
    if (static_cast<int>(r.basis.size()) != r.dimension) throw ConsistencyError("representative count mismatch");
    return r;
}

NComplex change_basis(const NComplex& c, const std::map<int, Matrix>& P) {
    auto get = [&](int i) {
        auto it = P.find(i);
        return it == P.end() ? Matrix::identity(c.dim(i)) : it->second;
    };
    NComplex out = c;
    out.maps.clear();
    for (const auto& [i, m] : c.maps) out.maps[i] = get(i + 1) * m * inverse(get(i));
    return out;
}

NComplex complex_from_strings(int order, const StringDecomposition& s) {
    NComplex c;
    c.order = order;
    // position of each string element inside its degree
    std::vector<std::vector<int>> slot(s.strings.size());
    for (std::size_t k = 0; k < s.strings.size(); ++k) {
        auto [a, len] = s.strings[k];
        if (len < 1 || len > order) throw InvalidArgument("string length must lie in [1, N]");
        for (int j = 0; j < len; ++j) slot[k].push_back(c.dims[a + j]++);
    }
    for (const auto& [i, d] : c.dims) c.maps[i] = Matrix(c.dim(i + 1), d);
    for (std::size_t k = 0; k < s.strings.size(); ++k) {
        auto [a, len] = s.strings[k];
        for (int j = 0; j + 1 < len; ++j) c.maps[a + j].at(slot[k][j + 1], slot[k][j]) = 1;
    }
    return c;
}

StringDecomposition random_strings(int order, int total_dim, int degree_span, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    StringDecomposition s;
    int used = 0;
    while (used < total_dim) {
        int len = std::uniform_int_distribution<int>(1, std::min(order, total_dim - used))(rng);
        int a = std::uniform_int_distribution<int>(0, std::max(0, degree_span - 1))(rng);
        s.strings.push_back({a, len});
        used += len;
    }
    return s;
}

Matrix random_invertible(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> u(-2, 2);
    Matrix L = Matrix::identity(n), U = Matrix::identity(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            if (r > c) L.at(r, c) = u(rng);
            if (r < c) U.at(r, c) = u(rng);
        }
    return L * U;
}

}  // namespace ndga
