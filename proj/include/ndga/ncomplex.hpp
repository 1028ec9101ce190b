#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ndga/linalg.hpp"

namespace ndga {

// Finite-dimensional graded space with maps[i] : V^i -> V^{i+1} of shape dims[i+1] x dims[i].
struct NComplex {
    int order = 2;
    std::map<int, int> dims;
    std::map<int, Matrix> maps;

    int dim(int i) const;
    // Zero matrix when no map is stored at degree i.
    Matrix map(int i) const;
    // d^k : V^i -> V^{i+k}.
    Matrix power(int i, int k) const;
    // Throws InvalidArgument when a stored map does not conform to dims.
    void validate() const;
};

struct NComplexVerdict {
    bool valid = false;
    bool proper = false;
    // First degree i where d^N starting at i is nonzero.
    std::optional<int> counterexample_degree;
};

NComplexVerdict check_ncomplex(const NComplex& c);

struct CohomologyResult {
    int p = 1;
    int i = 0;
    int dimension = 0;
    int kernel_dim = 0;
    int image_rank = 0;
    // Kernel vectors completing a basis of the image, chosen by pivot order.
    std::vector<std::vector<Rational>> basis;
};

// pH^i = Ker(d^p on V^i) / Im(d^{N-p} into V^i), 1 <= p <= N-1.
CohomologyResult cohomology(const NComplex& c, int p, int i);

// d'^i = P_{i+1} d^i P_i^{-1} for the given invertible matrices (identity where absent).
NComplex change_basis(const NComplex& c, const std::map<int, Matrix>& P);

// A random N-complex assembled from strings b -> d b -> ... of length <= N, before any basis change.
struct StringDecomposition {
    // (start degree, length)
    std::vector<std::pair<int, int>> strings;
};

NComplex complex_from_strings(int order, const StringDecomposition& s);
StringDecomposition random_strings(int order, int total_dim, int degree_span, std::uint64_t seed);
// Unit lower times unit upper triangular with small integer entries.
Matrix random_invertible(int n, std::uint64_t seed);

}  // namespace ndga
