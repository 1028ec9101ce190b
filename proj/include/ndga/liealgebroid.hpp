#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ndga/linalg.hpp"
#include "ndga/operators.hpp"

namespace ndga {

// Coordinates x1..xn (grade 0) and th1..thr (grade 1). Indices below are 0-based.
GVar base_var(int i);
GVar fiber_var(int alpha);
PresentationPtr algebroid_presentation(int n, int r);

// rho[i][alpha] = rho^i_alpha, C[gamma][alpha][beta] = C^gamma_{alpha beta}, all polynomials in x.
// The bracket is [e_alpha, e_beta] = C^gamma_{alpha beta} e_gamma.
struct StructureData {
    int n = 0;
    int r = 0;
    std::vector<std::vector<GradedPolynomial>> rho;
    std::vector<std::vector<std::vector<GradedPolynomial>>> C;

    static StructureData zero(int n, int r);
    // Sets C^gamma_{alpha beta} and C^gamma_{beta alpha} = -c.
    void set_bracket(int alpha, int beta, int gamma, const GradedPolynomial& c);
    void validate() const;
    bool constant_bracket() const;
};

// x^i -> rho^i_alpha th^alpha, th^gamma -> -sum_{alpha<beta} C^gamma_{alpha beta} th^alpha th^beta,
// so that d th(v1, v2) = -th([v1, v2]) under determinant evaluation.
Derivation ce_derivation(const StructureData& S);

// Value of a polynomial in th alone (constant coefficients) on basis vectors e_{args[0]}, ..., e_{args[k-1]}.
Rational evaluate_form(const GradedPolynomial& w, const std::vector<int>& args);
std::vector<Rational> bracket(const StructureData& S, const std::vector<Rational>& u, const std::vector<Rational>& v);

struct CartanCheck {
    bool first = false;   // d th(e_a, e_b) = -th([e_a, e_b])
    bool second = false;  // d^2 th(v1, v2, v3) = sum over Sh(2,1) of sgn th([[., .], .])
};

CartanCheck cartan_check(const StructureData& S);

// Permutations of {0..3} increasing on the blocks, with their signs.
std::vector<std::pair<std::vector<int>, int>> shuffles(const std::vector<int>& blocks);

struct ThreeLieVerdict {
    bool jacobi = false;
    bool three_lie_operator = false;
    bool three_lie_shuffle = false;
    bool agree() const { return three_lie_operator == three_lie_shuffle; }
    // Basis tuples where the shuffle identity fails, as "(a,b,c,d): gamma".
    std::vector<std::string> residuals;
};

ThreeLieVerdict is_3_lie(const StructureData& S);

// a[i][alpha] = a^i_alpha.
struct DeformationMatrix {
    int n = 0;
    std::vector<std::vector<GradedPolynomial>> a;
    bool infinitesimal = false;

    // Display layout: rows[beta][j] = a^j_beta.
    static DeformationMatrix from_rows(const std::vector<std::vector<GradedPolynomial>>& rows, bool infinitesimal);
    void validate() const;
};

// The even parameter t used by infinitesimal deformations, with t^2 = 0.
GVar deformation_parameter();
PresentationPtr deformation_presentation(int n, bool infinitesimal);
Derivation deformation_field(const DeformationMatrix& a);

// t d_alpha a^j_beta th^alpha th^beta d_j
Derivation infinitesimal_square_closed(const DeformationMatrix& a);
// (delta^l_gamma + a^l_gamma){d_l a^i_alpha d_i a^j_beta + a^i_alpha d_l d_i a^j_beta} th^gamma th^alpha th^beta d_j
Derivation full_cube_printed(const DeformationMatrix& a);
// The same with (delta^i_alpha + a^i_alpha) in front of the second derivatives.
Derivation full_cube_corrected(const DeformationMatrix& a);

struct DeformationReport {
    Derivation field;
    Derivation square;
    Derivation cube;
    bool square_zero = false;
    bool cube_zero = false;
    bool square_matches_closed = false;   // infinitesimal only
    bool cube_matches_printed = false;    // full only
    bool cube_matches_corrected = false;  // full only
};

DeformationReport deform_de_rham(const DeformationMatrix& a);

DeformationMatrix example_square_zero();
DeformationMatrix example_square_nonzero();
// a^i_alpha = A^i_alpha x^alpha (no sum), full deformation.
DeformationMatrix linear_deformation(const Matrix& A);

struct IdentityReport {
    int order = 2;
    // Nonzero residuals, labelled by identity and free index.
    std::vector<std::pair<std::string, GradedPolynomial>> residuals;
    bool residuals_vanish = false;
    bool operator_vanishes = false;
    bool agree() const { return residuals_vanish == operator_vanishes; }
};

// Order 2 throws ConsistencyError when the residual and operator routes disagree.
// Order 3 reports the comparison; the operator route decides.
IdentityReport algebroid_identities(const StructureData& S, int order);

// Random generators used by the property batteries.
GradedPolynomial random_polynomial(int n, int max_degree, std::mt19937_64& rng, int max_terms = 3);
StructureData random_structure(int n, int r, int max_degree, std::mt19937_64& rng);
StructureData random_constants(int r, std::mt19937_64& rng);
DeformationMatrix random_deformation(int n, int max_degree, bool infinitesimal, std::mt19937_64& rng);
// P J P^{-1} with J made of 2x2 nilpotent Jordan blocks, so A^2 = 0.
Matrix random_square_zero(int n, std::mt19937_64& rng);
// Nonzero strictly upper triangular A with A^2 = 0 (n >= 2), by rejection.
Matrix random_upper_square_zero(int n, std::mt19937_64& rng);

StructureData sl2_structure();
StructureData tangent_structure(int n);

}  // namespace ndga
