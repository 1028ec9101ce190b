#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "ndga/dga.hpp"
#include "ndga/linalg.hpp"

namespace ndga {

// Depth-N polynomial forms. Non-simplex: sites first_site..first_site+n-1, claimed order n(N-1)+1.
// Simplex: sites 0..n with x0 and every d^j x0 eliminated through sum x_i = 1.
Dga omega_space(int N, int n, bool simplex = false, int first_site = 1, const std::string& family = "x");

struct AlgebraMorphism {
    PresentationPtr source;
    PresentationPtr target;
    // Images of source generators and of eliminated source variables.
    std::map<GVar, GradedPolynomial> images;
};

GradedPolynomial apply_morphism(const AlgebraMorphism& phi, const GradedPolynomial& p);
// first is applied first.
AlgebraMorphism compose_morphisms(const AlgebraMorphism& second, const AlgebraMorphism& first);

// f : {0..n} -> {0..m} order preserving, given as its values; result maps the simplex algebra on m
// to the one on n by x_j -> sum_{f(i)=j} x_i at every depth.
AlgebraMorphism omega_map(const std::vector<int>& f, int m, int N, const std::string& family = "x");
std::vector<int> compose_delta(const std::vector<int>& g, const std::vector<int>& f);  // g after f
void check_order_preserving(const std::vector<int>& f, int m);

// Degree-i part of an algebra truncated to x-degree <= poly_bound, modulo residual relations.
class GradedPiece {
public:
    GradedPiece(PresentationPtr pres, int degree, int poly_bound);

    int dimension() const { return static_cast<int>(basis_.size()); }
    const std::vector<Monomial>& basis() const { return basis_; }
    // Coordinates of p in the quotient basis; throws if p leaves the truncated span.
    std::vector<Rational> coordinates(const GradedPolynomial& p) const;
    GradedPolynomial element(const std::vector<Rational>& coords) const;

private:
    PresentationPtr pres_;
    int degree_;
    int poly_bound_;
    std::vector<Monomial> span_;
    std::map<Monomial, int> index_;
    Matrix relations_;  // reduced rows, pivots are dependent monomials
    std::vector<int> pivots_;
    std::vector<Monomial> basis_;
    std::vector<int> basis_cols_;
};

// s_{j1} s_{j2} ... s_{jt}(base) with j1 > j2 > ... > jt.
struct SimplexRef {
    std::string base;
    std::vector<int> degeneracies;
    friend bool operator==(const SimplexRef& a, const SimplexRef& b) {
        return a.base == b.base && a.degeneracies == b.degeneracies;
    }
};

// Finitely generated simplicial set. faces[p] lists the faces of a k-simplex in lexicographic order of
// their vertex sets, i.e. faces[p][r] = d_{k-r} p. degeneracies[name] = (q, j) declares name = s_j q.
struct SimplicialSet {
    int K = 0;
    std::map<int, std::vector<std::string>> simplices;
    std::map<std::string, std::vector<std::string>> faces;
    std::map<std::string, std::pair<std::string, int>> degeneracies;

    // Checks dimensions, references and the simplicial identities d_i d_j = d_{j-1} d_i.
    void validate() const;
    int dimension_of(const std::string& nondegenerate) const;
    SimplexRef resolve(const std::string& name) const;
    int dimension(const SimplexRef& r) const;
    SimplexRef face(const SimplexRef& r, int i) const;
};

SimplexRef apply_degeneracy(int j, const SimplexRef& r);

// A compatible family: one element of the degree-i forms on each nondegenerate simplex.
using FormFamily = std::map<std::string, GradedPolynomial>;

struct SimplicialForms {
    int N = 3;
    int degree = 0;
    int poly_bound = 0;
    std::vector<FormFamily> basis;
};

SimplicialForms omega_simplicial_set(const SimplicialSet& s, int N, int degree, int poly_bound);
// Value of a family on any (possibly degenerate) simplex.
GradedPolynomial family_value(const SimplicialSet& s, const FormFamily& a, const SimplexRef& r, int N);
bool is_compatible(const SimplicialSet& s, const FormFamily& a, int N);
// [l^*(a)]_p = a_{l(p)} for a simplicial map l given on nondegenerate simplices of the source.
FormFamily pullback(const SimplicialSet& target, const std::map<std::string, SimplexRef>& l, const FormFamily& a,
                    int N);

// Difference forms on Z^n: I : {1..n} -> {0..N-1}, coefficient polynomials in m1..mn.
struct DifferenceForm {
    int n = 1;
    std::map<std::vector<int>, GradedPolynomial> terms;

    int degree_of(const std::vector<int>& I) const;
    void add(const std::vector<int>& I, const GradedPolynomial& c);
    friend bool operator==(const DifferenceForm& a, const DifferenceForm& b) { return a.terms == b.terms; }
};

// m1..mn and delta^j m_i (1 <= j <= N-1) with the same-site relations.
PresentationPtr difference_presentation(int n, int N);
GradedPolynomial to_polynomial(const DifferenceForm& w, const Presentation& pres);
DifferenceForm from_polynomial(const GradedPolynomial& p, int n);
std::string format_difference_form(const DifferenceForm& w);
DifferenceForm parse_difference_form(const std::string& text, int n, int N);

// g(m + e_i) - g(m).
GradedPolynomial finite_difference(const GradedPolynomial& g, int i, const std::string& family = "m");

DifferenceForm delta_leibniz(const DifferenceForm& w, int N);
DifferenceForm delta_closed(const DifferenceForm& w, int N);
// Both routes; throws ConsistencyError if they differ.
DifferenceForm delta_apply(const DifferenceForm& w, int N);

// Up to three terms with random I and coefficients of degree <= 2 in m1..mn.
DifferenceForm random_difference_form(int n, int N, std::mt19937_64& rng);

// Difference forms on the simplex Z^{n,1}: m0 and delta^j m0 eliminated, coordinates m1..mn.
// delta acts on them through delta_apply after from_polynomial.
PresentationPtr dn_simplex(int n, int N);
AlgebraMorphism dn_map(const std::vector<int>& f, int m, int N);

}  // namespace ndga
