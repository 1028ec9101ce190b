#pragma once

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <variant>
#include <vector>

#include "ndga/galgebra.hpp"

namespace ndga {

void require_same_presentation(const PresentationPtr& a, const PresentationPtr& b);

class Derivation {
public:
    Derivation() = default;
    Derivation(PresentationPtr pres, int degree);

    int degree() const { return degree_; }
    const PresentationPtr& presentation() const { return pres_; }
    const std::map<GVar, GradedPolynomial>& images() const { return images_; }

    GradedPolynomial image(const GVar& generator) const;
    // Checks that the generator exists and the image has grade |generator| + degree.
    void set_image(const GVar& generator, const GradedPolynomial& image);
    bool is_zero() const { return images_.empty(); }

    Derivation& operator+=(const Derivation& o);
    Derivation& operator*=(const Rational& c);

    friend bool operator==(const Derivation& a, const Derivation& b) {
        return a.degree_ == b.degree_ && a.images_ == b.images_;
    }

private:
    PresentationPtr pres_;
    int degree_ = 0;
    std::map<GVar, GradedPolynomial> images_;
};

Derivation operator+(Derivation a, const Derivation& b);
Derivation operator*(const Rational& c, Derivation a);

GradedPolynomial apply_derivation(const Derivation& D, const GradedPolynomial& p);

struct Bounds {
    int degree_bound = 6;
    int word_bound = 4;
};

struct NilpotencyVerdict {
    int order_tested = 0;
    Bounds bounds;
    bool verified = true;
    std::optional<Monomial> counterexample;
    GradedPolynomial image;  // nonzero image of the counterexample
    std::size_t monomials_checked = 0;
};

using PolyMap = std::function<GradedPolynomial(const GradedPolynomial&)>;

// Normal monomials in the generators, ordered by word length then monomial order.
std::vector<Monomial> normal_monomials(const Presentation& pres, const Bounds& bounds);

NilpotencyVerdict nilpotency_check(const Derivation& D, int N, const Bounds& bounds);
// op is applied once per check; it already stands for the full power being tested.
NilpotencyVerdict vanishing_check(const PolyMap& op, const Presentation& pres, int order_label, const Bounds& bounds);
// First monomial m (canonical order) with D^k(m) != 0.
std::optional<std::pair<Monomial, GradedPolynomial>> nonzero_power_witness(const Derivation& D, int k,
                                                                           const Bounds& bounds);

// Sum over I of c_I * d_I where d_I is a monomial in partial derivatives.
class DiffOperator {
public:
    DiffOperator() = default;
    explicit DiffOperator(PresentationPtr pres) : pres_(std::move(pres)) {}

    static DiffOperator identity(PresentationPtr pres);
    static DiffOperator multiplication(PresentationPtr pres, const GradedPolynomial& c);
    static DiffOperator partial(PresentationPtr pres, const GVar& v);
    static DiffOperator from_derivation(const Derivation& D);

    const PresentationPtr& presentation() const { return pres_; }
    const std::map<Monomial, GradedPolynomial>& terms() const { return terms_; }
    void add_term(const Monomial& partials, const GradedPolynomial& coeff);
    bool is_zero() const { return terms_.empty(); }
    int order() const;
    std::optional<int> degree() const;

    DiffOperator& operator+=(const DiffOperator& o);
    DiffOperator& operator*=(const Rational& c);

    friend bool operator==(const DiffOperator& a, const DiffOperator& b) { return a.terms_ == b.terms_; }

private:
    PresentationPtr pres_;
    std::map<Monomial, GradedPolynomial> terms_;
};

DiffOperator operator+(DiffOperator a, const DiffOperator& b);
DiffOperator operator-(DiffOperator a, const DiffOperator& b);

std::string format_operator(const DiffOperator& P);

// Left graded partial derivative along a free generator.
GradedPolynomial partial_derivative(const GVar& v, const GradedPolynomial& p, const Presentation& pres);
GradedPolynomial apply_operator(const DiffOperator& P, const GradedPolynomial& p);
DiffOperator compose(const DiffOperator& P, const DiffOperator& Q);
DiffOperator first_order_part(const DiffOperator& P);
// Reads an order-one operator without constant term as a derivation.
Derivation to_derivation(const DiffOperator& P, int degree);

// Derivation with images w -> D1(D2(w)).
Derivation diamond(const Derivation& D1, const Derivation& D2);
// D diamond (D diamond (... diamond D)), N factors.
Derivation diamond_power(const Derivation& D, int N);

// a[i] = (x_i, a^i) for the field sum_i a^i d/dx_i.
using VectorField = std::vector<std::pair<GVar, GradedPolynomial>>;

DiffOperator field_operator(const PresentationPtr& pres, const VectorField& a);
DiffOperator field_power_direct(const PresentationPtr& pres, const VectorField& a, int N);
DiffOperator field_power_closed(const PresentationPtr& pres, const VectorField& a, int N, int max_N = 8);
// sum_{i,j} (-1)^{x_i a_j} a_i a_j d_i d_j + a_i d_i(a_j) d_j
DiffOperator field_square_display(const PresentationPtr& pres, const VectorField& a);
// Free generators y1..ym with the given grades.
PresentationPtr field_presentation(const std::vector<int>& grades);
// One homogeneous coefficient per generator, each a sum of up to three monomials of word length <= 2.
VectorField random_vector_field(const PresentationPtr& pres, std::mt19937_64& rng);

// Sign of the (f, alpha) term; f and alpha are 1-based maps stored in 0-based vectors.
int field_power_sign(const VectorField& a, const std::vector<int>& f, const std::vector<int>& alpha);

using Letter = std::variant<Derivation, DiffOperator>;

// Rational combination of words in a fixed alphabet of operators; a word applies its last letter first.
class EndOperator {
public:
    EndOperator() = default;
    explicit EndOperator(PresentationPtr pres) : pres_(std::move(pres)) {}
    static EndOperator letter(const Letter& op);

    const PresentationPtr& presentation() const { return pres_; }
    const std::vector<Letter>& alphabet() const { return alphabet_; }
    const std::map<std::vector<int>, Rational>& words() const { return words_; }

    int add_letter(const Letter& op);
    void add_word(const std::vector<int>& word, const Rational& c);
    std::optional<int> degree() const;
    int letter_degree(int index) const;

    GradedPolynomial apply(const GradedPolynomial& p) const;

private:
    PresentationPtr pres_;
    std::vector<Letter> alphabet_;
    std::map<std::vector<int>, Rational> words_;
};

EndOperator compose(const EndOperator& A, const EndOperator& B);
EndOperator operator+(const EndOperator& A, const EndOperator& B);
EndOperator operator*(const Rational& c, const EndOperator& A);

// d_End^l(e) with d_End(phi) = d phi - (-1)^{|phi|} phi d; letter 0 is d, letter 1 is e.
EndOperator end_derivative(const Derivation& d, const Derivation& e, int l);
// F_e = de + ed + ee.
EndOperator curvature(const Derivation& d, const Derivation& e);
NilpotencyVerdict curvature_condition(const Derivation& d, const Derivation& e, int N, const Bounds& bounds);

}  // namespace ndga
