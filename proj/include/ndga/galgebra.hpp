#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ndga/errors.hpp"
#include "ndga/rational.hpp"

namespace ndga {

// A generator symbol d^depth family_site. site < 0 means the symbol carries no index.
struct GVar {
    std::string family;
    int site = -1;
    int depth = 0;
    int grade = 0;

    GVar() = default;
    GVar(std::string family_, int site_, int depth_, int grade_)
        : family(std::move(family_)), site(site_), depth(depth_), grade(grade_) {}

    bool odd() const { return grade % 2 != 0; }
    std::string name() const;
    auto key() const { return std::tie(family, site, depth); }
};

inline bool operator<(const GVar& a, const GVar& b) { return a.key() < b.key(); }
inline bool operator==(const GVar& a, const GVar& b) { return a.key() == b.key(); }
inline bool operator!=(const GVar& a, const GVar& b) { return !(a == b); }

// Splits a textual name like "d2x13" into family/site/depth. Grade is left at 0.
GVar parse_var_name(const std::string& text);

struct Monomial {
    std::vector<std::pair<GVar, int>> factors;
    int grade = 0;

    static Monomial one() { return {}; }
    static Monomial of(const GVar& v, int exponent = 1);

    bool is_one() const { return factors.empty(); }
    int word_length() const;
    int exponent_of(const GVar& v) const;
    std::string str() const;
};

bool operator<(const Monomial& a, const Monomial& b);
bool operator==(const Monomial& a, const Monomial& b);
inline bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

// sign is 0 when the product vanishes because of an odd square.
struct SignedMonomial {
    int sign = 1;
    Monomial mono;
};

// Product in the free graded-commutative algebra (Koszul sign, odd squares vanish).
SignedMonomial free_mul(const Monomial& a, const Monomial& b);

class GradedPolynomial {
public:
    using Terms = std::map<Monomial, Rational>;

    GradedPolynomial() = default;
    static GradedPolynomial constant(const Rational& c);
    static GradedPolynomial variable(const GVar& v);
    static GradedPolynomial monomial(const Monomial& m, const Rational& c = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Monomial& m, const Rational& c);
    Rational coefficient(const Monomial& m) const;

    // Grade when homogeneous and nonzero.
    std::optional<int> grade() const;
    bool is_homogeneous() const;
    GradedPolynomial homogeneous_part(int grade) const;
    std::set<GVar> variables() const;
    int max_word_length() const;

    GradedPolynomial& operator+=(const GradedPolynomial& o);
    GradedPolynomial& operator-=(const GradedPolynomial& o);
    GradedPolynomial& operator*=(const Rational& c);

    friend bool operator==(const GradedPolynomial& a, const GradedPolynomial& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const GradedPolynomial& a, const GradedPolynomial& b) { return !(a == b); }

private:
    Terms terms_;
};

GradedPolynomial operator+(GradedPolynomial a, const GradedPolynomial& b);
GradedPolynomial operator-(GradedPolynomial a, const GradedPolynomial& b);
GradedPolynomial operator-(GradedPolynomial a);
GradedPolynomial operator*(GradedPolynomial a, const Rational& c);
GradedPolynomial operator*(const Rational& c, GradedPolynomial a);

// Product without any relations besides odd squares.
GradedPolynomial free_product(const GradedPolynomial& p, const GradedPolynomial& q);

// Unsorted product coeff * f1 * f2 * ... as written.
struct RawTerm {
    Rational coeff = 1;
    std::vector<GVar> factors;
};

class Presentation {
public:
    void add_generator(const GVar& v);
    void add_annihilator(const GVar& a, const GVar& b);
    // image must not mention eliminated variables.
    void add_substitution(const GVar& eliminated, const GradedPolynomial& image);
    // Relations that are not monomial; normal_form does not apply them.
    void add_residual_relation(const GradedPolynomial& r);

    const std::vector<GVar>& generators() const { return generators_; }
    const std::set<std::pair<GVar, GVar>>& annihilators() const { return annihilators_; }
    const std::map<GVar, GradedPolynomial>& substitutions() const { return substitutions_; }
    const std::vector<GradedPolynomial>& residual_relations() const { return residual_; }

    bool is_generator(const GVar& v) const { return generator_set_.count(v) != 0; }
    bool is_eliminated(const GVar& v) const { return substitutions_.count(v) != 0; }
    bool is_known(const GVar& v) const { return is_generator(v) || is_eliminated(v); }
    // Not eliminated and in no annihilator pair: partial derivatives along it are well defined.
    bool is_free(const GVar& v) const;

    // Generator or eliminated variable with this name, grade filled in.
    GVar lookup(const std::string& name) const;
    std::optional<GVar> find(const GVar& key) const;

    // True when the (sorted) monomial lies in the monomial ideal.
    bool kills(const Monomial& m) const;

    friend bool operator==(const Presentation& a, const Presentation& b);

private:
    std::vector<GVar> generators_;
    std::set<GVar> generator_set_;
    std::set<std::pair<GVar, GVar>> annihilators_;
    std::set<GVar> annihilated_vars_;
    std::map<GVar, GradedPolynomial> substitutions_;
    std::vector<GradedPolynomial> residual_;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

GradedPolynomial normal_form(const std::vector<RawTerm>& expr, const Presentation& pres);
GradedPolynomial normal_form(const GradedPolynomial& p, const Presentation& pres);
GradedPolynomial mul(const GradedPolynomial& p, const GradedPolynomial& q, const Presentation& pres);
GradedPolynomial power(const GradedPolynomial& p, int exponent, const Presentation& pres);

std::string format_polynomial(const GradedPolynomial& p);
GradedPolynomial parse_polynomial(const std::string& text, const Presentation& pres);

// Presentation with the given generators and no relations.
Presentation free_presentation(const std::vector<GVar>& generators);

}  // namespace ndga
