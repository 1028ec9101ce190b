#include "ndga/galgebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ndga {

Rational parse_rational(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    if (t.empty()) throw ParseError("empty number");
    std::size_t slash = t.find('/');
    auto digits_ok = [](const std::string& s) {
        std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (i >= s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    std::string num = t.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
    if (!digits_ok(num) || !digits_ok(den) || den[0] == '-') throw ParseError("bad number '" + text + "'");
    Integer n(num), m(den);
    if (m == 0) throw ParseError("zero denominator in '" + text + "'");
    Rational q(n, m);
    q.canonicalize();
    return q;
}

std::string GVar::name() const {
    std::string out;
    if (depth > 0) out += "d" + std::to_string(depth);
    out += family;
    if (site >= 0) out += std::to_string(site);
    return out;
}

GVar parse_var_name(const std::string& text) {
    std::size_t i = 0;
    int depth = 0;
    if (i < text.size() && text[i] == 'd') {
        ++i;
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        depth = start == i ? 1 : std::stoi(text.substr(start, i - start));
    }
    std::size_t fam_start = i;
    while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i])) && text[i] != '_') ++i;
    if (fam_start == i) throw ParseError("bad variable name '" + text + "'");
    std::string family = text.substr(fam_start, i - fam_start);
    if (family[0] == 'd') throw ParseError("variable family may not start with 'd': '" + text + "'");
    int site = -1;
    if (i < text.size()) {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i != text.size() || start == i) throw ParseError("bad variable name '" + text + "'");
        site = std::stoi(text.substr(start));
    }
    return GVar(family, site, depth, 0);
}

Monomial Monomial::of(const GVar& v, int exponent) {
    Monomial m;
    if (exponent <= 0) return m;
    m.factors.push_back({v, exponent});
    m.grade = v.grade * exponent;
    return m;
}

int Monomial::word_length() const {
    int n = 0;
    for (const auto& f : factors) n += f.second;
    return n;
}

int Monomial::exponent_of(const GVar& v) const {
    for (const auto& f : factors)
        if (f.first == v) return f.second;
    return 0;
}

std::string Monomial::str() const {
    if (factors.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += " * ";
        out += factors[i].first.name();
        if (factors[i].second != 1) out += "^" + std::to_string(factors[i].second);
    }
    return out;
}

bool operator<(const Monomial& a, const Monomial& b) {
    std::size_t n = std::min(a.factors.size(), b.factors.size());
    for (std::size_t i = 0; i < n; ++i) {
        const auto& fa = a.factors[i];
        const auto& fb = b.factors[i];
        if (fa.first != fb.first) return fa.first < fb.first;
        if (fa.second != fb.second) return fa.second < fb.second;
    }
    return a.factors.size() < b.factors.size();
}

bool operator==(const Monomial& a, const Monomial& b) {
    if (a.factors.size() != b.factors.size()) return false;
    for (std::size_t i = 0; i < a.factors.size(); ++i)
        if (a.factors[i].first != b.factors[i].first || a.factors[i].second != b.factors[i].second) return false;
    return true;
}

SignedMonomial free_mul(const Monomial& a, const Monomial& b) {
    SignedMonomial out;
    out.mono.grade = a.grade + b.grade;
    auto& f = out.mono.factors;
    f.reserve(a.factors.size() + b.factors.size());
    // Count odd factors of a not yet emitted; every odd factor of b that jumps ahead of them flips the sign.
    int odd_left_a = 0;
    for (const auto& fa : a.factors)
        if (fa.first.odd()) ++odd_left_a;
    int swaps = 0;
    std::size_t i = 0, j = 0;
    while (i < a.factors.size() || j < b.factors.size()) {
        if (j == b.factors.size() || (i < a.factors.size() && a.factors[i].first < b.factors[j].first)) {
            if (a.factors[i].first.odd()) --odd_left_a;
            f.push_back(a.factors[i++]);
        } else if (i == a.factors.size() || b.factors[j].first < a.factors[i].first) {
            if (b.factors[j].first.odd()) swaps += odd_left_a;
            f.push_back(b.factors[j++]);
        } else {
            const GVar& v = a.factors[i].first;
            if (v.odd()) {
                out.sign = 0;
                out.mono = Monomial::one();
                return out;
            }
            f.push_back({v, a.factors[i].second + b.factors[j].second});
            ++i;
            ++j;
        }
    }
    out.sign = (swaps % 2) ? -1 : 1;
    return out;
}

GradedPolynomial GradedPolynomial::constant(const Rational& c) {
    GradedPolynomial p;
    p.add_term(Monomial::one(), c);
    return p;
}

GradedPolynomial GradedPolynomial::variable(const GVar& v) {
    GradedPolynomial p;
    p.add_term(Monomial::of(v), 1);
    return p;
}

GradedPolynomial GradedPolynomial::monomial(const Monomial& m, const Rational& c) {
    GradedPolynomial p;
    p.add_term(m, c);
    return p;
}

void GradedPolynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Rational GradedPolynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> GradedPolynomial::grade() const {
    if (terms_.empty()) return std::nullopt;
    int g = terms_.begin()->first.grade;
    for (const auto& t : terms_)
        if (t.first.grade != g) return std::nullopt;
    return g;
}

bool GradedPolynomial::is_homogeneous() const { return terms_.empty() || grade().has_value(); }

GradedPolynomial GradedPolynomial::homogeneous_part(int g) const {
    GradedPolynomial out;
    for (const auto& t : terms_)
        if (t.first.grade == g) out.terms_.insert(t);
    return out;
}

std::set<GVar> GradedPolynomial::variables() const {
    std::set<GVar> out;
    for (const auto& t : terms_)
        for (const auto& f : t.first.factors) out.insert(f.first);
    return out;
}

int GradedPolynomial::max_word_length() const {
    int n = 0;
    for (const auto& t : terms_) n = std::max(n, t.first.word_length());
    return n;
}

GradedPolynomial& GradedPolynomial::operator+=(const GradedPolynomial& o) {
    for (const auto& t : o.terms_) add_term(t.first, t.second);
    return *this;
}

GradedPolynomial& GradedPolynomial::operator-=(const GradedPolynomial& o) {
    for (const auto& t : o.terms_) add_term(t.first, -t.second);
    return *this;
}

GradedPolynomial& GradedPolynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= c;
    return *this;
}

GradedPolynomial operator+(GradedPolynomial a, const GradedPolynomial& b) { return a += b; }
GradedPolynomial operator-(GradedPolynomial a, const GradedPolynomial& b) { return a -= b; }
GradedPolynomial operator-(GradedPolynomial a) { return a *= Rational(-1); }
GradedPolynomial operator*(GradedPolynomial a, const Rational& c) { return a *= c; }
GradedPolynomial operator*(const Rational& c, GradedPolynomial a) { return a *= c; }

GradedPolynomial free_product(const GradedPolynomial& p, const GradedPolynomial& q) {
    GradedPolynomial out;
    for (const auto& tp : p.terms())
        for (const auto& tq : q.terms()) {
            SignedMonomial sm = free_mul(tp.first, tq.first);
            if (sm.sign == 0) continue;
            Rational c = tp.second * tq.second;
            if (sm.sign < 0) c = -c;
            out.add_term(sm.mono, c);
        }
    return out;
}

void Presentation::add_generator(const GVar& v) {
    if (is_known(v)) throw InvalidArgument("duplicate variable " + v.name());
    generators_.push_back(v);
    generator_set_.insert(v);
}

void Presentation::add_annihilator(const GVar& a, const GVar& b) {
    auto fa = find(a);
    auto fb = find(b);
    if (!fa || !fb) throw PresentationMismatch("annihilator pair mentions unknown variable");
    annihilators_.insert(*fa < *fb ? std::make_pair(*fa, *fb) : std::make_pair(*fb, *fa));
    annihilated_vars_.insert(*fa);
    annihilated_vars_.insert(*fb);
}

void Presentation::add_substitution(const GVar& eliminated, const GradedPolynomial& image) {
    if (is_known(eliminated)) throw InvalidArgument("variable " + eliminated.name() + " already present");
    for (const GVar& v : image.variables()) {
        if (is_eliminated(v)) throw InvalidArgument("substitution image mentions eliminated " + v.name());
        if (!is_generator(v)) throw PresentationMismatch("substitution image mentions unknown " + v.name());
    }
    substitutions_.emplace(eliminated, image);
}

void Presentation::add_residual_relation(const GradedPolynomial& r) {
    for (const GVar& v : r.variables())
        if (!is_generator(v)) throw PresentationMismatch("residual relation mentions non-generator " + v.name());
    residual_.push_back(r);
}

bool Presentation::is_free(const GVar& v) const {
    return is_generator(v) && annihilated_vars_.count(v) == 0;
}

std::optional<GVar> Presentation::find(const GVar& key) const {
    auto it = generator_set_.find(key);
    if (it != generator_set_.end()) return *it;
    auto st = substitutions_.find(key);
    if (st != substitutions_.end()) return st->first;
    return std::nullopt;
}

GVar Presentation::lookup(const std::string& name) const {
    GVar key = parse_var_name(name);
    auto v = find(key);
    if (!v) throw PresentationMismatch("unknown variable '" + name + "'");
    return *v;
}

bool Presentation::kills(const Monomial& m) const {
    if (annihilators_.empty()) return false;
    const auto& f = m.factors;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (annihilated_vars_.count(f[i].first) == 0) continue;
        if (f[i].second >= 2 && annihilators_.count({f[i].first, f[i].first})) return true;
        for (std::size_t j = i + 1; j < f.size(); ++j)
            if (annihilators_.count({f[i].first, f[j].first})) return true;
    }
    return false;
}

bool operator==(const Presentation& a, const Presentation& b) {
    return a.generators_ == b.generators_ && a.annihilators_ == b.annihilators_ &&
           a.substitutions_ == b.substitutions_ && a.residual_ == b.residual_;
}

namespace {

GradedPolynomial reduce(const GradedPolynomial& p, const Presentation& pres) {
    GradedPolynomial out;
    for (const auto& t : p.terms())
        if (!pres.kills(t.first)) out.add_term(t.first, t.second);
    return out;
}

GradedPolynomial factor_poly(const GVar& v, const Presentation& pres) {
    auto known = pres.find(v);
    if (!known) throw PresentationMismatch("unknown variable " + v.name());
    if (pres.is_eliminated(*known)) return pres.substitutions().at(*known);
    return GradedPolynomial::variable(*known);
}

}  // namespace

GradedPolynomial normal_form(const std::vector<RawTerm>& expr, const Presentation& pres) {
    GradedPolynomial out;
    for (const RawTerm& t : expr) {
        GradedPolynomial acc = GradedPolynomial::constant(t.coeff);
        for (const GVar& v : t.factors) {
            acc = reduce(free_product(acc, factor_poly(v, pres)), pres);
            if (acc.is_zero()) break;
        }
        out += acc;
    }
    return out;
}

GradedPolynomial normal_form(const GradedPolynomial& p, const Presentation& pres) {
    GradedPolynomial out;
    for (const auto& t : p.terms()) {
        bool plain = true;
        for (const auto& f : t.first.factors) {
            if (!pres.is_generator(f.first)) {
                plain = false;
                break;
            }
        }
        if (plain) {
            if (!pres.kills(t.first)) out.add_term(t.first, t.second);
            continue;
        }
        GradedPolynomial acc = GradedPolynomial::constant(t.second);
        for (const auto& f : t.first.factors) {
            GradedPolynomial fp = factor_poly(f.first, pres);
            for (int e = 0; e < f.second; ++e) acc = reduce(free_product(acc, fp), pres);
        }
        out += acc;
    }
    return out;
}

GradedPolynomial mul(const GradedPolynomial& p, const GradedPolynomial& q, const Presentation& pres) {
    GradedPolynomial out;
    for (const auto& tp : p.terms())
        for (const auto& tq : q.terms()) {
            SignedMonomial sm = free_mul(tp.first, tq.first);
            if (sm.sign == 0 || pres.kills(sm.mono)) continue;
            Rational c = tp.second * tq.second;
            if (sm.sign < 0) c = -c;
            out.add_term(sm.mono, c);
        }
    return out;
}

GradedPolynomial power(const GradedPolynomial& p, int exponent, const Presentation& pres) {
    if (exponent < 0) throw InvalidArgument("negative exponent");
    GradedPolynomial out = GradedPolynomial::constant(1);
    for (int i = 0; i < exponent; ++i) out = mul(out, p, pres);
    return out;
}

std::string format_polynomial(const GradedPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational a = abs(c);
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        if (m.is_one()) {
            out += a.get_str();
        } else if (a == 1) {
            out += m.str();
        } else {
            out += a.get_str() + " * " + m.str();
        }
    }
    return out;
}

namespace {

class Parser {
public:
    Parser(const std::string& text, const Presentation& pres) : s_(text), pres_(pres) {}

    GradedPolynomial run() {
        GradedPolynomial p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return p;
    }

private:
    const std::string& s_;
    const Presentation& pres_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    GradedPolynomial expr() {
        GradedPolynomial acc;
        bool neg = false;
        if (peek('+') || peek('-')) neg = s_[pos_++] == '-';
        GradedPolynomial t = term();
        acc += neg ? -t : t;
        while (peek('+') || peek('-')) {
            neg = s_[pos_++] == '-';
            t = term();
            acc += neg ? -t : t;
        }
        return acc;
    }

    bool starts_factor() {
        skip();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return c == '(' || std::isalnum(static_cast<unsigned char>(c));
    }

    GradedPolynomial term() {
        GradedPolynomial acc = factor();
        while (true) {
            if (peek('*')) {
                ++pos_;
                acc = mul(acc, factor(), pres_);
            } else if (starts_factor()) {
                acc = mul(acc, factor(), pres_);
            } else {
                break;
            }
        }
        return acc;
    }

    GradedPolynomial factor() {
        GradedPolynomial base = atom();
        if (peek('^')) {
            ++pos_;
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            base = power(base, std::stoi(s_.substr(start, pos_ - start)), pres_);
        }
        return base;
    }

    GradedPolynomial atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            GradedPolynomial inner = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string num = s_.substr(start, pos_ - start);
            std::size_t save = pos_;
            skip();
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                skip();
                std::size_t ds = pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
                if (ds == pos_) fail("expected denominator");
                num += "/" + s_.substr(ds, pos_ - ds);
            } else {
                pos_ = save;
            }
            return GradedPolynomial::constant(parse_rational(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            GVar v = pres_.lookup(s_.substr(start, pos_ - start));
            return normal_form(std::vector<RawTerm>{RawTerm{1, {v}}}, pres_);
        }
        fail("unexpected character");
    }
};

}  // namespace

GradedPolynomial parse_polynomial(const std::string& text, const Presentation& pres) {
    return Parser(text, pres).run();
}

Presentation free_presentation(const std::vector<GVar>& generators) {
    Presentation p;
    for (const GVar& v : generators) p.add_generator(v);
    return p;
}

}  // namespace ndga
