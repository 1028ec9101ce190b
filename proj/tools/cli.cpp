#include "cli.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ndga/acceptance.hpp"
#include "ndga/dga.hpp"
#include "ndga/forms.hpp"
#include "ndga/io.hpp"
#include "ndga/liealgebroid.hpp"
#include "ndga/ncomplex.hpp"
#include "ndga/pathsum.hpp"

namespace ndga::cli {

namespace {

struct Report {
    Json result = Json::object();
    std::string text;
    std::vector<std::pair<std::string, bool>> checks;

    void line(const std::string& s) { text += s + "\n"; }
    void check(const std::string& name, bool pass) { checks.push_back({name, pass}); }
};

// FNV-1a over the command line and every input file read.
struct Digest {
    std::uint64_t h = 1469598103934665603ull;
    void feed(const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
        h ^= 0xff;
        h *= 1099511628211ull;
    }
    std::string hex() const {
        std::ostringstream ss;
        ss << std::hex << std::setw(16) << std::setfill('0') << h;
        return ss.str();
    }
};

struct Options {
    bool json = false;
    std::uint64_t seed = 20240611;
    std::string bounds = "6,4";

    // mc / paths / infinitesimal / kernel
    int N = 3;
    std::string coeff, target, from, to, graph;
    bool show_paths = false, no_filter = false, verify = false, mutate = false, use_mc = false;
    int steps = 0, truncate = 0;
    std::string method = "both";

    // forms
    int n = 1, m = 1, power = 1, degree = 0, poly_bound = 2;
    bool simplex = false, check = false, difference = false;
    std::string input, form, f;

    // ncomplex
    int p = 1;
    std::optional<int> i;

    // lie
    bool sl2 = false, infinitesimal = false;
    int tangent = 0, example = 0, order = 2, random_r = 0;
    std::string linear;

    // algebra
    std::string pres, omega, with, poly, a, b, d1, d2, e, grades, coeffs;
    int k = 1, l = 1, diamond_n = 0;
    std::optional<int> nil_order;

    // verify-paper
    std::string filter;
};

Digest* g_digest = nullptr;

std::string load_text(const std::string& path) {
    std::string s = read_text_file(path);
    if (g_digest) g_digest->feed(s);
    return s;
}

Json load_json(const std::string& path) {
    std::string s = load_text(path);
    try {
        return Json::parse(s);
    } catch (const nlohmann::json::parse_error& ex) {
        throw ParseError(path + ": " + ex.what());
    }
}

Bounds parse_bounds(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw ParseError("--bounds expects <degree>,<word>");
    try {
        return Bounds{std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
    } catch (const std::exception&) {
        throw ParseError("--bounds expects <degree>,<word>");
    }
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(part, &used));
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw ParseError("bad integer list '" + s + "'");
        }
    }
    return out;
}

WeightTable weights(const Options& o) {
    WeightTable w;
    if (o.mutate) w.loop = -1;
    return w;
}

Json path_json(const Path& p) {
    Json v = Json::array();
    for (const auto& x : p.vertices) v.push_back(x.entries);
    return {{"vertices", v}, {"weight", p.weight.get_str()}, {"text", p.str()}};
}

Json derivation_images_json(const Derivation& d) { return derivation_to_json(d); }

void print_derivation(Report& r, const std::string& label, const Derivation& d) {
    if (d.is_zero()) {
        r.line(label + ": 0");
        return;
    }
    r.line(label + ":");
    for (const auto& [v, img] : d.images()) r.line("  " + v.name() + " -> " + format_polynomial(img));
}

std::string word_text(const std::vector<int>& word, const std::vector<std::string>& names) {
    std::string s;
    for (std::size_t i = 0; i < word.size(); ++i) s += (i ? " " : "") + names[static_cast<std::size_t>(word[i])];
    return s.empty() ? "1" : s;
}

std::string end_operator_text(Report& r, const EndOperator& op, const std::vector<std::string>& names) {
    Json arr = Json::array();
    std::string text;
    for (const auto& [w, c] : op.words()) {
        std::string term = word_text(w, names);
        text += (text.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        Rational a = abs(c);
        if (a != 1) text += a.get_str() + " ";
        text += term;
        arr.push_back({{"word", term}, {"coeff", c.get_str()}});
    }
    r.result["words"] = arr;
    return text.empty() ? "0" : text;
}

// --pres file or --omega N,n[,s]
Dga load_algebra(const Options& o) {
    if (!o.pres.empty() && !o.omega.empty()) throw InvalidArgument("use either --pres or --omega");
    if (!o.omega.empty()) {
        auto v = parse_int_list(o.omega);
        if (v.size() < 2 || v.size() > 3) throw ParseError("--omega expects N,n or N,n,1 for the simplex");
        return omega_space(v[0], v[1], v.size() == 3 && v[2] != 0);
    }
    if (o.pres.empty()) throw InvalidArgument("an algebra is required: --pres <file> or --omega N,n");
    Json j = load_json(o.pres);
    auto pres = std::make_shared<const Presentation>(presentation_from_json(j));
    Dga D;
    D.pres = pres;
    D.d = j.contains("differential") ? derivation_from_json(j.at("differential"), pres) : Derivation(pres, 1);
    D.claimed_order = j.contains("order") ? j.at("order").get<int>() : 2;
    return D;
}

Derivation load_derivation(const std::string& path, const PresentationPtr& pres) {
    if (path.empty()) throw InvalidArgument("a derivation file is required");
    return derivation_from_json(load_json(path), pres);
}

StructureData load_structure(const Options& o) {
    if (o.sl2) return sl2_structure();
    if (o.tangent > 0) return tangent_structure(o.tangent);
    if (o.input.empty()) throw InvalidArgument("structure data required: --input, --sl2 or --tangent n");
    return structure_from_json(load_json(o.input));
}

// ---- pathsum ----

void cmd_mc(const Options& o, Report& r) {
    if (o.N < 3) throw InvalidArgument("mc needs N >= 3");
    WeightTable w = weights(o);
    r.result["N"] = o.N;
    if (!o.coeff.empty()) {
        MultiIndex s = MultiIndex::parse(o.coeff);
        Integer c = mc_coefficient(s, o.N, w);
        r.line("c(" + s.str() + "," + std::to_string(o.N) + ") = " + c.get_str());
        r.result["s"] = s.entries;
        r.result["coefficient"] = c.get_str();
        if (o.show_paths) {
            auto paths = enumerate_paths(s, o.N, w);
            Json arr = Json::array();
            for (const auto& p : paths) {
                r.line("  " + p.str() + "  [" + p.weight.get_str() + "]");
                arr.push_back(path_json(p));
            }
            r.line(std::to_string(paths.size()) + " paths");
            r.result["paths"] = arr;
        }
        return;
    }
    NCPolynomial eq = mc_equation(o.N, o.no_filter ? 0 : 3, w);
    r.line(render_mc_equation(eq));
    r.result["equation"] = render_mc_equation(eq);
    r.result["terms"] = nc_polynomial_to_json(eq);
    if (o.show_paths) {
        Json arr = Json::array();
        for (const auto& [key, c] : eq.terms) {
            if (key.second > 2) continue;
            MultiIndex s{key.first};
            r.line("c(" + s.str() + "," + std::to_string(o.N) + ") = " + c.get_str() + "  [" + render_word(key.first) + "]");
            for (const auto& p : enumerate_paths(s, o.N, w)) {
                r.line("  " + p.str() + "  [" + p.weight.get_str() + "]");
                arr.push_back(path_json(p));
            }
        }
        r.result["paths"] = arr;
    }
    if (o.verify) {
        McIdentityVerdict v = verify_mc_identity(o.N, w);
        r.line(std::string("word identity with entries < 3: ") + (v.filtered_equal ? "holds" : "fails"));
        r.line(std::string("word identity over all of E_N: ") + (v.unfiltered_equal ? "holds" : "fails"));
        Json res = Json::object();
        for (const auto& [word, c] : v.residual) {
            res[word] = c.get_str();
        }
        if (!v.residual.empty()) {
            r.line("residual words:");
            for (const auto& [word, c] : v.residual) r.line("  " + c.get_str() + " " + word);
        }
        r.result["verify"] = {{"filtered", v.filtered_equal}, {"unfiltered", v.unfiltered_equal}, {"residual", res}};
        r.check("word identity (entries < 3)", v.filtered_equal);
    }
}

void cmd_infinitesimal(const Options& o, Report& r) {
    InfinitesimalVerdict v = verify_infinitesimal(o.N);
    Json arr = Json::array();
    std::string rhs;
    for (int k = 0; k < o.N; ++k) {
        const Integer& c = v.coefficients[static_cast<std::size_t>(k)];
        arr.push_back(c.get_str());
        r.line("k=" + std::to_string(k) + ": " + c.get_str() + " = c((" + std::to_string(o.N - k - 1) + ")," + std::to_string(o.N) + ")");
        if (c == 0) continue;
        std::string term = (c == 1 ? "" : c == -1 ? "-" : c.get_str() + " ") + render_word({o.N - k - 1});
        if (k == 1) term += " d";
        if (k >= 2) term += " d^" + std::to_string(k);
        rhs += (rhs.empty() ? "" : " + ") + term;
    }
    r.line("(d + te)^" + std::to_string(o.N) + " = t(" + rhs + ")");
    r.result["N"] = o.N;
    r.result["coefficients"] = arr;
    r.check("composition sums equal path sums", v.matches_path_sums);
    r.check("word expansion with t^2 = 0", v.matches_words);
}

void cmd_paths(const Options& o, Report& r) {
    MultiIndex s = MultiIndex::parse(o.target);
    auto paths = enumerate_paths(s, o.N, weights(o));
    Json arr = Json::array();
    Integer sum = 0;
    for (const auto& p : paths) {
        r.line(p.str() + "  [" + p.weight.get_str() + "]");
        arr.push_back(path_json(p));
        sum += p.weight;
    }
    Integer count = path_count(s, o.N);
    r.line(std::to_string(paths.size()) + " paths, weighted sum " + sum.get_str());
    r.result["paths"] = arr;
    r.result["count"] = count.get_str();
    r.result["weighted_sum"] = sum.get_str();
    r.check("enumeration matches memoized count", Integer(static_cast<long>(paths.size())) == count);
    r.check("enumeration matches memoized coefficient", sum == mc_coefficient(s, o.N, weights(o)));
}

void cmd_kernel(const Options& o, Report& r) {
    if (o.use_mc) {
        MultiIndex x = MultiIndex::parse(o.from), y = MultiIndex::parse(o.to);
        Integer v = kernel_implicit(mc_graph(weights(o)), o.steps, x, y);
        r.line("omega_" + std::to_string(o.steps) + "(" + y.str() + ", " + x.str() + ") = " + v.get_str());
        r.result["value"] = v.get_str();
        if (o.truncate > 0) {
            FiniteDigraph g = mc_truncation(o.truncate, weights(o));
            Rational t = kernel_matrix(g, o.steps, g.index(x.str()), g.index(y.str()));
            r.line("truncated graph (|s| + l(s) <= " + std::to_string(o.truncate) + "): " + t.get_str());
            r.result["truncated"] = t.get_str();
            r.check("implicit = truncated", Rational(v) == t);
        }
        return;
    }
    if (o.graph.empty()) throw InvalidArgument("kernel needs --graph <file> or --mc");
    FiniteDigraph g = digraph_from_json(load_json(o.graph));
    int x = g.index(o.from), y = g.index(o.to);
    std::optional<Rational> a, b;
    if (o.method == "matrix" || o.method == "both") a = kernel_matrix(g, o.steps, x, y);
    if (o.method == "enumerate" || o.method == "both") b = kernel_enumerate(g, o.steps, x, y);
    if (!a && !b) throw InvalidArgument("--method must be matrix, enumerate or both");
    Rational v = a ? *a : *b;
    r.line("omega_" + std::to_string(o.steps) + "(" + o.to + ", " + o.from + ") = " + v.get_str());
    r.result["value"] = v.get_str();
    if (a && b) r.check("matrix power = path enumeration", *a == *b);
}

// ---- forms ----

void describe_presentation(Report& r, const Presentation& p) {
    std::string gens;
    for (const GVar& v : p.generators()) gens += (gens.empty() ? "" : " ") + v.name() + ":" + std::to_string(v.grade);
    r.line("generators: " + gens);
    for (const auto& [a, b] : p.annihilators()) r.line("  " + a.name() + " * " + b.name() + " = 0");
    for (const auto& [v, img] : p.substitutions()) r.line("  " + v.name() + " = " + format_polynomial(img));
    for (const auto& rel : p.residual_relations()) r.line("  " + format_polynomial(rel) + " = 0");
    r.result["presentation"] = presentation_to_json(p);
}

void cmd_forms_omega(const Options& o, Report& r, const Bounds& bounds) {
    Dga D = omega_space(o.N, o.n, o.simplex);
    describe_presentation(r, *D.pres);
    print_derivation(r, "d", D.d);
    r.line("claimed order " + std::to_string(D.claimed_order));
    r.result["differential"] = derivation_images_json(D.d);
    r.result["claimed_order"] = D.claimed_order;
    if (o.check) {
        NilpotencyVerdict v = nilpotency_check(D.d, D.claimed_order, bounds);
        r.line("d^" + std::to_string(D.claimed_order) + " = 0 on " + std::to_string(v.monomials_checked) + " monomials: " +
               (v.verified ? "yes" : "no, " + v.counterexample->str() + " -> " + format_polynomial(v.image)));
        auto w = nonzero_power_witness(D.d, D.claimed_order - 1, bounds);
        if (w) r.line("d^" + std::to_string(D.claimed_order - 1) + "(" + w->first.str() + ") = " + format_polynomial(w->second));
        r.result["verified"] = v.verified;
        r.result["proper_witness"] = w ? Json(w->first.str()) : Json(nullptr);
        r.check("nilpotency", v.verified);
    }
}

void cmd_forms_delta(const Options& o, Report& r) {
    std::string text = o.form;
    if (!o.input.empty()) text = load_text(o.input);
    if (text.empty()) throw InvalidArgument("give a form with --form or --input");
    DifferenceForm w = parse_difference_form(text, o.n, o.N);
    r.line("w = " + format_difference_form(w));
    Json steps = Json::array();
    for (int k = 1; k <= o.power; ++k) {
        w = delta_apply(w, o.N);
        std::string s = format_difference_form(w);
        r.line("delta^" + std::to_string(k) + " w = " + s);
        steps.push_back(s);
    }
    r.result["powers"] = steps;
}

void cmd_forms_sset(const Options& o, Report& r) {
    SimplicialSet s = simplicial_set_from_json(load_json(o.input));
    SimplicialForms f = omega_simplicial_set(s, o.N, o.degree, o.poly_bound);
    r.line("dim Omega_" + std::to_string(o.N) + "^" + std::to_string(o.degree) + " (poly bound " +
           std::to_string(o.poly_bound) + ") = " + std::to_string(f.basis.size()));
    Json arr = Json::array();
    for (std::size_t b = 0; b < f.basis.size(); ++b) {
        Json fam = Json::object();
        std::string line = "  [" + std::to_string(b + 1) + "]";
        for (const auto& [name, val] : f.basis[b]) {
            fam[name] = format_polynomial(val);
            line += " " + name + ": " + format_polynomial(val) + ";";
        }
        r.line(line);
        arr.push_back(fam);
    }
    r.result["dimension"] = f.basis.size();
    r.result["basis"] = arr;
    bool ok = true;
    for (const auto& fam : f.basis) ok = ok && is_compatible(s, fam, o.N);
    r.check("every basis family is compatible", ok);
}

void cmd_forms_map(const Options& o, Report& r) {
    std::vector<int> f = parse_int_list(o.f);
    AlgebraMorphism phi = o.difference ? dn_map(f, o.m, o.N) : omega_map(f, o.m, o.N);
    Json imgs = Json::object();
    for (const auto& [v, img] : phi.images) {
        r.line(v.name() + " -> " + format_polynomial(img));
        imgs[v.name()] = format_polynomial(img);
    }
    r.result["images"] = imgs;
}

void cmd_forms_dn(const Options& o, Report& r) { describe_presentation(r, *dn_simplex(o.n, o.N)); }

// ---- ncomplex ----

void cmd_ncomplex_check(const Options& o, Report& r) {
    NComplex c = ncomplex_from_json(load_json(o.input));
    NComplexVerdict v = check_ncomplex(c);
    r.line(std::string("d^") + std::to_string(c.order) + " = 0: " + (v.valid ? "yes" : "no"));
    if (v.counterexample_degree) r.line("first nonzero composite starts at degree " + std::to_string(*v.counterexample_degree));
    r.line(std::string("proper: ") + (v.proper ? "yes" : "no"));
    r.result["valid"] = v.valid;
    r.result["proper"] = v.proper;
    r.result["counterexample_degree"] = v.counterexample_degree ? Json(*v.counterexample_degree) : Json(nullptr);
    r.check("N-complex", v.valid);
}

void cmd_ncomplex_cohomology(const Options& o, Report& r) {
    NComplex c = ncomplex_from_json(load_json(o.input));
    std::vector<int> degrees;
    if (o.i) {
        degrees.push_back(*o.i);
    } else {
        for (const auto& [i, d] : c.dims) degrees.push_back(i);
    }
    Json arr = Json::array();
    for (int i : degrees) {
        CohomologyResult h = cohomology(c, o.p, i);
        r.line(std::to_string(o.p) + "H^" + std::to_string(i) + ": dim " + std::to_string(h.dimension) + " (ker " +
               std::to_string(h.kernel_dim) + ", im " + std::to_string(h.image_rank) + ")");
        Json basis = Json::array();
        for (const auto& v : h.basis) {
            Json col = Json::array();
            std::string s;
            for (const auto& x : v) {
                col.push_back(x.get_str());
                s += (s.empty() ? "" : ", ") + x.get_str();
            }
            r.line("  [" + s + "]");
            basis.push_back(col);
        }
        arr.push_back({{"p", o.p}, {"i", i}, {"dimension", h.dimension}, {"kernel", h.kernel_dim}, {"image", h.image_rank}, {"basis", basis}});
    }
    r.result["cohomology"] = arr;
}

// ---- lie ----

void cmd_lie_ce(const Options& o, Report& r) {
    StructureData S = load_structure(o);
    Derivation d = ce_derivation(S);
    print_derivation(r, "d", d);
    r.result["differential"] = derivation_images_json(d);
    Derivation sq = diamond_power(d, 2);
    r.line(std::string("d^2 = 0: ") + (sq.is_zero() ? "yes" : "no"));
    r.result["square_zero"] = sq.is_zero();
    if (S.n == 0 && S.constant_bracket()) {
        CartanCheck c = cartan_check(S);
        r.check("d th(v1, v2) = -th([v1, v2])", c.first);
        r.check("d^2 th = shuffle sum over Sh(2,1)", c.second);
    }
}

void cmd_lie_check3(const Options& o, Report& r, std::uint64_t seed) {
    StructureData S;
    if (o.random_r > 0) {
        std::mt19937_64 rng(seed);
        S = random_constants(o.random_r, rng);
    } else {
        S = load_structure(o);
    }
    ThreeLieVerdict v = is_3_lie(S);
    r.line(std::string("Jacobi: ") + (v.jacobi ? "yes" : "no"));
    r.line(std::string("3-Lie (operator): ") + (v.three_lie_operator ? "yes" : "no"));
    r.line(std::string("3-Lie (shuffle identity): ") + (v.three_lie_shuffle ? "yes" : "no"));
    for (std::size_t k = 0; k < v.residuals.size() && k < 10; ++k) r.line("  residual " + v.residuals[k]);
    r.result["jacobi"] = v.jacobi;
    r.result["three_lie_operator"] = v.three_lie_operator;
    r.result["three_lie_shuffle"] = v.three_lie_shuffle;
    r.result["residuals"] = v.residuals;
    r.check("operator and shuffle verdicts agree", v.agree());
    r.check("3-Lie", v.three_lie_operator);
}

void cmd_lie_deform(const Options& o, Report& r) {
    DeformationMatrix a;
    if (o.example == 1) {
        a = example_square_zero();
    } else if (o.example == 2) {
        a = example_square_nonzero();
    } else if (!o.linear.empty()) {
        Json j = load_json(o.linear);
        int n = static_cast<int>(j.size());
        Matrix A(n, n);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) A.at(x, y) = rational_from_json(j.at(x).at(y));
        a = linear_deformation(A);
    } else if (!o.input.empty()) {
        a = deformation_from_json(load_json(o.input), o.infinitesimal);
    } else {
        throw InvalidArgument("deformation needs --input, --example 1|2 or --linear");
    }
    if (o.infinitesimal && o.linear.empty()) a.infinitesimal = true;
    DeformationReport rep = deform_de_rham(a);
    print_derivation(r, "field", rep.field);
    print_derivation(r, "square", rep.square);
    print_derivation(r, "cube", rep.cube);
    r.result["square"] = derivation_images_json(rep.square);
    r.result["cube"] = derivation_images_json(rep.cube);
    r.result["square_zero"] = rep.square_zero;
    r.result["cube_zero"] = rep.cube_zero;
    if (a.infinitesimal) {
        r.check("square equals t d_alpha a^j_beta th^alpha th^beta d_j", rep.square_matches_closed);
        r.check("cube = 0", rep.cube_zero);
    } else {
        r.line(std::string("cube equals the bracketed closed form: ") + (rep.cube_matches_printed ? "yes" : "no"));
        r.line(std::string("cube equals the form with (delta + a) on the second derivatives: ") +
               (rep.cube_matches_corrected ? "yes" : "no"));
        r.result["cube_matches_printed"] = rep.cube_matches_printed;
        r.result["cube_matches_corrected"] = rep.cube_matches_corrected;
        r.check("cube equals the corrected closed form", rep.cube_matches_corrected);
    }
}

void cmd_lie_identities(const Options& o, Report& r) {
    StructureData S = load_structure(o);
    IdentityReport rep = algebroid_identities(S, o.order);
    Json arr = Json::array();
    for (const auto& [label, p] : rep.residuals) {
        r.line(label + ": " + format_polynomial(p));
        arr.push_back({{"label", label}, {"residual", format_polynomial(p)}});
    }
    r.line(std::string("residuals vanish: ") + (rep.residuals_vanish ? "yes" : "no"));
    r.line(std::string("operator power vanishes: ") + (rep.operator_vanishes ? "yes" : "no"));
    r.result["order"] = o.order;
    r.result["residuals"] = arr;
    r.result["residuals_vanish"] = rep.residuals_vanish;
    r.result["operator_vanishes"] = rep.operator_vanishes;
    r.check("residual route agrees with operator route", rep.agree());
}

// ---- algebra ----

void cmd_algebra_nf(const Options& o, Report& r) {
    Dga D = load_algebra(o);
    GradedPolynomial p = normal_form(parse_polynomial(o.poly, *D.pres), *D.pres);
    r.line(format_polynomial(p));
    r.result["normal_form"] = format_polynomial(p);
}

void cmd_algebra_mul(const Options& o, Report& r) {
    Dga D = load_algebra(o);
    GradedPolynomial p = mul(parse_polynomial(o.a, *D.pres), parse_polynomial(o.b, *D.pres), *D.pres);
    r.line(format_polynomial(p));
    r.result["product"] = format_polynomial(p);
}

void cmd_algebra_nilpotency(const Options& o, Report& r, const Bounds& bounds) {
    Dga D = load_algebra(o);
    int N = o.nil_order ? *o.nil_order : D.claimed_order;
    NilpotencyVerdict v = nilpotency_check(D.d, N, bounds);
    r.line("d^" + std::to_string(N) + " = 0 on " + std::to_string(v.monomials_checked) + " monomials (grade <= " +
           std::to_string(bounds.degree_bound) + ", word length <= " + std::to_string(bounds.word_bound) + "): " +
           (v.verified ? "yes" : "no"));
    if (!v.verified) r.line("counterexample " + v.counterexample->str() + " -> " + format_polynomial(v.image));
    r.result["order"] = N;
    r.result["verified"] = v.verified;
    r.result["monomials_checked"] = v.monomials_checked;
    r.result["counterexample"] = v.counterexample ? Json(v.counterexample->str()) : Json(nullptr);
    r.check("nilpotency", v.verified);
}

void cmd_algebra_power(const Options& o, Report& r) {
    Dga D = load_algebra(o);
    GradedPolynomial p = parse_polynomial(o.poly, *D.pres);
    Json arr = Json::array();
    for (int j = 1; j <= o.k; ++j) {
        p = apply_derivation(D.d, p);
        r.line("d^" + std::to_string(j) + ": " + format_polynomial(p));
        arr.push_back(format_polynomial(p));
    }
    r.result["powers"] = arr;
}

void cmd_algebra_diamond(const Options& o, Report& r) {
    Dga D = load_algebra(o);
    Derivation A = o.d1.empty() ? D.d : load_derivation(o.d1, D.pres);
    Derivation out;
    if (o.diamond_n > 0) {
        out = diamond_power(A, o.diamond_n);
    } else {
        Derivation B = o.d2.empty() ? A : load_derivation(o.d2, D.pres);
        out = diamond(A, B);
    }
    print_derivation(r, "result", out);
    r.result["derivation"] = derivation_images_json(out);
}

void cmd_algebra_field_power(const Options& o, Report& r) {
    std::vector<int> grades = parse_int_list(o.grades);
    PresentationPtr pres = field_presentation(grades);
    VectorField a;
    std::stringstream ss(o.coeffs);
    std::string part;
    std::size_t idx = 0;
    while (std::getline(ss, part, ';')) {
        if (idx >= grades.size()) throw InvalidArgument("more coefficients than generators");
        a.push_back({pres->generators()[idx], parse_polynomial(part, *pres)});
        ++idx;
    }
    if (idx != grades.size()) throw InvalidArgument("one coefficient per generator is required");
    DiffOperator direct = field_power_direct(pres, a, o.N);
    DiffOperator closed = field_power_closed(pres, a, o.N);
    r.line(format_operator(closed));
    r.result["operator"] = format_operator(closed);
    r.check("closed sum equals repeated composition", closed == direct);
}

void cmd_algebra_end(const Options& o, Report& r) {
    Dga D = load_algebra(o);
    Derivation e = load_derivation(o.e, D.pres);
    r.line(end_operator_text(r, end_derivative(D.d, e, o.l), {"d", "e"}));
}

void cmd_algebra_curvature(const Options& o, Report& r, const Bounds& bounds) {
    Dga D = load_algebra(o);
    Derivation e = load_derivation(o.e, D.pres);
    r.line("F_e = " + end_operator_text(r, curvature(D.d, e), {"d", "e"}));
    NilpotencyVerdict v = curvature_condition(D.d, e, o.N, bounds);
    r.line("(d + e)^" + std::to_string(o.N) + " = 0 on " + std::to_string(v.monomials_checked) + " monomials: " +
           (v.verified ? "yes" : "no"));
    r.result["verified"] = v.verified;
    r.check("curvature condition", v.verified);
}

void cmd_algebra_tensor(const Options& o, Report& r, const Bounds& bounds) {
    auto va = parse_int_list(o.omega), vb = parse_int_list(o.with);
    if (va.size() != 2 || vb.size() != 2) throw ParseError("--omega and --with expect N,n");
    Dga A = omega_space(va[0], va[1]);
    Dga B = omega_space(vb[0], vb[1], false, 1, "y");
    Dga T = tensor_dga(A, B);
    describe_presentation(r, *T.pres);
    NilpotencyVerdict v = nilpotency_check(T.d, T.claimed_order, bounds);
    r.line("claimed order " + std::to_string(T.claimed_order) + ", verified: " + (v.verified ? "yes" : "no"));
    r.result["claimed_order"] = T.claimed_order;
    r.result["verified"] = v.verified;
    r.check("tensor nilpotency", v.verified);
}

// ---- verify-paper ----

void cmd_verify(const Options& o, Report& r, std::uint64_t seed, std::ostream& log) {
    AcceptanceOptions opt;
    opt.filter = o.filter;
    opt.seed = seed;
    opt.weights = weights(o);
    auto results = run_acceptance(opt);
    if (results.empty()) throw InvalidArgument("filter '" + o.filter + "' selects no checks");
    Json arr = Json::array();
    std::string first_failure;
    for (const auto& s : results) {
        log << "ndga: criterion " << s.criterion << " took " << s.seconds << " s\n";
        r.line("criterion " + std::to_string(s.criterion) + " [" + s.group + "] " + s.title + ": " + (s.pass ? "PASS" : "FAIL"));
        Json checks = Json::array();
        for (const auto& c : s.checks) {
            r.line(std::string("  ") + (c.pass ? "pass" : "FAIL") + "  " + c.name + (c.detail.empty() ? "" : "  (" + c.detail + ")"));
            checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
            if (!c.pass && first_failure.empty()) first_failure = std::to_string(s.criterion) + ": " + c.name;
            r.check(std::to_string(s.criterion) + ": " + c.name, c.pass);
        }
        arr.push_back({{"criterion", s.criterion}, {"group", s.group}, {"title", s.title}, {"pass", s.pass}, {"checks", checks}});
    }
    if (!first_failure.empty()) r.line("first failing check: " + first_failure);
    r.result["criteria"] = arr;
    r.result["first_failure"] = first_failure.empty() ? Json(nullptr) : Json(first_failure);
}

struct App {
    CLI::App app{"Exact computations with N-differential graded algebras", "ndga"};
    Options o;
    std::map<std::string, CLI::App*> subs;

    CLI::App* sub(CLI::App* parent, const std::string& path, const std::string& name, const std::string& help) {
        CLI::App* s = parent->add_subcommand(name, help);
        subs[path] = s;
        return s;
    }

    App() {
        app.require_subcommand(1);
        app.fallthrough();
        app.add_flag("--json", o.json, "Emit a JSON report");
        app.add_option("--seed", o.seed, "Seed for randomized commands");
        app.add_option("--bounds", o.bounds, "Nilpotency bounds <degree>,<word>");

        auto* mc = sub(&app, "mc", "mc", "Maurer-Cartan coefficients and equation for d^3 = 0");
        mc->add_option("--N", o.N, "Power N of d + e")->required();
        mc->add_option("--coeff", o.coeff, "Single coefficient c(s,N), s like 1,1");
        mc->add_flag("--show-paths", o.show_paths, "List weighted paths");
        mc->add_flag("--no-filter", o.no_filter, "Keep indices with entries >= 3");
        mc->add_flag("--verify", o.verify, "Check the identity on words in d and e");
        mc->add_flag("--mutate-weights", o.mutate)->group("");

        auto* inf = sub(&app, "infinitesimal", "infinitesimal", "Coefficients of (d + te)^N with t^2 = 0");
        inf->add_option("--N", o.N)->required();

        auto* paths = sub(&app, "paths", "paths", "Weighted paths from the empty index");
        paths->add_option("--N", o.N)->required();
        paths->add_option("--target", o.target)->required();
        paths->add_flag("--mutate-weights", o.mutate)->group("");

        auto* ker = sub(&app, "kernel", "kernel", "Path-sum kernel omega_n(y, x)");
        ker->add_option("--graph", o.graph, "Finite weighted digraph (JSON)");
        ker->add_flag("--mc", o.use_mc, "Use the Maurer-Cartan graph on multi-indices");
        ker->add_option("--n", o.steps, "Path length")->required();
        ker->add_option("--from", o.from)->required();
        ker->add_option("--to", o.to)->required();
        ker->add_option("--method", o.method, "matrix, enumerate or both");
        ker->add_option("--truncate", o.truncate, "Cross-check against the finite truncation");

        auto* forms = sub(&app, "forms", "forms", "Depth-N differential and difference forms");
        forms->require_subcommand(1);
        auto* om = sub(forms, "forms omega", "omega", "Presentation of Omega_N(R^n)");
        om->add_option("--N", o.N)->required();
        om->add_option("--n", o.n)->required();
        om->add_flag("--simplex", o.simplex, "Forms on the n-simplex");
        om->add_flag("--check", o.check, "Check the nilpotency order");
        auto* de = sub(forms, "forms delta", "delta", "Apply delta to a difference form");
        de->add_option("--N", o.N)->required();
        de->add_option("--n", o.n)->required();
        de->add_option("--input", o.input, "File holding the form");
        de->add_option("--form", o.form, "Form text");
        de->add_option("--power", o.power, "Number of applications");
        auto* ss = sub(forms, "forms sset", "sset", "Forms on a finitely generated simplicial set");
        ss->add_option("--input", o.input)->required();
        ss->add_option("--degree", o.degree)->required();
        ss->add_option("--poly-bound", o.poly_bound)->required();
        ss->add_option("--N", o.N);
        auto* mp = sub(forms, "forms map", "map", "Algebra map induced by f in Delta(n, m)");
        mp->add_option("--f", o.f, "Values f(0),...,f(n)")->required();
        mp->add_option("--m", o.m)->required();
        mp->add_option("--N", o.N)->required();
        mp->add_flag("--difference", o.difference, "Difference forms instead of differential forms");
        auto* dn = sub(forms, "forms dn", "dn", "Difference forms on the lattice simplex");
        dn->add_option("--n", o.n)->required();
        dn->add_option("--N", o.N)->required();

        auto* nc = sub(&app, "ncomplex", "ncomplex", "Finite-dimensional N-complexes");
        nc->require_subcommand(1);
        auto* ncc = sub(nc, "ncomplex check", "check", "Check d^N = 0 and properness");
        ncc->add_option("--input", o.input)->required();
        auto* nch = sub(nc, "ncomplex cohomology", "cohomology", "Generalized cohomology pH^i");
        nch->add_option("--input", o.input)->required();
        nch->add_option("--p", o.p)->required();
        nch->add_option("--i", o.i);

        auto* lie = sub(&app, "lie", "lie", "Lie algebras, algebroids and de Rham deformations");
        lie->require_subcommand(1);
        auto structure_inputs = [&](CLI::App* s) {
            s->add_option("--input", o.input, "Structure data (JSON)");
            s->add_flag("--sl2", o.sl2, "Use sl2");
            s->add_option("--tangent", o.tangent, "Tangent bundle of R^n");
        };
        auto* ce = sub(lie, "lie ce", "ce", "Chevalley-Eilenberg derivation");
        structure_inputs(ce);
        auto* c3 = sub(lie, "lie check3", "check3", "3-Lie test by operator and shuffle routes");
        structure_inputs(c3);
        c3->add_option("--random", o.random_r, "Random constants of this dimension (uses --seed)");
        auto* df = sub(lie, "lie deform", "deform", "Deformations of the de Rham field");
        df->add_option("--input", o.input, "Matrix (JSON)");
        df->add_flag("--infinitesimal", o.infinitesimal, "Adjoin t with t^2 = 0");
        df->add_option("--example", o.example, "Built-in 4x4 example 1 or 2");
        df->add_option("--linear", o.linear, "Constant matrix A (JSON) for a^i_alpha = A^i_alpha x^alpha");
        auto* id = sub(lie, "lie identities", "identities", "Structural identities of order 2 or 3");
        structure_inputs(id);
        id->add_option("--order", o.order)->required();

        auto* alg = sub(&app, "algebra", "algebra", "Presented graded-commutative algebras");
        alg->require_subcommand(1);
        auto algebra_inputs = [&](CLI::App* s) {
            s->add_option("--pres", o.pres, "Presentation (JSON), optional \"differential\" and \"order\"");
            s->add_option("--omega", o.omega, "Omega_N(R^n) as N,n (N,n,1 for the simplex)");
        };
        auto* nf = sub(alg, "algebra nf", "nf", "Normal form");
        algebra_inputs(nf);
        nf->add_option("--poly", o.poly)->required();
        auto* mu = sub(alg, "algebra mul", "mul", "Product");
        algebra_inputs(mu);
        mu->add_option("--a", o.a)->required();
        mu->add_option("--b", o.b)->required();
        auto* ni = sub(alg, "algebra nilpotency", "nilpotency", "Bounded check of d^N = 0");
        algebra_inputs(ni);
        ni->add_option("--N", o.nil_order, "Order (default: claimed order)");
        auto* pw = sub(alg, "algebra power", "power", "Iterated differential of a polynomial");
        algebra_inputs(pw);
        pw->add_option("--poly", o.poly)->required();
        pw->add_option("--k", o.k);
        auto* dia = sub(alg, "algebra diamond", "diamond", "Diamond product of derivations");
        algebra_inputs(dia);
        dia->add_option("--d1", o.d1, "Derivation (JSON); default the differential");
        dia->add_option("--d2", o.d2, "Derivation (JSON); default d1");
        dia->add_option("--power", o.diamond_n, "Right-nested diamond power of d1");
        auto* fp = sub(alg, "algebra field-power", "field-power", "N-th power of a vector field");
        fp->add_option("--grades", o.grades, "Grades of y1..ym")->required();
        fp->add_option("--coeffs", o.coeffs, "Coefficients a^1;...;a^m")->required();
        fp->add_option("--N", o.N)->required();
        auto* ed = sub(alg, "algebra end-derivative", "end-derivative", "l-th derivative of e in End");
        algebra_inputs(ed);
        ed->add_option("--e", o.e)->required();
        ed->add_option("--l", o.l);
        auto* cu = sub(alg, "algebra curvature", "curvature", "Curvature of a deformation d + e");
        algebra_inputs(cu);
        cu->add_option("--e", o.e)->required();
        cu->add_option("--N", o.N);
        auto* te = sub(alg, "algebra tensor", "tensor", "Tensor product of two form algebras");
        te->add_option("--omega", o.omega, "First factor N,n")->required();
        te->add_option("--with", o.with, "Second factor P,m")->required();

        auto* vp = sub(&app, "verify-paper", "verify-paper", "Run the acceptance suite");
        vp->add_option("--filter", o.filter, "Group name or criterion number");
        vp->add_flag("--mutate-weights", o.mutate)->group("");
    }

    bool parsed(const std::string& path) const { return subs.at(path)->parsed(); }
};

}  // namespace

const std::vector<OperationEntry>& operation_registry() {
    static const std::vector<OperationEntry> reg{
        {"normal_form", "algebra nf"},
        {"mul", "algebra mul"},
        {"tensor_dga", "algebra tensor"},
        {"apply_derivation", "algebra power"},
        {"nilpotency_check", "algebra nilpotency"},
        {"compose", "algebra field-power"},
        {"diamond", "algebra diamond"},
        {"diamond_power", "algebra diamond"},
        {"field_power_direct", "algebra field-power"},
        {"field_power_closed", "algebra field-power"},
        {"end_derivative", "algebra end-derivative"},
        {"curvature_condition", "algebra curvature"},
        {"enumerate_paths", "paths"},
        {"mc_coefficient", "mc"},
        {"mc_equation", "mc"},
        {"infinitesimal_coefficients", "infinitesimal"},
        {"kernel", "kernel"},
        {"verify_mc_identity", "mc"},
        {"omega_space", "forms omega"},
        {"omega_map", "forms map"},
        {"omega_simplicial_set", "forms sset"},
        {"delta_apply", "forms delta"},
        {"dn_simplex", "forms dn"},
        {"check_ncomplex", "ncomplex check"},
        {"cohomology", "ncomplex cohomology"},
        {"ce_derivation", "lie ce"},
        {"is_3_lie", "lie check3"},
        {"deform_de_rham", "lie deform"},
        {"algebroid_identities", "lie identities"},
        {"cmd_mc", "mc"},
        {"cmd_verify_paper", "verify-paper"},
    };
    return reg;
}

std::vector<std::string> command_paths() {
    App a;
    std::vector<std::string> out;
    for (const auto& [path, s] : a.subs) out.push_back(path);
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& log) {
    auto start = std::chrono::steady_clock::now();
    App a;
    Options& o = a.o;
    std::string command;
    for (const auto& s : args) command += (command.empty() ? "" : " ") + s;
    Digest digest;
    digest.feed(command);
    g_digest = &digest;
    Report r;
    int code = kOk;
    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        a.app.parse(rev);
        Bounds bounds = parse_bounds(o.bounds);
        if (a.parsed("mc")) cmd_mc(o, r);
        else if (a.parsed("infinitesimal")) cmd_infinitesimal(o, r);
        else if (a.parsed("paths")) cmd_paths(o, r);
        else if (a.parsed("kernel")) cmd_kernel(o, r);
        else if (a.parsed("forms omega")) cmd_forms_omega(o, r, bounds);
        else if (a.parsed("forms delta")) cmd_forms_delta(o, r);
        else if (a.parsed("forms sset")) cmd_forms_sset(o, r);
        else if (a.parsed("forms map")) cmd_forms_map(o, r);
        else if (a.parsed("forms dn")) cmd_forms_dn(o, r);
        else if (a.parsed("ncomplex check")) cmd_ncomplex_check(o, r);
        else if (a.parsed("ncomplex cohomology")) cmd_ncomplex_cohomology(o, r);
        else if (a.parsed("lie ce")) cmd_lie_ce(o, r);
        else if (a.parsed("lie check3")) cmd_lie_check3(o, r, o.seed);
        else if (a.parsed("lie deform")) cmd_lie_deform(o, r);
        else if (a.parsed("lie identities")) cmd_lie_identities(o, r);
        else if (a.parsed("algebra nf")) cmd_algebra_nf(o, r);
        else if (a.parsed("algebra mul")) cmd_algebra_mul(o, r);
        else if (a.parsed("algebra nilpotency")) cmd_algebra_nilpotency(o, r, bounds);
        else if (a.parsed("algebra power")) cmd_algebra_power(o, r);
        else if (a.parsed("algebra diamond")) cmd_algebra_diamond(o, r);
        else if (a.parsed("algebra field-power")) cmd_algebra_field_power(o, r);
        else if (a.parsed("algebra end-derivative")) cmd_algebra_end(o, r);
        else if (a.parsed("algebra curvature")) cmd_algebra_curvature(o, r, bounds);
        else if (a.parsed("algebra tensor")) cmd_algebra_tensor(o, r, bounds);
        else if (a.parsed("verify-paper")) cmd_verify(o, r, o.seed, log);
        for (const auto& [name, pass] : r.checks)
            if (!pass) code = kCheckFailed;
    } catch (const CLI::CallForHelp&) {
        out << a.app.help();
        g_digest = nullptr;
        return kOk;
    } catch (const CLI::ParseError& e) {
        log << "ndga: " << e.what() << "\n";
        g_digest = nullptr;
        return kInputError;
    } catch (const ConsistencyError& e) {
        log << "ndga: internal cross-check failed: " << e.what() << "\n";
        g_digest = nullptr;
        return kCheckFailed;
    } catch (const Error& e) {
        log << "ndga: " << e.what() << "\n";
        g_digest = nullptr;
        return kInputError;
    } catch (const nlohmann::json::exception& e) {
        log << "ndga: malformed JSON input: " << e.what() << "\n";
        g_digest = nullptr;
        return kInputError;
    }
    g_digest = nullptr;
    if (o.json) {
        Json j;
        j["command"] = command;
        j["inputs_digest"] = "fnv1a64:" + digest.hex();
        j["result"] = r.result;
        Json checks = Json::array();
        for (const auto& [name, pass] : r.checks) checks.push_back({{"name", name}, {"pass", pass}});
        j["checks"] = checks;
        j["ok"] = code == kOk;
        out << j.dump(2) << "\n";
    } else {
        out << r.text;
        if (!a.parsed("verify-paper"))
            for (const auto& [name, pass] : r.checks) out << "check " << name << ": " << (pass ? "pass" : "FAIL") << "\n";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    log << "ndga: " << command << " finished in " << secs << " s, exit " << code << "\n";
    return code;
}

}  // namespace ndga::cli
