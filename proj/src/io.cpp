#include "ndga/io.hpp"

#include <fstream>
#include <sstream>

#include "ndga/errors.hpp"

namespace ndga {

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json read_json_file(const std::string& path) {
    try {
        return Json::parse(read_text_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

Json rational_to_json(const Rational& q) { return q.get_str(); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ParseError("expected an integer or a \"p/q\" string, got " + j.dump());
}

namespace {

const Json& require(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

// "1,2" -> {0, 1}
std::vector<int> index_list(const std::string& key, int expected) {
    std::vector<int> out;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            out.push_back(std::stoi(part) - 1);
        } catch (const std::exception&) {
            throw ParseError("bad index key '" + key + "'");
        }
    }
    if (static_cast<int>(out.size()) != expected) throw ParseError("index key '" + key + "' needs " + std::to_string(expected) + " entries");
    return out;
}

GradedPolynomial poly_from_json(const Json& j, const Presentation& pres) {
    if (j.is_number_integer()) return GradedPolynomial::constant(rational_from_json(j));
    if (!j.is_string()) throw ParseError("expected a polynomial string, got " + j.dump());
    return parse_polynomial(j.get<std::string>(), pres);
}

}  // namespace

Presentation presentation_from_json(const Json& j) {
    Presentation p;
    for (const Json& g : require(j, "generators")) {
        if (g.is_string()) {
            GVar v = parse_var_name(g.get<std::string>());
            v.grade = v.depth;
            p.add_generator(v);
        } else if (g.is_object()) {
            GVar v = parse_var_name(require(g, "name").get<std::string>());
            v.grade = require(g, "grade").get<int>();
            p.add_generator(v);
        } else {
            throw ParseError("generator entries are names or {name, grade} objects");
        }
    }
    if (j.contains("annihilators"))
        for (const Json& pair : j.at("annihilators")) {
            if (!pair.is_array() || pair.size() != 2) throw ParseError("annihilators are pairs of names");
            p.add_annihilator(p.lookup(pair[0].get<std::string>()), p.lookup(pair[1].get<std::string>()));
        }
    if (j.contains("substitutions"))
        for (const auto& [name, img] : j.at("substitutions").items()) {
            GradedPolynomial image = poly_from_json(img, p);
            GVar v = parse_var_name(name);
            auto g = image.grade();
            v.grade = g ? *g : v.depth;
            p.add_substitution(v, image);
        }
    if (j.contains("residual"))
        for (const Json& r : j.at("residual")) p.add_residual_relation(poly_from_json(r, p));
    return p;
}

Json presentation_to_json(const Presentation& p) {
    Json j;
    j["generators"] = Json::array();
    for (const GVar& v : p.generators()) j["generators"].push_back({{"name", v.name()}, {"grade", v.grade}});
    j["annihilators"] = Json::array();
    for (const auto& [a, b] : p.annihilators()) j["annihilators"].push_back({a.name(), b.name()});
    j["substitutions"] = Json::object();
    for (const auto& [v, img] : p.substitutions()) j["substitutions"][v.name()] = format_polynomial(img);
    j["residual"] = Json::array();
    for (const auto& r : p.residual_relations()) j["residual"].push_back(format_polynomial(r));
    return j;
}

Derivation derivation_from_json(const Json& j, const PresentationPtr& pres) {
    Derivation d(pres, j.contains("degree") ? j.at("degree").get<int>() : 1);
    for (const auto& [name, img] : require(j, "images").items()) d.set_image(pres->lookup(name), poly_from_json(img, *pres));
    return d;
}

Json derivation_to_json(const Derivation& d) {
    Json j;
    j["degree"] = d.degree();
    j["images"] = Json::object();
    for (const auto& [v, img] : d.images()) j["images"][v.name()] = format_polynomial(img);
    return j;
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(rational_to_json(m.at(r, c)));
        rows.push_back(row);
    }
    return rows;
}

NComplex ncomplex_from_json(const Json& j) {
    NComplex c;
    c.order = require(j, "order").get<int>();
    const Json& degs = require(j, "degrees");
    for (const auto& [key, entry] : degs.items()) c.dims[std::stoi(key)] = require(entry, "dim").get<int>();
    for (const auto& [key, entry] : degs.items()) {
        if (!entry.contains("map")) continue;
        int i = std::stoi(key);
        const Json& rows = entry.at("map");
        int R = static_cast<int>(rows.size());
        int C = R == 0 ? 0 : static_cast<int>(rows[0].size());
        Matrix m(R, C);
        for (int r = 0; r < R; ++r) {
            if (static_cast<int>(rows[r].size()) != C) throw ParseError("ragged matrix at degree " + key);
            for (int k = 0; k < C; ++k) m.at(r, k) = rational_from_json(rows[r][k]);
        }
        // an empty target is written as [] whatever the source dimension
        if (R == 0) m = Matrix(0, c.dim(i));
        c.maps[i] = m;
    }
    c.validate();
    return c;
}

Json ncomplex_to_json(const NComplex& c) {
    Json j;
    j["order"] = c.order;
    j["degrees"] = Json::object();
    for (const auto& [i, d] : c.dims) {
        Json e;
        e["dim"] = d;
        auto it = c.maps.find(i);
        if (it != c.maps.end()) e["map"] = matrix_to_json(it->second);
        j["degrees"][std::to_string(i)] = e;
    }
    return j;
}

StructureData structure_from_json(const Json& j) {
    int n = require(j, "n").get<int>();
    int r = require(j, "r").get<int>();
    StructureData S = StructureData::zero(n, r);
    PresentationPtr pres = algebroid_presentation(n, r);
    if (j.contains("C"))
        for (const auto& [key, inner] : j.at("C").items()) {
            auto ab = index_list(key, 2);
            for (const auto& [g, val] : inner.items()) {
                auto gv = index_list(g, 1);
                S.set_bracket(ab[0], ab[1], gv[0], poly_from_json(val, *pres));
            }
        }
    if (j.contains("rho"))
        for (const auto& [key, val] : j.at("rho").items()) {
            auto ia = index_list(key, 2);
            if (ia[0] < 0 || ia[0] >= n || ia[1] < 0 || ia[1] >= r) throw InvalidArgument("anchor index out of range: " + key);
            S.rho[ia[0]][ia[1]] = poly_from_json(val, *pres);
        }
    S.validate();
    return S;
}

DeformationMatrix deformation_from_json(const Json& j, bool infinitesimal_default) {
    bool inf = j.contains("infinitesimal") ? j.at("infinitesimal").get<bool>() : infinitesimal_default;
    const bool rows_layout = j.contains("rows");
    const Json& m = rows_layout ? j.at("rows") : require(j, "a");
    int n = static_cast<int>(m.size());
    PresentationPtr pres = algebroid_presentation(n, n);
    std::vector<std::vector<GradedPolynomial>> grid(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
        if (static_cast<int>(m[r].size()) != n) throw InvalidArgument("deformation matrix must be square");
        for (int c = 0; c < n; ++c) grid[r].push_back(poly_from_json(m[r][c], *pres));
    }
    if (rows_layout) return DeformationMatrix::from_rows(grid, inf);
    DeformationMatrix d;
    d.n = n;
    d.a = grid;
    d.infinitesimal = inf;
    d.validate();
    return d;
}

SimplicialSet simplicial_set_from_json(const Json& j) {
    SimplicialSet s;
    s.K = require(j, "K").get<int>();
    for (const auto& [k, names] : require(j, "simplices").items())
        for (const Json& nm : names) s.simplices[std::stoi(k)].push_back(nm.get<std::string>());
    if (j.contains("faces"))
        for (const auto& [name, fs] : j.at("faces").items())
            for (const Json& f : fs) s.faces[name].push_back(f.get<std::string>());
    if (j.contains("degeneracies"))
        for (const auto& [name, spec] : j.at("degeneracies").items()) {
            if (!spec.is_array() || spec.size() != 2) throw ParseError("degeneracy entries are [simplex, j]");
            s.degeneracies[name] = {spec[0].get<std::string>(), spec[1].get<int>()};
        }
    s.validate();
    return s;
}

FiniteDigraph digraph_from_json(const Json& j) {
    FiniteDigraph g;
    for (const Json& v : require(j, "vertices")) g.add_vertex(v.get<std::string>());
    for (const Json& e : require(j, "edges")) {
        if (!e.is_array() || e.size() < 2 || e.size() > 3) throw ParseError("edges are [from, to, weight]");
        Rational w = e.size() == 3 ? rational_from_json(e[2]) : Rational(1);
        g.add_edge(g.index(e[0].get<std::string>()), g.index(e[1].get<std::string>()), w);
    }
    return g;
}

Json nc_polynomial_to_json(const NCPolynomial& p) {
    Json arr = Json::array();
    for (const auto& [key, c] : p.terms) arr.push_back({{"word", key.first}, {"dpow", key.second}, {"coeff", c.get_str()}});
    return arr;
}

}  // namespace ndga
