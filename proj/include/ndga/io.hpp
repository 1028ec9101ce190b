#pragma once

#include <string>

#include "json.hpp"
#include "ndga/forms.hpp"
#include "ndga/liealgebroid.hpp"
#include "ndga/ncomplex.hpp"
#include "ndga/pathsum.hpp"

namespace ndga {

using Json = nlohmann::ordered_json;

Json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);

// {"generators":["x1", {"name":"d1x1","grade":1}], "annihilators":[["d1x1","d1x1"]],
//  "substitutions":{"x0":"1 - x1"}, "residual":["..."]}. A bare string generator has grade = depth.
Presentation presentation_from_json(const Json& j);
Json presentation_to_json(const Presentation& p);

// {"degree":1, "images":{"x1":"d1x1", ...}}
Derivation derivation_from_json(const Json& j, const PresentationPtr& pres);
Json derivation_to_json(const Derivation& d);

// {"order":3, "degrees":{"0":{"dim":2, "map":[[...]]}, ...}}; map entries are numbers or "p/q" strings.
NComplex ncomplex_from_json(const Json& j);
Json ncomplex_to_json(const NComplex& c);
Json matrix_to_json(const Matrix& m);

// {"n":0, "r":3, "C":{"1,2":{"3":"1"}}, "rho":{"1,1":"x1"}} with 1-based indices.
StructureData structure_from_json(const Json& j);
// {"n":4, "a":[[...]]} with a[i][alpha], or {"rows":[[...]]} in display layout; "infinitesimal": bool.
DeformationMatrix deformation_from_json(const Json& j, bool infinitesimal_default = false);

SimplicialSet simplicial_set_from_json(const Json& j);

// {"vertices":["a","b"], "edges":[["a","b","1/2"], ...]}
FiniteDigraph digraph_from_json(const Json& j);

Json nc_polynomial_to_json(const NCPolynomial& p);
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

}  // namespace ndga
