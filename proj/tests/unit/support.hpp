#pragma once

#include <random>
#include <string>

#include "doctest.h"
#include "ndga/galgebra.hpp"

namespace ndga::test {

inline GradedPolynomial P(const std::string& text, const Presentation& pres) { return parse_polynomial(text, pres); }

inline std::mt19937_64 rng_for(const char* name) {
    std::uint64_t h = 1469598103934665603ull;
    for (const char* c = name; *c; ++c) h = (h ^ static_cast<unsigned char>(*c)) * 1099511628211ull;
    return std::mt19937_64(h);
}

inline RawTerm random_raw(const std::vector<GVar>& gens, std::mt19937_64& rng, int max_len) {
    RawTerm t;
    std::uniform_int_distribution<int> len(0, max_len), pick(0, static_cast<int>(gens.size()) - 1), c(-3, 3);
    int l = len(rng);
    for (int i = 0; i < l; ++i) t.factors.push_back(gens[static_cast<std::size_t>(pick(rng))]);
    int k = c(rng);
    t.coeff = k == 0 ? 1 : k;
    return t;
}

// Homogeneous of the requested grade, possibly zero.
inline GradedPolynomial random_homogeneous(const Presentation& pres, int grade, std::mt19937_64& rng) {
    GradedPolynomial out;
    for (int tries = 0; tries < 200 && out.size() < 3; ++tries) {
        GradedPolynomial m = normal_form({random_raw(pres.generators(), rng, 3)}, pres);
        if (!m.is_zero() && m.grade() == grade) out += m;
    }
    return out;
}

}  // namespace ndga::test
