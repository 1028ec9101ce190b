#pragma once

#include <gmpxx.h>

#include <string>

namespace ndga {

using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

// Accepts "7", "-3/4", "+2". Throws ParseError on anything else.
Rational parse_rational(const std::string& text);

}  // namespace ndga
