#pragma once

#include "ndga/operators.hpp"

namespace ndga {

// A presented algebra with a degree-one derivation and the nilpotency order it is claimed to satisfy.
struct Dga {
    PresentationPtr pres;
    Derivation d;
    int claimed_order = 1;
};

// Q with the zero differential, order 1.
Dga ground_field_dga();

// Union of generators and relations; d acts factorwise. Claimed order N + P - 1.
Dga tensor_dga(const Dga& A, const Dga& B);

}  // namespace ndga
