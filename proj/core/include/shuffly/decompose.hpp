#pragma once

#include "shuffly/specialize.hpp"

#include <map>

namespace shuffly {

struct not_in_span : shuffly_error {
    using shuffly_error::shuffly_error;
};

struct decomposition {
    // Coefficients in Q[h] of the ordered PBW monomials reconstructing the
    // input element; the residual after subtraction is zero on success.
    std::map<pbw_monomial, poly> coefficients;
};

// Constructive PBW decomposition of a good element: walks the degree vectors
// of T_k from the maximal one down, factors each specialization as
// prod G_{beta,beta'} * prod G_beta * G, expands G in the per-root rank-1
// product basis with the mode window read off the y-degrees, and subtracts
// the recognized combination. Throws not_in_span when the element is not
// good or a factorization/solve step fails.
decomposition decompose_good(const shuffle_element& f,
                             const pbw_builder& builder = canonical_pbw_builder());

} // namespace shuffly
