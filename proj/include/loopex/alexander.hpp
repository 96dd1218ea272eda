#pragma once

#include <vector>

#include "loopex/braid.hpp"
#include "loopex/laurent.hpp"

namespace loopex {

using LaurentMatrix = std::vector<std::vector<LaurentPolynomial>>;

// Reduced Burau image, (strands-1) x (strands-1) over Q[t, 1/t].
LaurentMatrix burau_reduced(const BraidWord& b);
LaurentMatrix matrix_multiply(const LaurentMatrix& a, const LaurentMatrix& b);
LaurentPolynomial determinant(const LaurentMatrix& m);

// Normalized: value 1 at t = 1 and symmetric under t <-> 1/t.
LaurentPolynomial alexander_poly(const BraidWord& b);
// det(I - burau_reduced(b)) * (1 - t)/(1 - t^s) without normalization; works for links.
LaurentPolynomial alexander_unnormalized(const BraidWord& b);

// q(u) with q(t + 1/t) = a(t).
LaurentPolynomial alexander_in_u(const LaurentPolynomial& a);
// Inverse of alexander_in_u: substitute u = t + 1/t.
LaurentPolynomial u_to_t(const LaurentPolynomial& q);

bool is_symmetric_in_t(const LaurentPolynomial& p);

}  // namespace loopex
