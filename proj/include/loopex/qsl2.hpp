#pragma once

#include <map>
#include <utility>

#include "loopex/braid.hpp"
#include "loopex/closure.hpp"
#include "loopex/laurent.hpp"
#include "loopex/series.hpp"

namespace loopex {

// [alpha] = (q^{alpha/2} - q^{-alpha/2})/(q^{1/2} - q^{-1/2}) at q = e^hbar.
RationalSeries quantum_integer(int alpha, std::size_t order);

// [k] as a Laurent polynomial in a = q^(1/4).
LaurentPolynomial quantum_integer_poly(int k);

// Crossing operator and its inverse on V_alpha (x) V_alpha, entries in a = q^(1/4).
// Cached per alpha; the returned model is shared and immutable.
const ClosureModel& sl2_model(int alpha);

struct RMatrixSeries {
  int alpha = 1;
  // (i, j) -> list of ((k, l), series) for R(e_i (x) e_j).
  std::map<std::pair<int, int>, std::vector<std::pair<std::pair<int, int>, RationalSeries>>> r, r_inverse;
};
RMatrixSeries rmatrix_sl2(int alpha, std::size_t order);

struct ColoredJonesSeries {
  int alpha = 1;
  RationalSeries series{SeriesParam::hbar, 0};
};

// Framing-corrected quantum trace; J(unknot) = [alpha].
ColoredJonesSeries colored_jones_series(const BraidWord& b, int alpha, std::size_t order,
                                        ClosureStats* stats = nullptr);

// Kauffman-bracket state sum, as a Laurent polynomial in a = q^(1/4).
// Accepts links (needed by skein checks); letter count is capped at 20.
LaurentPolynomial jones_kauffman_oracle(const BraidWord& b);
// Laurent polynomial in a = q^(1/4) expanded at q = e^hbar.
RationalSeries quarter_power_series(const LaurentPolynomial& p, std::size_t order);
// L+, L- and L0 obtained by setting one letter positive, negative, or removing it.
struct SkeinTriple {
  BraidWord positive, negative, smoothed;
};
SkeinTriple skein_triple(const BraidWord& b, std::size_t letter);
// q J(L+) - q^-1 J(L-) - (q^{1/2} - q^{-1/2}) J(L0), in a = q^(1/4).
LaurentPolynomial skein_residual(const SkeinTriple& t);

// a -> 1/a.
LaurentPolynomial invert_quarter_power(const LaurentPolynomial& p);

}  // namespace loopex
