#pragma once

#include "loopex/braid.hpp"
#include "loopex/closure.hpp"
#include "loopex/laurent.hpp"
#include "loopex/series.hpp"

namespace loopex {

// Pairings of the shifted highest weight with the two simple coroots; the
// third positive root pairs to m1 + m2.
struct SU3Weight {
  int m1 = 2;
  int m2 = 1;
};

inline constexpr SU3Weight kSU3Fundamental{2, 1};

// prod over positive roots of [m]/[rho.m] at q = e^hbar, rho pairings (1, 1, 2).
RationalSeries quantum_dim_su3(SU3Weight w, std::size_t order);

// Delta(q^m1) Delta(q^m2) Delta(q^{m1+m2}) at q = e^hbar.
RationalSeries delta_g(const LaurentPolynomial& delta, SU3Weight w, std::size_t order);

// Crossing operators on the 3-dimensional module, entries in s = q^(1/6).
const ClosureModel& sl3_fundamental_model();

// Framing-corrected quantum trace on V^{(x) s}; the unknot gives [3].
RationalSeries sl3_fund_invariant(const BraidWord& b, std::size_t order, ClosureStats* stats = nullptr);

struct FirstOrderResult {
  bool pass = false;
  Rational coefficient = 0;
  RationalSeries product{SeriesParam::hbar, 0};
};

// hbar^1 coefficient of J_fund * Delta_g / d_q must vanish.
FirstOrderResult first_order_vanishing_check(const BraidWord& b, const LaurentPolynomial& delta,
                                             SU3Weight w = kSU3Fundamental, std::size_t order = 2);

}  // namespace loopex
