#pragma once

#include <cstdint>
#include <vector>

#include "loopex/braid.hpp"
#include "loopex/series.hpp"

namespace loopex {

// One output of a crossing operator: coefficient (a Laurent polynomial in
// s = q^(1/D) with integer coefficients) times e_{out_a} (x) e_{out_b}.
struct LocalTerm {
  int out_a = 0;
  int out_b = 0;
  // hbar-valuation of the coefficient; used for pruning.
  int valuation = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> poly;  // (s-exponent, coefficient)
};

struct LocalOperator {
  int dim = 0;
  std::vector<std::vector<LocalTerm>> terms;  // indexed by a * dim + b
};

// How far a basis label may drift per unit of hbar-valuation.
enum class DriftMetric { absolute_difference, discrete };

// Data for a braid-closure quantum trace on V^{(x) s}.
struct ClosureModel {
  int dim = 1;
  int denominator = 1;  // s = q^(1/denominator)
  LocalOperator positive;
  LocalOperator negative;
  std::vector<std::int64_t> pivot;  // s-exponent of the pivotal weight on e_i
  std::int64_t twist = 0;           // s-exponent of the ribbon factor on V
  DriftMetric metric = DriftMetric::absolute_difference;
};

struct ClosureStats {
  std::size_t primes = 0;
  std::size_t transitions = 0;
  double bound_bits = 0;
};

// theta^{-writhe} Tr(pivot^{(x)s} . rho(b)) as an hbar-series to the given order.
// Arithmetic is carried out modulo several primes and lifted by CRT with an
// a priori bound on every coefficient, so the result is exact.
RationalSeries closure_invariant(const ClosureModel& model, const BraidWord& b, std::size_t order,
                                 ClosureStats* stats = nullptr);

// Same without the framing factor.
RationalSeries closure_trace(const ClosureModel& model, const BraidWord& b, std::size_t order,
                             ClosureStats* stats = nullptr);

// Exact check helpers for tests: apply a local operator to e_a (x) e_b and
// return the coefficient polynomial of e_c (x) e_d (summed over duplicates).
std::vector<std::pair<std::int64_t, std::int64_t>> local_coefficient(const LocalOperator& op, int a, int b, int c,
                                                                     int d);

}  // namespace loopex
