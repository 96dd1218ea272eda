#include "loopex/qsl3fund.hpp"

#include "loopex/error.hpp"

namespace loopex {

namespace {

// (q^{m/2} - q^{-m/2}) to the given order.
RationalSeries half_gap(int m, std::size_t order) {
  return exp_linear(SeriesParam::hbar, make_rational(m, 2), order) - exp_linear(SeriesParam::hbar, make_rational(-m, 2), order);
}

RationalSeries quantum_ratio(int m, int r, std::size_t order) {
  return divide_with_valuation(half_gap(m, order + 1), half_gap(r, order + 1)).truncated(order);
}

ClosureModel build_sl3_model() {
  ClosureModel model;
  model.dim = 3;
  model.denominator = 6;
  model.metric = DriftMetric::discrete;
  model.twist = 8;
  model.pivot = {6, 0, -6};
  model.positive.dim = model.negative.dim = 3;
  model.positive.terms.resize(9);
  model.negative.terms.resize(9);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      auto& pos = model.positive.terms[static_cast<std::size_t>(i * 3 + j)];
      auto& neg = model.negative.terms[static_cast<std::size_t>(i * 3 + j)];
      if (i == j) {
        pos.push_back({i, i, 0, {{2, 1}}});
        neg.push_back({i, i, 0, {{-2, 1}}});
        continue;
      }
      pos.push_back({j, i, 0, {{-1, 1}}});
      neg.push_back({j, i, 0, {{1, 1}}});
      if (i > j) pos.push_back({i, j, 1, {{2, 1}, {-4, -1}}});
      if (i < j) neg.push_back({i, j, 1, {{4, -1}, {-2, 1}}});
    }
  }
  return model;
}

}  // namespace

RationalSeries quantum_dim_su3(SU3Weight w, std::size_t order) {
  return quantum_ratio(w.m1, 1, order) * quantum_ratio(w.m2, 1, order) * quantum_ratio(w.m1 + w.m2, 2, order);
}

RationalSeries delta_g(const LaurentPolynomial& delta, SU3Weight w, std::size_t order) {
  const LaurentPolynomial d = delta.rename({Var::t});
  auto at = [&](int m) { return substitute_exponential(d, {{Var::t, m}}, order, SeriesParam::hbar); };
  return at(w.m1) * at(w.m2) * at(w.m1 + w.m2);
}

const ClosureModel& sl3_fundamental_model() {
  static const ClosureModel model = build_sl3_model();
  return model;
}

RationalSeries sl3_fund_invariant(const BraidWord& b, std::size_t order, ClosureStats* stats) {
  if (closure_component_count(b) != 1) throw Error(ErrorCode::precondition, "braid closure is a link, not a knot");
  if (order == 0) throw Error(ErrorCode::invalid_argument, "truncation order 0 carries no information");
  return closure_invariant(sl3_fundamental_model(), b, order, stats);
}

FirstOrderResult first_order_vanishing_check(const BraidWord& b, const LaurentPolynomial& delta, SU3Weight w,
                                             std::size_t order) {
  if (w.m1 != kSU3Fundamental.m1 || w.m2 != kSU3Fundamental.m2) {
    throw Error(ErrorCode::invalid_argument, "only the fundamental representation is implemented");
  }
  if (order < 1) throw Error(ErrorCode::invalid_argument, "order must be at least 1");
  FirstOrderResult r;
  r.product = sl3_fund_invariant(b, order) * delta_g(delta, w, order) * series_invert(quantum_dim_su3(w, order));
  r.coefficient = r.product[1];
  r.pass = r.coefficient == 0;
  return r;
}

}  // namespace loopex
