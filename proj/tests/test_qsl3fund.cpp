#include <doctest.h>

#include "loopex/error.hpp"
#include "loopex/corpus.hpp"
#include "loopex/qsl3fund.hpp"

using namespace loopex;

TEST_CASE("quantum dimensions") {
  CHECK(quantum_dim_su3(kSU3Fundamental, 4)[0] == 3);
  CHECK(quantum_dim_su3({1, 1}, 4) == RationalSeries::constant(SeriesParam::hbar, 4, Rational(1)));
  CHECK(quantum_dim_su3({2, 2}, 4)[0] == 8);
  CHECK(quantum_dim_su3(kSU3Fundamental, 4)[1] == 0);
}

TEST_CASE("delta_g") {
  CHECK(delta_g(parse_laurent("1", {Var::t}), kSU3Fundamental, 4) ==
        RationalSeries::constant(SeriesParam::hbar, 4, Rational(1)));
  const auto d = delta_g(parse_laurent("t - 1 + t^-1", {Var::t}), kSU3Fundamental, 2);
  CHECK(d[0] == 1);
  CHECK(d[1] == 0);
  CHECK(d[2] == 14);
  CHECK(delta_g(parse_laurent("t - 1 + t^-1", {Var::t}), {3, 1}, 2)[0] == 1);
}

TEST_CASE("sl3 fundamental invariant") {
  const auto unknot = sl3_fund_invariant(parse_braid("s=1;"), 4);
  CHECK(unknot == quantum_dim_su3(kSU3Fundamental, 4));
  CHECK(unknot[2] == 1);
  CHECK(unknot[4] == Rational(1, 12));

  const auto tre = parse_braid("1 1 1");
  const auto j = sl3_fund_invariant(tre, 4);
  CHECK(j[0] == 3);
  CHECK(sl3_fund_invariant(stabilize(tre), 4) == j);
  CHECK(sl3_fund_invariant(mirror(tre), 4) == j.negate_parameter());
  for (const auto& k : embedded_corpus()) CHECK(sl3_fund_invariant(k.braid, 1)[0] == 3);
}

TEST_CASE("first-order vanishing") {
  CHECK(first_order_vanishing_check(parse_braid("s=1;"), parse_laurent("1", {Var::t})).pass);
  for (const auto& k : embedded_corpus()) {
    INFO(k.name);
    const auto r = first_order_vanishing_check(k.braid, k.alexander_golden);
    CHECK(r.pass);
    CHECK(r.coefficient == 0);
  }
  CHECK_THROWS_AS(first_order_vanishing_check(parse_braid("1 1 1"), parse_laurent("1", {Var::t}), {3, 1}), Error);
}
