#include <doctest.h>

#include "loopex/error.hpp"
#include "loopex/alexander.hpp"
#include "loopex/corpus.hpp"
#include "loopex/loopexpand.hpp"
#include "loopex/qsl2.hpp"
#include "loopex/series.hpp"

using namespace loopex;

namespace {

LaurentPolynomial t_poly(const char* s) { return parse_laurent(s, {Var::t}); }

struct Pipeline {
  LaurentPolynomial delta;
  MMArray multiplied, plain;
  ExtractionResult extraction;
};

Pipeline run(const BraidWord& b, std::size_t order, int loops, ColorSource source = ColorSource::family) {
  Pipeline p;
  p.delta = alexander_poly(b);
  const auto sweep = color_sweep(b, static_cast<int>(minimum_colors(order)), order, {source, 1});
  p.multiplied = mm_array(sweep, p.delta, true);
  p.plain = mm_array(sweep, p.delta, false);
  p.extraction = extract_loop_polys(p.multiplied, p.delta, loops, 2 * static_cast<int>(p.delta.max_exponent()));
  return p;
}

}  // namespace

TEST_CASE("unknot array and loops") {
  const auto p = run(parse_braid("s=1;"), 4, 2);
  CHECK(p.multiplied.entry(0, 0) == 1);
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t m = 0; m <= 2 * n; ++m) CHECK(p.multiplied.entry(n, m) == 0);
  REQUIRE(p.extraction.ok);
  CHECK(p.extraction.loops.P(1).is_zero());
  CHECK(p.extraction.loops.P(2).is_zero());
  const auto mmr = mmr_diagonal_check(p.plain, p.delta, 4);
  CHECK(mmr.pass);
  CHECK(mmr.diagonal == RationalSeries::constant(SeriesParam::x, 4, Rational(1)));
}

TEST_CASE("too few colors is a precondition failure unless overridden") {
  const auto b = parse_braid("1 1 1");
  const auto sweep = color_sweep(b, 14, 6);
  CHECK_THROWS_AS(mm_array(sweep, alexander_poly(b), true), Error);
  const auto mm = mm_array(sweep, alexander_poly(b), true, true);
  CHECK(mm.colors_overridden);
  CHECK(minimum_colors(14) == 32);
}

TEST_CASE("trefoil pipeline") {
  const auto b = parse_braid("1 1 1");
  const auto p = run(b, 8, 1);

  // Rows are triangular and the array starts with the identity.
  CHECK(p.multiplied.entry(0, 0) == 1);
  for (std::size_t n = 0; n < p.multiplied.c.size(); ++n) CHECK(p.multiplied.row_degree[n] <= n);

  const auto mmr = mmr_diagonal_check(p.plain, p.delta, 8);
  CHECK(mmr.pass);
  CHECK(mmr.diagonal[2] == -1);
  CHECK(mmr.diagonal[4] == Rational(11, 12));

  REQUIRE(p.extraction.ok);
  const auto& p1 = p.extraction.loops.P(1);
  CHECK(p1 == t_poly("t^2 - 2t + 2 - 2t^-1 + t^-2"));
  CHECK(p.extraction.loops.levels[0].residual == 0);
  CHECK(laurent_parity(p1) == "symmetric");

  const auto hb = convert_hbar_to_h(p.extraction.loops, p.delta);
  CHECK(hb.P(1) == p1);
  for (int alpha : {2, 3, 4}) {
    INFO(alpha);
    const auto rr = resubstitute_check(hb, p.delta, colored_jones_series(b, alpha, 8).series, alpha);
    CHECK(rr.pass);
    CHECK(rr.protected_order >= 1);
  }
}

TEST_CASE("trefoil two-loop polynomial in the h basis") {
  const auto b = parse_braid("1 1 1");
  const auto p = run(b, 14, 2);
  REQUIRE(p.extraction.ok);
  const auto hb = convert_hbar_to_h(p.extraction.loops, p.delta);
  CHECK(hb.P(2) == t_poly("-t^2 + t + 1 + t^-1 - t^-2"));
  bool integral = true;
  const auto twelve_p2 = hb.P(2) * Rational(12);
  for (const auto& [e, c] : twelve_p2.terms()) integral = integral && is_integer(c);
  CHECK(integral);
  CHECK(resubstitute_check(hb, p.delta, colored_jones_series(mirror(b), 3, 14).series.negate_parameter(), 3).pass);
}

TEST_CASE("figure-eight pipeline") {
  const auto p = run(parse_braid("1 -2 1 -2"), 8, 1);
  CHECK(mmr_diagonal_check(p.plain, p.delta, 8).pass);
  REQUIRE(p.extraction.ok);
  CHECK(p.extraction.loops.P(1).is_zero());
  CHECK(laurent_parity(p.extraction.loops.P(1)) == "zero");
}

TEST_CASE("family and direct color sources agree") {
  const auto b = parse_braid("1 -2 1 -2");
  const auto fam = color_sweep(b, 10, 4, {ColorSource::family, 1});
  const auto dir = color_sweep(b, 10, 4, {ColorSource::direct, 2});
  for (int a = 1; a <= 10; ++a) CHECK(fam.normalized[a - 1] == dir.normalized[a - 1]);
}

TEST_CASE("h-basis conversion edge cases") {
  const auto delta = t_poly("t - 1 + t^-1");
  LoopPolynomials zero;
  zero.levels.push_back(LoopLevel{1, LaurentPolynomial({Var::t}), 0, 0, 0, "zero"});
  zero.levels.push_back(LoopLevel{2, LaurentPolynomial({Var::t}), 0, 0, 0, "zero"});
  const auto hz = convert_hbar_to_h(zero, delta);
  CHECK(hz.P(1).is_zero());
  CHECK(hz.P(2).is_zero());
  CHECK(hz.basis == LoopBasis::h);

  LoopPolynomials one;
  one.levels.push_back(LoopLevel{1, t_poly("t - 2 + t^-1"), 1, 0, 0, "symmetric"});
  CHECK(convert_hbar_to_h(one, delta).P(1) == t_poly("t - 2 + t^-1"));

  CHECK(laurent_parity(t_poly("t - t^-1")) == "antisymmetric");
  CHECK(laurent_parity(t_poly("t + 2")) == "none");
}
