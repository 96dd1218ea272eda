#include <doctest.h>

#include <random>

#include "loopex/error.hpp"
#include "loopex/laurent.hpp"
#include "loopex/linalg.hpp"
#include "loopex/rational.hpp"
#include "loopex/series.hpp"

using namespace loopex;

namespace {

LaurentPolynomial t_poly(const char* s) { return parse_laurent(s, {Var::t}); }

LaurentPolynomial random_poly(std::mt19937_64& rng, std::vector<Var> vars) {
  std::uniform_int_distribution<int> coef(-5, 5), expo(-3, 3), count(0, 5);
  LaurentPolynomial p(vars);
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    Exponents e{expo(rng), vars.size() > 1 ? expo(rng) : 0};
    p.add_term(e, make_rational(coef(rng), 1 + (i % 3)));
  }
  return p;
}

RationalSeries hbar_series(std::vector<Rational> c) { return RationalSeries(SeriesParam::hbar, std::move(c)); }

}  // namespace

TEST_CASE("rational helpers") {
  CHECK(make_rational(2, 4) == Rational(1, 2));
  CHECK(make_rational(3, -6).get_den() == 2);
  CHECK_THROWS_AS(make_rational(1, 0), Error);
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(to_canonical_string(Rational(4)) == "4/1");
  CHECK(is_integer(make_rational(6, 3)));
  CHECK_FALSE(is_integer(make_rational(7, 3)));
  CHECK(factorial(5) == 120);
  CHECK(rational_pow(Rational(2, 3), 3) == Rational(8, 27));
}

TEST_CASE("laurent arithmetic examples") {
  CHECK(t_poly("t - 1") * t_poly("t^-1") == t_poly("1 - t^-1"));
  const auto d31 = t_poly("t - 1 + t^-1");
  CHECK(d31 * LaurentPolynomial::constant({Var::t}, 1) == d31);
  const auto a = parse_laurent("t1^2 t2", {Var::t1, Var::t2});
  const auto b = parse_laurent("t1^-2 t2^-1", {Var::t1, Var::t2});
  CHECK(a * b == LaurentPolynomial::constant({Var::t1, Var::t2}, 1));
  CHECK(laurent_arith(d31, d31, ArithKind::sub).is_zero());
}

TEST_CASE("laurent ring axioms on random data") {
  std::mt19937_64 rng(7);
  const std::vector<Var> vars{Var::t1, Var::t2};
  for (int i = 0; i < 40; ++i) {
    const auto a = random_poly(rng, vars), b = random_poly(rng, vars), c = random_poly(rng, vars);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("exact division on random univariate data") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 40; ++i) {
    const auto a = random_poly(rng, {Var::t}), b = random_poly(rng, {Var::t});
    if (b.is_zero()) continue;
    const auto q = divide_exact(a * b, b);
    REQUIRE(q.has_value());
    CHECK(*q == a);
  }
}

TEST_CASE("laurent parse, render and errors") {
  const auto p = t_poly("t^2 - 3t + 5 - 3t^-1 + t^-2");
  CHECK(parse_laurent(p.canonical(), {Var::t}) == p);
  CHECK(p.pretty() == "t^2 - 3 t + 5 - 3 t^-1 + t^-2");
  CHECK(p.sum_of_coefficients() == 1);
  CHECK_THROWS_AS(p + parse_laurent("u", {Var::u}), Error);
  CHECK_THROWS_AS(parse_laurent("t^", {Var::t}), Error);
  CHECK_FALSE(divide_exact(t_poly("t + 1"), t_poly("t - 1")).has_value());
}

TEST_CASE("series examples") {
  const std::size_t n = 6;
  std::vector<Rational> one_minus(n + 1, Rational(0));
  one_minus[0] = 1;
  one_minus[1] = -1;
  const auto inv = series_arith(hbar_series(one_minus), hbar_series(one_minus), SeriesOp::invert);
  for (std::size_t k = 0; k <= n; ++k) CHECK(inv[k] == 1);

  std::vector<Rational> one_plus(n + 1, Rational(0));
  one_plus[0] = 1;
  one_plus[1] = 1;
  CHECK(series_exp(series_log(hbar_series(one_plus))) == hbar_series(one_plus));

  const auto d = substitute_exponential(t_poly("t - 1 + t^-1"), {{Var::t, 1}}, 4);
  CHECK(d[0] == 1);
  CHECK(d[1] == 0);
  CHECK(d[2] == 1);
  CHECK(d[3] == 0);
  CHECK(d[4] == Rational(1, 12));

  const auto et = substitute_exponential(t_poly("t"), {{Var::t, 1}}, 3);
  CHECK(et[2] == Rational(1, 2));
  CHECK(et[3] == Rational(1, 6));

  const auto cancel = substitute_exponential(parse_laurent("t1 t2", {Var::t1, Var::t2}), {{Var::t1, 1}, {Var::t2, -1}}, 5);
  CHECK(cancel == RationalSeries::constant(SeriesParam::x, 5, Rational(1)));
}

TEST_CASE("substitute_exponential is a ring homomorphism") {
  std::mt19937_64 rng(11);
  const std::vector<Var> vars{Var::t1, Var::t2};
  const ExponentialAssignment asg{{Var::t1, 2}, {Var::t2, -1}};
  for (int i = 0; i < 20; ++i) {
    const auto a = random_poly(rng, vars), b = random_poly(rng, vars);
    CHECK(substitute_exponential(a * b, asg, 6) == substitute_exponential(a, asg, 6) * substitute_exponential(b, asg, 6));
    CHECK(substitute_exponential(a + b, asg, 6) == substitute_exponential(a, asg, 6) + substitute_exponential(b, asg, 6));
  }
}

TEST_CASE("series invert and divide_with_valuation") {
  const auto d = substitute_exponential(t_poly("t - 1 + t^-1"), {{Var::t, 1}}, 8);
  const auto inv = series_invert(d);
  CHECK(inv * d == RationalSeries::constant(SeriesParam::x, 8, Rational(1)));
  CHECK(inv[2] == -1);
  CHECK(inv[4] == Rational(11, 12));

  // (hbar^2 + hbar^3) / hbar^2 = 1 + hbar, known to order N - 2.
  std::vector<Rational> a(7, Rational(0)), b(7, Rational(0));
  a[2] = 1;
  a[3] = 1;
  b[2] = 1;
  const auto q = divide_with_valuation(hbar_series(a), hbar_series(b));
  CHECK(q.order() == 4);
  CHECK(q[0] == 1);
  CHECK(q[1] == 1);
  std::vector<Rational> cube(7, Rational(0));
  cube[3] = 1;
  CHECK_THROWS_AS(divide_with_valuation(hbar_series(b), hbar_series(cube)), Error);
  CHECK_THROWS_AS(hbar_series(a) + RationalSeries(SeriesParam::x, 6), Error);
}

TEST_CASE("interpolation examples") {
  auto r = interpolate_polynomial({1, 2, 3}, {1, 4, 9}, 2);
  REQUIRE(r.stable());
  CHECK(r.coefficients == std::vector<Rational>{0, 0, 1});

  r = interpolate_polynomial({1, 2, 3, 4}, {1, 4, 9, 17}, 2);
  CHECK(r.status == InterpolationStatus::degree_bound_violation);
  CHECK(r.failing_node.has_value());

  r = interpolate_polynomial({1, 2, 3, 4}, {5, 5, 5, 5}, 3);
  REQUIRE(r.stable());
  CHECK(r.coefficients.size() == 1);
  CHECK(r.coefficients[0] == 5);

  CHECK(interpolate_polynomial({1, 1}, {0, 0}, 1).status == InterpolationStatus::repeated_node);
  CHECK(interpolate_polynomial({1}, {0}, 2).status == InterpolationStatus::too_few_nodes);
}

TEST_CASE("interpolation recovers random polynomials") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coef(-20, 20);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Rational> c(6);
    for (auto& x : c) x = make_rational(coef(rng), 7);
    while (c.back() == 0) c.back() = 1;
    std::vector<Rational> nodes, values;
    for (int a = 1; a <= 10; ++a) {
      nodes.emplace_back(a);
      values.push_back(evaluate_polynomial(c, Rational(a)));
    }
    const auto r = interpolate_polynomial(nodes, values, 7);
    REQUIRE(r.stable());
    CHECK(r.coefficients == c);
    CHECK(r.margin_checked == 2);
  }
}

TEST_CASE("exact linear solve examples") {
  auto s = solve_linear_exact({{1, 0}, {0, 1}}, {3, 4});
  CHECK(s.status == LinearStatus::unique);
  CHECK(s.solution == std::vector<Rational>{3, 4});

  s = solve_linear_exact({{0}}, {1});
  CHECK(s.status == LinearStatus::inconsistent);

  s = solve_linear_exact({{1, 1}, {1, -1}}, {2, 0});
  CHECK(s.status == LinearStatus::unique);
  CHECK(s.solution == std::vector<Rational>{1, 1});

  s = solve_linear_exact({{1, 1}, {2, 2}}, {1, 2});
  CHECK(s.status == LinearStatus::underdetermined);
  CHECK(s.rank == 1);
}
