#include <doctest.h>

#include <algorithm>

#include "loopex/error.hpp"
#include "loopex/alexander.hpp"
#include "loopex/corpus.hpp"

using namespace loopex;

namespace {
LaurentPolynomial t_poly(const char* s) { return parse_laurent(s, {Var::t}); }
}  // namespace

TEST_CASE("burau examples") {
  const auto id = burau_reduced(parse_braid("s=3;"));
  REQUIRE(id.size() == 2);
  CHECK(id[0][0] == t_poly("1"));
  CHECK(id[0][1].is_zero());
  CHECK(id[1][1] == t_poly("1"));
  const auto s1 = burau_reduced(parse_braid("s=2; 1"));
  REQUIRE(s1.size() == 1);
  CHECK(s1[0][0] == t_poly("-t"));
}

TEST_CASE("alexander examples") {
  CHECK(alexander_poly(parse_braid("s=1;")) == t_poly("1"));
  CHECK(alexander_poly(parse_braid("1 1 1")) == t_poly("t - 1 + t^-1"));
  CHECK(alexander_poly(parse_braid("1 -2 1 -2")) == t_poly("-t + 3 - t^-1"));
  CHECK(alexander_in_u(t_poly("t - 1 + t^-1")) == parse_laurent("u - 1", {Var::u}));
  CHECK(alexander_in_u(t_poly("t^2 - t + 1 - t^-1 + t^-2")) == parse_laurent("u^2 - u - 1", {Var::u}));
  CHECK(alexander_in_u(t_poly("1")) == parse_laurent("1", {Var::u}));
  CHECK(u_to_t(parse_laurent("u^2 - u - 1", {Var::u})) == t_poly("t^2 - t + 1 - t^-1 + t^-2"));
}

TEST_CASE("alexander is a braid closure invariant") {
  for (const auto& k : embedded_corpus()) {
    INFO(k.name);
    const auto d = alexander_poly(k.braid);
    CHECK(d == k.alexander_golden);
    CHECK(is_symmetric_in_t(d));
    CHECK(alexander_poly(stabilize(k.braid)) == d);
    CHECK(alexander_poly(mirror(k.braid)) == d);
    auto rotated = k.braid;
    std::rotate(rotated.letters.begin(), rotated.letters.begin() + 1, rotated.letters.end());
    CHECK(alexander_poly(rotated) == d);
  }
}

TEST_CASE("determinant of a product") {
  const auto a = burau_reduced(parse_braid("s=3; 1 -2"));
  const auto b = burau_reduced(parse_braid("s=3; 2 2 1"));
  CHECK(determinant(matrix_multiply(a, b)) == determinant(a) * determinant(b));
  CHECK(burau_reduced(parse_braid("s=3; 1 -2 2 2 1")) == matrix_multiply(a, b));
}
