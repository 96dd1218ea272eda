#include <doctest.h>

#include "loopex/error.hpp"
#include "loopex/corpus.hpp"
#include "loopex/family.hpp"
#include "loopex/qsl2.hpp"

using namespace loopex;

TEST_CASE("quantum integers") {
  CHECK(quantum_integer(1, 6) == RationalSeries::constant(SeriesParam::hbar, 6, Rational(1)));
  const auto q2 = quantum_integer(2, 4);
  CHECK(q2[0] == 2);
  CHECK(q2[1] == 0);
  CHECK(q2[2] == Rational(1, 4));
  CHECK(quantum_integer(3, 4)[0] == 3);
  CHECK(quantum_integer(3, 4)[2] == 1);  // [3] = 1 + 2 cosh(hbar)
}

TEST_CASE("R-matrix at alpha 1 is trivial") {
  const auto r = rmatrix_sl2(1, 4);
  REQUIRE(r.r.size() == 1);
  REQUIRE(r.r_inverse.size() == 1);
  const auto& entry = r.r.begin()->second;
  REQUIRE(entry.size() == 1);
  CHECK(entry[0].second == RationalSeries::constant(SeriesParam::hbar, 4, Rational(1)));
}

TEST_CASE("colored Jones normalization") {
  for (int alpha : {1, 2, 3, 5}) CHECK(colored_jones_series(parse_braid("s=1;"), alpha, 6).series == quantum_integer(alpha, 6));
  for (const auto& k : embedded_corpus()) {
    if (k.braid.strands > 3) continue;
    CHECK(colored_jones_series(k.braid, 1, 6).series == RationalSeries::constant(SeriesParam::hbar, 6, Rational(1)));
  }
  CHECK_THROWS_AS(colored_jones_series(parse_braid("1 1"), 2, 4), Error);
}

TEST_CASE("Kauffman oracle") {
  // Unknot: q^(1/2) + q^(-1/2) = a^2 + a^-2.
  CHECK(jones_kauffman_oracle(parse_braid("s=1;")) == parse_laurent("a^2 + a^-2", {Var::a}));
  const auto tre = parse_braid("1 1 1");
  CHECK(colored_jones_series(tre, 2, 8).series == quarter_power_series(jones_kauffman_oracle(tre), 8));
  const auto fig8 = parse_braid("1 -2 1 -2");
  CHECK(colored_jones_series(fig8, 2, 8).series == quarter_power_series(jones_kauffman_oracle(fig8), 8));
  CHECK(jones_kauffman_oracle(mirror(tre)) == invert_quarter_power(jones_kauffman_oracle(tre)));
}

TEST_CASE("skein identity on crossing-switch triples") {
  for (const auto& k : embedded_corpus()) {
    if (k.braid.letters.size() > 10) continue;
    for (std::size_t i = 0; i < k.braid.letters.size(); i += 3) {
      INFO(k.name << " letter " << i);
      CHECK(skein_residual(skein_triple(k.braid, i)).is_zero());
    }
  }
}

TEST_CASE("colored Jones invariance and mirror") {
  const auto tre = parse_braid("1 1 1");
  const auto j = colored_jones_series(tre, 3, 6).series;
  CHECK(colored_jones_series(stabilize(tre), 3, 6).series == j);
  CHECK(colored_jones_series(parse_braid("s=3; 1 1 1 -2"), 3, 6).series == j);
  CHECK(colored_jones_series(mirror(tre), 3, 6).series == j.negate_parameter());

  const auto fig8 = parse_braid("1 -2 1 -2");
  CHECK(colored_jones_series(parse_braid("-2 1 -2 1"), 3, 6).series == colored_jones_series(fig8, 3, 6).series);
}

TEST_CASE("colored Jones family agrees with direct contraction") {
  const std::size_t order = 8;
  for (const char* word : {"1 1 1", "1 -2 1 -2", "1 1 1 1 1"}) {
    INFO(word);
    const auto b = parse_braid(word);
    const auto fam = ColoredJonesFamily::fit(b, order);
    CHECK(fam.node_count() == order / 2 + 1);
    for (int alpha : {1, 3, 6, 8}) CHECK(fam.colored_jones(alpha) == colored_jones_series(b, alpha, order).series);
  }
}
