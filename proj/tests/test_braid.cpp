#include <doctest.h>

#include "loopex/error.hpp"
#include "loopex/braid.hpp"
#include "loopex/corpus.hpp"

using namespace loopex;

TEST_CASE("parse_braid examples") {
  const auto t = parse_braid("1 1 1");
  CHECK(t.strands == 2);
  CHECK(signed_letters(t) == std::vector<int>{1, 1, 1});
  const auto f = parse_braid("1 -2 1 -2");
  CHECK(f.strands == 3);
  CHECK(signed_letters(f) == std::vector<int>{1, -2, 1, -2});
  CHECK_THROWS_AS(parse_braid("s=2; 1 0 1"), Error);
  CHECK_THROWS_AS(parse_braid("s=2; 1 2"), Error);
  CHECK_THROWS_AS(parse_braid("1 x"), Error);
  CHECK(parse_braid(render_braid(f)) == f);
  CHECK(parse_braid("1,-2,1,-2") == f);
}

TEST_CASE("writhe, components and mirror") {
  CHECK(writhe(parse_braid("1 1 1")) == 3);
  CHECK(writhe(parse_braid("1 -2 1 -2")) == 0);
  CHECK(writhe(parse_braid("s=1;")) == 0);
  CHECK(closure_component_count(parse_braid("1 1 1")) == 1);
  CHECK(closure_component_count(parse_braid("1 1")) == 2);
  CHECK(closure_component_count(parse_braid("s=1;")) == 1);
  CHECK(closure_component_count(parse_braid("s=3; 1")) == 2);
  CHECK(mirror(parse_braid("1 1 1")) == parse_braid("-1 -1 -1"));
  CHECK(mirror(mirror(parse_braid("1 -2 1 -2"))) == parse_braid("1 -2 1 -2"));
  CHECK(writhe(inverse(parse_braid("1 1 -2"))) == -1);
  const auto s = stabilize(parse_braid("1 1 1"));
  CHECK(s.strands == 3);
  CHECK(signed_letters(s) == std::vector<int>{1, 1, 1, 2});
}

TEST_CASE("embedded corpus") {
  const auto& corpus = embedded_corpus();
  REQUIRE(corpus.size() == 14);
  CHECK(corpus.front().name == "3_1");
  for (const auto& k : corpus) {
    INFO(k.name);
    CHECK(closure_component_count(k.braid) == 1);
    CHECK(k.alexander_golden.max_exponent() == k.genus);
    CHECK(k.alexander_golden.sum_of_coefficients() == 1);
    for (const auto& e : k.theta12_fundamental) CHECK(in_fundamental_domain(e.m1, e.m2));
    CHECK(k.theta12_u.has_value() == (k.name != "6_2"));
  }
  CHECK(find_knot(corpus, "4_1").has_flag("paper-table-4_1-alexander-discrepancy"));
  CHECK(find_knot(corpus, "6_2").has_flag("paper-table2-6_2-missing"));
  CHECK(find_knot(corpus, "6_3").amphichiral);
  CHECK_THROWS_AS(find_knot(corpus, "9_99"), Error);
}

TEST_CASE("corpus schema errors") {
  CHECK_THROWS_AS(parse_corpus("{}"), Error);
  CHECK_THROWS_AS(parse_corpus("[{\"name\": \"x\"}]"), Error);
  CHECK_THROWS_AS(load_corpus_file("/nonexistent/corpus.json"), Error);
  const auto one = parse_corpus(R"([{"name": "3_1", "strands": 2, "braid": [1, 1, 1], "genus": 1,
    "alexander": [[0, -1], [1, 1]], "theta12_fundamental": [[2, 1, -1], [2, 0, 1]],
    "theta12_u": [[2, 0, 1], [1, 0, -2], [0, 1, -3], [0, 0, -6]], "ledger": []}])");
  REQUIRE(one.size() == 1);
  CHECK(one[0].alexander_golden == parse_laurent("t - 1 + t^-1", {Var::t}));
}
