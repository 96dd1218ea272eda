#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <sstream>

#include "loopex/error.hpp"
#include "loopex/commands.hpp"
#include "loopex/corpus.hpp"

using namespace loopex;

namespace {

RunConfig config(const std::string& command, std::vector<std::string> knots) {
  RunConfig c;
  c.command = command;
  c.knots = std::move(knots);
  return c;
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

std::filesystem::path temp_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("config parsing") {
  const auto c = config_from_json(Json::parse(R"({"command": "extract", "knots": ["3_1"], "order": 10})"));
  CHECK(c.command == "extract");
  CHECK(c.order == 10);
  CHECK(c.effective_colors() == 24);
  CHECK_THROWS_AS(config_from_json(Json::parse(R"({"command": "extract", "bogus": 1})")), Error);
  CHECK_THROWS_AS(config_from_json(Json::parse(R"({"command": "dance"})")), Error);
  CHECK_THROWS_AS(config_from_json(Json::parse(R"({"command": "extract", "source": "magic"})")), Error);
  CHECK(parse_format("tsv") == OutputFormat::tsv);
  CHECK_THROWS_AS(parse_format("xml"), Error);
}

TEST_CASE("knot selection") {
  const auto& corpus = embedded_corpus();
  CHECK(select_knots(corpus, {}).size() == 14);
  CHECK(select_knots(corpus, {"all"}).size() == 14);
  const auto two = select_knots(corpus, {"7_7", "3_1", "3_1"});
  REQUIRE(two.size() == 2);
  CHECK(two[0].name == "3_1");
  try {
    select_knots(corpus, {"9_99"});
    FAIL("expected unknown knot");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::unknown_knot);
  }
}

TEST_CASE("invariants command") {
  auto c = config("invariants", {"3_1"});
  c.order = 4;
  const auto r = run_command(c);
  CHECK(r.exit_status == 0);
  CHECK(r.report["schema"] == kReportSchema);
  CHECK(r.report["knots"][0]["alexander"]["pretty"] == "t - 1 + t^-1");
  const auto text = render_report(r.report, OutputFormat::text);
  CHECK(text.find("alexander: t - 1 + t^-1") != std::string::npos);

  auto all = config("invariants", {"all"});
  all.order = 2;
  CHECK(count_lines(render_report(run_command(all).report, OutputFormat::tsv)) == 15);
}

TEST_CASE("tables command") {
  const auto r = run_command(config("tables", {}));
  CHECK(r.report["table1"].size() == 14);
  CHECK(r.report["table2"].size() == 14);
  CHECK(r.report["table1"][0]["theta12_fundamental"] == "-t1^2 t2 + t1^2");
  for (const auto& row : r.report["table2"]) {
    if (row["knot"] == "7_2") CHECK(row["theta12_u"] == "36u1^2 - 130u1u2 - 36u1 - 300");
    if (row["knot"] == "6_2") CHECK(row.contains("note"));
  }
  // Identical configuration, identical bytes.
  for (auto f : {OutputFormat::json, OutputFormat::tsv, OutputFormat::text})
    CHECK(render_report(run_command(config("tables", {})).report, f) == render_report(r.report, f));
}

TEST_CASE("extract command on small orders") {
  auto c = config("extract", {"4_1", "3_1"});
  c.order = 8;
  c.use_cache = false;
  const auto r = run_command(c);
  CHECK(r.exit_status == 0);
  REQUIRE(r.report["knots"].size() == 2);
  const auto& tre = r.report["knots"][0];
  CHECK(tre["knot"] == "3_1");
  CHECK(tre["colors"] == 20);
  CHECK(tre["mmr_diagonal"]["pass"] == true);
  CHECK(p1_from_report(tre) == parse_laurent("t^2 - 2t + 2 - 2t^-1 + t^-2", {Var::t}));
  CHECK(p1_from_report(r.report["knots"][1]).is_zero());
  CHECK(r.timing.contains("total_seconds"));
  CHECK_FALSE(r.report.contains("timing"));
  CHECK(render_report(run_command(c).report, OutputFormat::json) == render_report(r.report, OutputFormat::json));

  auto few = c;
  few.colors = 18;
  CHECK_THROWS_AS(run_command(few), Error);
  few.allow_few_colors = true;
  few.knots = {"3_1"};
  CHECK(run_command(few).report["knots"][0]["colors_overridden"] == true);
}

TEST_CASE("result cache") {
  const auto dir = temp_dir("loopex-cache-test");
  ResultCache cache(dir.string());
  CHECK(cache.enabled());
  CHECK_FALSE(ResultCache("").enabled());
  ExtractionSettings s;
  s.order = 6;
  s.colors = 16;
  const auto b = parse_braid("1 1 1");
  const auto key = ResultCache::make_key("3_1", b, s);
  auto s2 = s;
  s2.order = 8;
  CHECK(key != ResultCache::make_key("3_1", b, s2));
  CHECK(key != ResultCache::make_key("3_1", mirror(b), s));
  CHECK_FALSE(cache.load(key).has_value());
  const Json value{{"x", 1}};
  cache.store(key, value);
  cache.store(key, value);
  REQUIRE(cache.load(key).has_value());
  CHECK(*cache.load(key) == value);

  auto c = config("extract", {"3_1"});
  c.order = 6;
  c.cache_dir = (dir / "run").string();
  const auto first = run_command(c);
  const auto second = run_command(c);
  CHECK(render_report(first.report, OutputFormat::json) == render_report(second.report, OutputFormat::json));
  CHECK(std::distance(std::filesystem::directory_iterator(dir / "run"), std::filesystem::directory_iterator()) == 1);
  std::filesystem::remove_all(dir);
}

TEST_CASE("verify command on the amphichiral knot") {
  auto c = config("verify", {"6_3"});
  c.order = 8;
  c.use_cache = false;
  const auto r = run_command(c);
  const auto& checks = r.report["knots"][0]["checks"];
  bool amphichiral = false;
  for (const auto& ch : checks) {
    if (ch["check"] == "amphichiral_zero") amphichiral = ch["status"] == "pass";
    CHECK(ch.contains("tag"));
  }
  CHECK(amphichiral);
  CHECK(r.report["summary"]["checks"].get<int>() > 20);
  const auto tsv = render_report(r.report, OutputFormat::tsv);
  CHECK(tsv.rfind("knot\tcheck\ttag\tstatus\tdetail\n", 0) == 0);
}
