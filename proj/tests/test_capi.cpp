#include <doctest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include "loopex/loopex.h"

namespace {

struct Context {
  loopex_context* ctx = loopex_context_new();
  ~Context() { loopex_context_free(ctx); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  loopex_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::strlen(loopex_version()) > 0);
  CHECK(std::string(loopex_status_name(LOOPEX_OK)) == "ok");
  CHECK(std::string(loopex_status_name(LOOPEX_UNKNOWN_KNOT)) == "unknown_knot");
}

TEST_CASE("corpus loading") {
  Context c;
  size_t n = 0;
  CHECK(loopex_load_corpus(c.ctx, nullptr, &n) == LOOPEX_OK);
  CHECK(n == 14);
  CHECK(loopex_load_corpus(c.ctx, "/nonexistent.json", &n) == LOOPEX_IO);
  CHECK(std::strlen(loopex_last_error(c.ctx)) > 0);
}

TEST_CASE("direct invariants") {
  Context c;
  char* out = nullptr;
  REQUIRE(loopex_alexander(c.ctx, "1 1 1", &out) == LOOPEX_OK);
  CHECK(take(out) == "1/1*t^1 + -1/1 + 1/1*t^-1");
  CHECK(loopex_alexander(c.ctx, "s=2; 1 0", &out) == LOOPEX_PARSE_ERROR);
  CHECK(loopex_alexander(c.ctx, nullptr, &out) == LOOPEX_INVALID_ARGUMENT);
  REQUIRE(loopex_colored_jones(c.ctx, "s=1;", 2, 2, &out) == LOOPEX_OK);
  CHECK(take(out).rfind("2/1", 0) == 0);
  CHECK(loopex_colored_jones(c.ctx, "1 1", 2, 2, &out) == LOOPEX_PRECONDITION);
  CHECK(loopex_alexander(nullptr, "1", &out) == LOOPEX_INVALID_ARGUMENT);
}

TEST_CASE("commands through the C API") {
  Context c;
  loopex_report* report = nullptr;
  CHECK(loopex_run_command(c.ctx, "{not json", &report) == LOOPEX_PARSE_ERROR);
  CHECK(report == nullptr);
  CHECK(loopex_run_command(c.ctx, R"({"command": "invariants", "knots": ["9_99"]})", &report) ==
        LOOPEX_UNKNOWN_KNOT);
  CHECK(std::string(loopex_last_error(c.ctx)).find("9_99") != std::string::npos);
  CHECK(loopex_run_command(c.ctx, R"({"command": "tables", "extra": 1})", &report) == LOOPEX_INVALID_ARGUMENT);

  REQUIRE(loopex_run_command(c.ctx, R"({"command": "tables"})", &report) == LOOPEX_OK);
  CHECK(loopex_report_exit_status(report) == 0);
  char* out = nullptr;
  REQUIRE(loopex_report_render(c.ctx, report, "json", &out) == LOOPEX_OK);
  const auto j = nlohmann::json::parse(take(out));
  CHECK(j["table1"].size() == 14);
  CHECK(loopex_report_render(c.ctx, report, "yaml", &out) == LOOPEX_INVALID_ARGUMENT);
  REQUIRE(loopex_report_timing_json(c.ctx, report, &out) == LOOPEX_OK);
  CHECK(nlohmann::json::parse(take(out)).contains("total_seconds"));
  loopex_report_free(report);
  loopex_report_free(nullptr);
}
