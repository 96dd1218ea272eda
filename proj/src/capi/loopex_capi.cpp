#include "loopex/loopex.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "loopex/alexander.hpp"
#include "loopex/braid.hpp"
#include "loopex/commands.hpp"
#include "loopex/corpus.hpp"
#include "loopex/qsl2.hpp"

struct loopex_context {
  std::string last_error;
};

struct loopex_report {
  loopex::CommandResult result;
};

namespace {

loopex_status to_status(loopex::ErrorCode c) {
  using loopex::ErrorCode;
  switch (c) {
    case ErrorCode::invalid_argument: return LOOPEX_INVALID_ARGUMENT;
    case ErrorCode::parse_error: return LOOPEX_PARSE_ERROR;
    case ErrorCode::variable_mismatch: return LOOPEX_VARIABLE_MISMATCH;
    case ErrorCode::parameter_mismatch: return LOOPEX_PARAMETER_MISMATCH;
    case ErrorCode::precondition: return LOOPEX_PRECONDITION;
    case ErrorCode::not_exact: return LOOPEX_NOT_EXACT;
    case ErrorCode::overflow: return LOOPEX_OVERFLOW;
    case ErrorCode::schema: return LOOPEX_SCHEMA;
    case ErrorCode::unknown_knot: return LOOPEX_UNKNOWN_KNOT;
    case ErrorCode::io: return LOOPEX_IO;
    case ErrorCode::internal: return LOOPEX_INTERNAL;
  }
  return LOOPEX_INTERNAL;
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class F>
loopex_status guarded(loopex_context* ctx, F&& f) {
  if (!ctx) return LOOPEX_INVALID_ARGUMENT;
  ctx->last_error.clear();
  try {
    f();
    return LOOPEX_OK;
  } catch (const loopex::Error& e) {
    ctx->last_error = e.what();
    return to_status(e.code());
  } catch (const nlohmann::json::exception& e) {
    ctx->last_error = e.what();
    return LOOPEX_PARSE_ERROR;
  } catch (const std::bad_alloc&) {
    ctx->last_error = "out of memory";
    return LOOPEX_INTERNAL;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return LOOPEX_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw loopex::Error(loopex::ErrorCode::invalid_argument, what);
}

}  // namespace

extern "C" {

const char* loopex_version(void) { return loopex::kLibraryVersion; }

const char* loopex_status_name(loopex_status status) {
  switch (status) {
    case LOOPEX_OK: return "ok";
    case LOOPEX_INVALID_ARGUMENT: return "invalid_argument";
    case LOOPEX_PARSE_ERROR: return "parse_error";
    case LOOPEX_VARIABLE_MISMATCH: return "variable_mismatch";
    case LOOPEX_PARAMETER_MISMATCH: return "parameter_mismatch";
    case LOOPEX_PRECONDITION: return "precondition";
    case LOOPEX_NOT_EXACT: return "not_exact";
    case LOOPEX_OVERFLOW: return "overflow";
    case LOOPEX_SCHEMA: return "schema";
    case LOOPEX_UNKNOWN_KNOT: return "unknown_knot";
    case LOOPEX_IO: return "io";
    case LOOPEX_INTERNAL: return "internal";
  }
  return "unknown";
}

loopex_context* loopex_context_new(void) { return new (std::nothrow) loopex_context(); }

void loopex_context_free(loopex_context* ctx) { delete ctx; }

const char* loopex_last_error(const loopex_context* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

loopex_status loopex_load_corpus(loopex_context* ctx, const char* path, size_t* count) {
  return guarded(ctx, [&] {
    const auto records = loopex::load_corpus(path ? path : "");
    if (count) *count = records.size();
  });
}

loopex_status loopex_run_command(loopex_context* ctx, const char* config_json, loopex_report** out) {
  return guarded(ctx, [&] {
    require(config_json && out, "null argument");
    *out = nullptr;
    const auto config = loopex::config_from_json(loopex::Json::parse(config_json));
    auto* r = new loopex_report{loopex::run_command(config)};
    *out = r;
  });
}

int loopex_report_exit_status(const loopex_report* report) { return report ? report->result.exit_status : 2; }

loopex_status loopex_report_render(loopex_context* ctx, const loopex_report* report, const char* format, char** out) {
  return guarded(ctx, [&] {
    require(report && format && out, "null argument");
    *out = dup_string(loopex::render_report(report->result.report, loopex::parse_format(format)));
  });
}

loopex_status loopex_report_timing_json(loopex_context* ctx, const loopex_report* report, char** out) {
  return guarded(ctx, [&] {
    require(report && out, "null argument");
    *out = dup_string(report->result.timing.dump(2));
  });
}

void loopex_report_free(loopex_report* report) { delete report; }

loopex_status loopex_alexander(loopex_context* ctx, const char* braid, char** out) {
  return guarded(ctx, [&] {
    require(braid && out, "null argument");
    *out = dup_string(loopex::alexander_poly(loopex::parse_braid(braid)).canonical());
  });
}

loopex_status loopex_colored_jones(loopex_context* ctx, const char* braid, int alpha, size_t order, char** out) {
  return guarded(ctx, [&] {
    require(braid && out, "null argument");
    const auto s = loopex::colored_jones_series(loopex::parse_braid(braid), alpha, order);
    *out = dup_string(loopex::render_series(s.series));
  });
}

void loopex_string_free(char* s) { std::free(s); }

}  // extern "C"
