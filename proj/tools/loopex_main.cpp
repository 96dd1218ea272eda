// Command-line front end. Talks to the library only through loopex.h.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "loopex/loopex.h"

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::vector<std::string> knots;
  std::string corpus;
  std::size_t order = 14;
  std::optional<int> colors;
  int loops = 2;
  std::string format = "json";
  std::string out;
  unsigned jobs = 1;
  bool no_cache = false;
  bool allow_few_colors = false;
  std::string source = "family";
  std::string timing;
};

int fail(const std::string& code, const std::string& message) {
  Json err{{"error", {{"code", code}, {"message", message}}}};
  std::cerr << err.dump() << "\n";
  return 2;
}

bool write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return static_cast<bool>(std::cout);
  }
  std::ofstream f(path, std::ios::binary);
  f << text;
  return static_cast<bool>(f);
}

Json build_config(const std::string& command, const Options& o) {
  Json c{{"command", command}};
  std::vector<std::string> knots;
  for (const auto& k : o.knots) {
    std::size_t start = 0;
    while (start <= k.size()) {
      const auto comma = k.find(',', start);
      const auto piece = k.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (!piece.empty()) knots.push_back(piece);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  c["knots"] = knots.empty() ? std::vector<std::string>{"all"} : knots;
  if (!o.corpus.empty()) c["corpus"] = o.corpus;
  c["order"] = o.order;
  if (o.colors) c["colors"] = *o.colors;
  c["loops"] = o.loops;
  c["format"] = o.format;
  c["jobs"] = o.jobs;
  c["no_cache"] = o.no_cache;
  if (const char* dir = std::getenv("LOOPEX_CACHE_DIR")) c["cache_dir"] = dir;
  c["allow_few_colors"] = o.allow_few_colors;
  c["source"] = o.source;
  return c;
}

struct ContextDeleter {
  void operator()(loopex_context* c) const { loopex_context_free(c); }
};
struct ReportDeleter {
  void operator()(loopex_report* r) const { loopex_report_free(r); }
};

int run(const std::string& command, const Options& o) {
  std::unique_ptr<loopex_context, ContextDeleter> ctx(loopex_context_new());
  if (!ctx) return fail("internal", "cannot allocate context");
  const std::string config = build_config(command, o).dump();

  loopex_report* raw = nullptr;
  loopex_status st = loopex_run_command(ctx.get(), config.c_str(), &raw);
  if (st != LOOPEX_OK) return fail(loopex_status_name(st), loopex_last_error(ctx.get()));
  std::unique_ptr<loopex_report, ReportDeleter> report(raw);

  char* text = nullptr;
  st = loopex_report_render(ctx.get(), report.get(), o.format.c_str(), &text);
  if (st != LOOPEX_OK) return fail(loopex_status_name(st), loopex_last_error(ctx.get()));
  const std::string rendered(text);
  loopex_string_free(text);
  if (!write_text(o.out, rendered)) return fail("io", "cannot write " + o.out);

  if (!o.timing.empty()) {
    char* timing = nullptr;
    st = loopex_report_timing_json(ctx.get(), report.get(), &timing);
    if (st != LOOPEX_OK) return fail(loopex_status_name(st), loopex_last_error(ctx.get()));
    const std::string t = std::string(timing) + "\n";
    loopex_string_free(timing);
    if (o.timing == "-") {
      std::cerr << t;
    } else if (!write_text(o.timing, t)) {
      return fail("io", "cannot write " + o.timing);
    }
  }
  return loopex_report_exit_status(report.get());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knot invariants and loop expansion of colored quantum invariants"};
  app.set_version_flag("--version", std::string(loopex_version()));
  app.require_subcommand(1);

  Options o;
  auto add_common = [&](CLI::App* sub, bool extraction) {
    sub->add_option("--knot", o.knots, "Knot names (repeatable or comma separated), or 'all'");
    sub->add_option("--corpus", o.corpus, "Corpus JSON file (default: embedded)");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "tsv", "text"}));
    sub->add_option("--out", o.out, "Write the report to a file instead of stdout");
    sub->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--timing", o.timing, "Write timing JSON to a file ('-' for stderr)");
    sub->add_option("--order", o.order, "Truncation order N in hbar")->check(CLI::Range(2, 40));
    if (!extraction) return;
    sub->add_option("--colors", o.colors, "Number of colors A (default 2N + 4)");
    sub->add_option("--loops", o.loops, "Loop depth")->check(CLI::Range(1, 2));
    sub->add_flag("--no-cache", o.no_cache, "Ignore and do not write the result cache");
    sub->add_flag("--allow-few-colors", o.allow_few_colors, "Permit A below 2N + 4");
    sub->add_option("--source", o.source, "Colored Jones backend")->check(CLI::IsMember({"family", "direct"}));
  };

  auto* inv = app.add_subcommand("invariants", "Alexander, Jones and colored series per knot");
  auto* ext = app.add_subcommand("extract", "Loop expansion extraction per knot");
  auto* ver = app.add_subcommand("verify", "Run every consistency check");
  auto* tab = app.add_subcommand("tables", "Reproduce the reference tables");
  add_common(inv, false);
  add_common(ext, true);
  add_common(ver, true);
  add_common(tab, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("invalid_argument", e.what());
  }

  for (auto* sub : {inv, ext, ver, tab})
    if (sub->parsed()) return run(sub->get_name(), o);
  return fail("invalid_argument", "no subcommand");
}
