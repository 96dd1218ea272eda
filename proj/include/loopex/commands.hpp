#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "loopex/corpus.hpp"
#include "loopex/loopexpand.hpp"

namespace loopex {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "loopex/1";
inline constexpr const char* kLibraryVersion = "1.0.0";

enum class OutputFormat { json, tsv, text };

struct RunConfig {
  std::string command;               // invariants | extract | verify | tables
  std::vector<std::string> knots;    // empty or {"all"} selects every record
  std::string corpus_path;           // empty: embedded corpus
  std::size_t order = 14;
  std::optional<int> colors;         // default 2N + 4
  int loops = 2;
  OutputFormat format = OutputFormat::json;
  unsigned jobs = 1;
  bool use_cache = true;
  std::string cache_dir;             // empty: caching off
  bool allow_few_colors = false;
  ColorSource source = ColorSource::family;

  int effective_colors() const;
};

// Keys: command, knots (array or "all"), corpus, order, colors, loops,
// format, jobs, no_cache, cache_dir, allow_few_colors, source.
RunConfig config_from_json(const Json& j);
Json config_to_json(const RunConfig& c);
OutputFormat parse_format(const std::string& name);
const char* format_name(OutputFormat f);

struct CommandResult {
  Json report;  // deterministic
  Json timing;  // wall-clock data, kept apart from the report
  int exit_status = 0;
};

CommandResult run_command(const RunConfig& config);

CommandResult cmd_invariants(const RunConfig& config, const std::vector<KnotRecord>& corpus);
CommandResult cmd_extract(const RunConfig& config, const std::vector<KnotRecord>& corpus);
CommandResult cmd_verify(const RunConfig& config, const std::vector<KnotRecord>& corpus);
CommandResult cmd_tables(const RunConfig& config, const std::vector<KnotRecord>& corpus);

// Records selected by name, sorted by name; throws Error(unknown_knot).
std::vector<KnotRecord> select_knots(const std::vector<KnotRecord>& corpus, const std::vector<std::string>& names);

struct ExtractionSettings {
  std::size_t order = 14;
  int colors = 32;
  int loops = 2;
  bool allow_few_colors = false;
  ColorSource source = ColorSource::family;
  unsigned jobs = 1;
};

// Per-knot extraction report: array meta, MMR diagonal, P_l in both bases,
// resubstitution at alpha = 2, 3, 4.
Json extract_knot(const std::string& name, const BraidWord& braid, const LaurentPolynomial& delta, int genus,
                  const ExtractionSettings& settings);

// Canonical P_1 from an extraction report, zero if absent.
LaurentPolynomial p1_from_report(const Json& extraction);

// Render a report as json, tsv or text.
std::string render_report(const Json& report, OutputFormat format);

// Extraction results on disk, keyed by knot, braid, order, colors, loop
// depth, color source and library version. One file per key.
class ResultCache {
 public:
  explicit ResultCache(std::string dir);
  bool enabled() const { return !dir_.empty(); }
  std::optional<Json> load(const std::string& key) const;
  void store(const std::string& key, const Json& value) const;
  static std::string make_key(const std::string& knot, const BraidWord& braid, const ExtractionSettings& s);

 private:
  std::string path_for(const std::string& key) const;
  std::string dir_;
};

// LOOPEX_CACHE_DIR or empty.
std::string default_cache_dir();

}  // namespace loopex
