#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "loopex/commands.hpp"
#include "loopex/error.hpp"

namespace loopex {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

std::string default_cache_dir() {
  const char* env = std::getenv("LOOPEX_CACHE_DIR");
  return env ? std::string(env) : std::string();
}

ResultCache::ResultCache(std::string dir) : dir_(std::move(dir)) {}

std::string ResultCache::make_key(const std::string& knot, const BraidWord& braid, const ExtractionSettings& s) {
  std::ostringstream os;
  os << "v=" << kLibraryVersion << "|knot=" << knot << "|braid=" << render_braid(braid) << "|N=" << s.order
     << "|A=" << s.colors << "|loops=" << s.loops << "|source=" << (s.source == ColorSource::family ? "family" : "direct")
     << "|few=" << s.allow_few_colors;
  return os.str();
}

std::string ResultCache::path_for(const std::string& key) const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(key)));
  return (std::filesystem::path(dir_) / (std::string("extract-") + buf + ".json")).string();
}

std::optional<Json> ResultCache::load(const std::string& key) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  try {
    Json j = Json::parse(in);
    if (j.value("key", "") != key) return std::nullopt;
    return j.at("value");
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;  // unreadable entries are recomputed
  }
}

void ResultCache::store(const std::string& key, const Json& value) const {
  if (!enabled()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  const std::string target = path_for(key);
  std::ostringstream tid;
  tid << std::this_thread::get_id();
  const std::string tmp = target + ".tmp" + tid.str();
  {
    std::ofstream out(tmp);
    if (!out) throw Error(ErrorCode::io, "cannot write cache file " + tmp);
    out << Json{{"key", key}, {"value", value}}.dump(1) << "\n";
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) throw Error(ErrorCode::io, "cannot move cache file into place: " + ec.message());
}

}  // namespace loopex
