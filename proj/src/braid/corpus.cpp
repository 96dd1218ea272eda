#include "loopex/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "loopex/error.hpp"

namespace loopex {

namespace detail {
std::string_view embedded_corpus_json();
std::string_view embedded_tables_json();
}  // namespace detail

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& who, const std::string& what) {
  throw Error(ErrorCode::schema, "corpus record " + who + ": " + what);
}

std::int64_t int_field(const json& j, const std::string& who, const char* what) {
  if (!j.is_number_integer()) schema_error(who, std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

const json& require(const json& rec, const char* key, const std::string& who) {
  if (!rec.contains(key)) schema_error(who, std::string("missing field ") + key);
  return rec.at(key);
}

KnotRecord parse_record(const json& rec, std::size_t index) {
  std::string who = "#" + std::to_string(index);
  if (!rec.is_object()) schema_error(who, "not an object");
  static const std::set<std::string> known{"name",  "strands",           "braid",     "genus", "alexander",
                                           "theta12_fundamental", "theta12_u", "ledger", "amphichiral"};
  for (const auto& [key, value] : rec.items()) {
    if (!known.count(key)) schema_error(who, "unknown field " + key);
  }
  KnotRecord r;
  const json& name = require(rec, "name", who);
  if (!name.is_string() || name.get<std::string>().empty()) schema_error(who, "name must be a nonempty string");
  r.name = name.get<std::string>();
  who = r.name;

  const auto strands = int_field(require(rec, "strands", who), who, "strands");
  const json& braid = require(rec, "braid", who);
  if (!braid.is_array()) schema_error(who, "braid must be an array");
  std::vector<int> letters;
  for (const auto& l : braid) letters.push_back(static_cast<int>(int_field(l, who, "braid letter")));
  try {
    r.braid = make_braid(static_cast<int>(strands), letters);
  } catch (const Error& e) {
    schema_error(who, e.what());
  }
  if (closure_component_count(r.braid) != 1) schema_error(who, "braid closure is not a knot");

  r.genus = static_cast<int>(int_field(require(rec, "genus", who), who, "genus"));
  if (r.genus < 0) schema_error(who, "negative genus");

  const json& alex = require(rec, "alexander", who);
  if (!alex.is_array() || alex.empty()) schema_error(who, "alexander must be a nonempty array");
  std::set<std::int64_t> seen_exp;
  for (const auto& pair : alex) {
    if (!pair.is_array() || pair.size() != 2) schema_error(who, "alexander entries are [exponent, coefficient]");
    const auto e = int_field(pair[0], who, "alexander exponent");
    const auto c = int_field(pair[1], who, "alexander coefficient");
    if (e < 0) schema_error(who, "alexander lists only non-negative exponents");
    if (!seen_exp.insert(e).second) schema_error(who, "repeated alexander exponent");
    r.alexander_golden.add_term({e, 0}, c);
    if (e > 0) r.alexander_golden.add_term({-e, 0}, c);
  }
  if (r.alexander_golden.sum_of_coefficients() != 1) schema_error(who, "alexander golden value at t=1 is not 1");

  const json& fund = require(rec, "theta12_fundamental", who);
  if (!fund.is_array()) schema_error(who, "theta12_fundamental must be an array");
  std::set<std::pair<std::int64_t, std::int64_t>> seen_pairs;
  for (const auto& e : fund) {
    if (!e.is_array() || e.size() != 3) schema_error(who, "theta12_fundamental entries are [m1, m2, c]");
    const auto m1 = int_field(e[0], who, "m1");
    const auto m2 = int_field(e[1], who, "m2");
    const auto c = int_field(e[2], who, "theta coefficient");
    if (!in_fundamental_domain(m1, m2)) {
      schema_error(who, "theta entry (" + std::to_string(m1) + "," + std::to_string(m2) + ") outside m1 >= 2 m2 >= 0");
    }
    if (!seen_pairs.insert({m1, m2}).second) schema_error(who, "repeated theta exponent pair");
    if (c == 0) schema_error(who, "zero theta coefficient");
    r.theta12_fundamental.push_back({m1, m2, Rational(c)});
  }

  if (rec.contains("theta12_u")) {
    const json& u = rec.at("theta12_u");
    if (!u.is_array()) schema_error(who, "theta12_u must be an array");
    LaurentPolynomial poly({Var::u1, Var::u2});
    for (const auto& e : u) {
      if (!e.is_array() || e.size() != 3) schema_error(who, "theta12_u entries are [a, b, c]");
      const auto a = int_field(e[0], who, "u1 exponent");
      const auto b = int_field(e[1], who, "u2 exponent");
      if (a < 0 || b < 0) schema_error(who, "negative u exponent");
      poly.add_term({a, b}, int_field(e[2], who, "u coefficient"));
    }
    r.theta12_u = std::move(poly);
  }

  const json& ledger = require(rec, "ledger", who);
  if (!ledger.is_array()) schema_error(who, "ledger must be an array");
  for (const auto& f : ledger) {
    if (!f.is_string()) schema_error(who, "ledger flags are strings");
    r.ledger.push_back(f.get<std::string>());
  }
  if (rec.contains("amphichiral")) {
    if (!rec.at("amphichiral").is_boolean()) schema_error(who, "amphichiral must be a boolean");
    r.amphichiral = rec.at("amphichiral").get<bool>();
  }
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

bool KnotRecord::has_flag(std::string_view flag) const {
  return std::find(ledger.begin(), ledger.end(), flag) != ledger.end();
}

bool in_fundamental_domain(std::int64_t m1, std::int64_t m2) { return m2 >= 0 && m1 >= 2 * m2; }

std::vector<KnotRecord> parse_corpus(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::schema, std::string("corpus is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw Error(ErrorCode::schema, "corpus must be a JSON array");
  std::vector<KnotRecord> out;
  std::set<std::string> names;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    out.push_back(parse_record(doc[i], i));
    if (!names.insert(out.back().name).second) throw Error(ErrorCode::schema, "duplicate knot " + out.back().name);
  }
  std::sort(out.begin(), out.end(), [](const KnotRecord& a, const KnotRecord& b) { return a.name < b.name; });
  return out;
}

std::vector<KnotRecord> load_corpus_file(const std::string& path) { return parse_corpus(read_file(path)); }

const std::vector<KnotRecord>& embedded_corpus() {
  static const std::vector<KnotRecord> corpus = parse_corpus(detail::embedded_corpus_json());
  return corpus;
}

std::vector<KnotRecord> load_corpus(const std::string& path) {
  if (path.empty()) return embedded_corpus();
  return load_corpus_file(path);
}

const KnotRecord& find_knot(const std::vector<KnotRecord>& corpus, std::string_view name) {
  for (const auto& r : corpus) {
    if (r.name == name) return r;
  }
  throw Error(ErrorCode::unknown_knot, "unknown knot '" + std::string(name) + "'");
}

const ReferenceTables::Row1* ReferenceTables::table1_row(std::string_view name) const {
  for (const auto& [k, row] : table1) {
    if (k == name) return &row;
  }
  return nullptr;
}

const ReferenceTables::Row2* ReferenceTables::table2_row(std::string_view name) const {
  for (const auto& [k, row] : table2) {
    if (k == name) return &row;
  }
  return nullptr;
}

std::optional<std::string> ReferenceTables::typo_token(std::string_view name) const {
  for (const auto& [k, tok] : typos) {
    if (k == name) return tok;
  }
  return std::nullopt;
}

const ReferenceTables& reference_tables() {
  static const ReferenceTables tables = [] {
    ReferenceTables t;
    const json doc = json::parse(detail::embedded_tables_json());
    for (const auto& [name, row] : doc.at("table1").at("rows").items()) {
      t.table1.push_back({name, {row.at(0).get<std::string>(), row.at(1).get<std::string>()}});
    }
    for (const auto& [name, row] : doc.at("table2").at("rows").items()) {
      t.table2.push_back({name, {row.at(0).get<std::string>(), row.at(1).get<std::string>()}});
    }
    for (const auto& [name, tok] : doc.at("table2").at("typos").items()) {
      t.typos.push_back({name, tok.get<std::string>()});
    }
    return t;
  }();
  return tables;
}

}  // namespace loopex
