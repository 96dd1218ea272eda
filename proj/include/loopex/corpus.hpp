#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "loopex/braid.hpp"
#include "loopex/laurent.hpp"

namespace loopex {

struct FundamentalEntry {
  std::int64_t m1;
  std::int64_t m2;
  Rational coefficient;
};

struct KnotRecord {
  std::string name;
  BraidWord braid;
  int genus = 0;
  LaurentPolynomial alexander_golden{{Var::t}};
  std::vector<FundamentalEntry> theta12_fundamental;
  // Product basis u1^a u2^b; absent when the printed u-table has no row.
  std::optional<LaurentPolynomial> theta12_u;
  std::vector<std::string> ledger;
  bool amphichiral = false;

  bool has_flag(std::string_view flag) const;
};

// Throws Error(schema) on any violation, naming the record.
std::vector<KnotRecord> parse_corpus(std::string_view json_text);
std::vector<KnotRecord> load_corpus_file(const std::string& path);
const std::vector<KnotRecord>& embedded_corpus();
// Empty path selects the embedded corpus.
std::vector<KnotRecord> load_corpus(const std::string& path);

const KnotRecord& find_knot(const std::vector<KnotRecord>& corpus, std::string_view name);

bool in_fundamental_domain(std::int64_t m1, std::int64_t m2);

// Printed appendix tables, verbatim strings keyed by knot name.
struct ReferenceTables {
  struct Row1 {
    std::string alexander_half;
    std::string theta12_fundamental;
  };
  struct Row2 {
    std::string alexander_u;
    std::string theta12_u_printed;
  };
  std::vector<std::pair<std::string, Row1>> table1;
  std::vector<std::pair<std::string, Row2>> table2;
  std::vector<std::pair<std::string, std::string>> typos;  // knot -> suspicious token
  const Row2* table2_row(std::string_view name) const;
  const Row1* table1_row(std::string_view name) const;
  std::optional<std::string> typo_token(std::string_view name) const;
};

const ReferenceTables& reference_tables();

}  // namespace loopex
