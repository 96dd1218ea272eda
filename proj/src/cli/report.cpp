#include <sstream>

#include "loopex/commands.hpp"

namespace loopex {

namespace {

std::string str(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

std::string pretty_of(const Json& j) { return j.is_object() && j.contains("pretty") ? str(j["pretty"]) : str(j); }

void flatten(const Json& j, const std::string& prefix, std::ostringstream& os) {
  if (j.is_object() && !(j.contains("pretty") && j.contains("canonical"))) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, os);
  } else if (j.is_array() && !j.empty() && j.front().is_object()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", os);
  } else {
    os << "  " << prefix << ": " << pretty_of(j) << "\n";
  }
}

std::string loop_poly(const Json& levels, int loop) {
  for (const auto& l : levels)
    if (l["loop"] == loop) return pretty_of(l["P"]);
  return "-";
}

bool all_pass(const Json& arr) {
  for (const auto& e : arr)
    if (!e["pass"].get<bool>()) return false;
  return true;
}

std::string render_tsv(const Json& r) {
  std::ostringstream os;
  const std::string cmd = r["command"];
  if (cmd == "invariants") {
    os << "knot\tbraid\talexander\talexander_u\tjones_oracle\tcolored_jones_2\tcolored_jones_3\tsl3_fundamental\n";
    for (const auto& k : r["knots"]) {
      os << str(k["knot"]) << '\t' << str(k["braid"]) << '\t' << pretty_of(k["alexander"]) << '\t'
         << pretty_of(k["alexander_u"]) << '\t' << pretty_of(k["jones_oracle"]["value"]) << '\t'
         << str(k["colored_jones"][0]["series"]) << '\t' << str(k["colored_jones"][1]["series"]) << '\t'
         << str(k["sl3_fundamental"]) << "\n";
    }
  } else if (cmd == "extract") {
    os << "knot\tP1\tP2_hbar\tP2_h\tmmr_diagonal\tresubstitution\tloop_failure\n";
    for (const auto& k : r["knots"]) {
      os << str(k["knot"]) << '\t' << loop_poly(k["hbar_basis"], 1) << '\t' << loop_poly(k["hbar_basis"], 2) << '\t'
         << loop_poly(k["h_basis"], 2) << '\t' << (k["mmr_diagonal"]["pass"].get<bool>() ? "pass" : "fail") << '\t'
         << (all_pass(k["resubstitution"]) ? "pass" : "fail") << '\t'
         << (k.contains("loop_failure") ? str(k["loop_failure"]["message"]) : "-") << "\n";
    }
  } else if (cmd == "verify") {
    os << "knot\tcheck\ttag\tstatus\tdetail\n";
    auto row = [&](const std::string& knot, const Json& c) {
      os << knot << '\t' << str(c["check"]) << '\t' << str(c["tag"]) << '\t' << str(c["status"]) << '\t'
         << (c.contains("detail") ? str(c["detail"]) : "") << "\n";
    };
    for (const auto& k : r["knots"])
      for (const auto& c : k["checks"]) row(str(k["knot"]), c);
    for (const auto& c : r["global"]) row("*", c);
  } else if (cmd == "tables") {
    os << "table\tknot\tcolumn1\tcolumn2\n";
    for (const auto& k : r["table1"])
      os << "1\t" << str(k["knot"]) << '\t' << str(k["alexander"]) << '\t' << str(k["theta12_fundamental"]) << "\n";
    for (const auto& k : r["table2"])
      os << "2\t" << str(k["knot"]) << '\t' << str(k["alexander_u"]) << '\t' << str(k["theta12_u"]) << "\n";
  }
  return os.str();
}

std::string render_text(const Json& r) {
  std::ostringstream os;
  const std::string cmd = r["command"];
  if (cmd == "verify") {
    for (const auto& k : r["knots"]) {
      os << str(k["knot"]) << "\n";
      for (const auto& c : k["checks"]) {
        os << "  " << str(c["status"]) << "  " << str(c["check"]);
        if (c.contains("detail")) os << "  (" << str(c["detail"]) << ")";
        os << "\n";
      }
    }
    os << "global\n";
    for (const auto& c : r["global"]) {
      os << "  " << str(c["status"]) << "  " << str(c["check"]);
      if (c.contains("detail")) os << "  (" << str(c["detail"]) << ")";
      os << "\n";
    }
    const auto& s = r["summary"];
    os << s["checks"] << " checks, " << s["failures"] << " failed, " << s["ledger"] << " ledger, " << s["skipped"]
       << " skipped\n";
    return os.str();
  }
  if (cmd == "tables") {
    os << "Table 1\n";
    for (const auto& k : r["table1"])
      os << "  " << str(k["knot"]) << "  " << str(k["alexander"]) << "  |  " << str(k["theta12_fundamental"]) << "\n";
    os << "Table 2\n";
    for (const auto& k : r["table2"])
      os << "  " << str(k["knot"]) << "  " << str(k["alexander_u"]) << "  |  " << str(k["theta12_u"]) << "\n";
    return os.str();
  }
  for (const auto& k : r["knots"]) {
    os << str(k["knot"]) << "\n";
    for (const auto& [key, v] : k.items()) {
      if (key != "knot") flatten(v, key, os);
    }
  }
  return os.str();
}

}  // namespace

std::string render_report(const Json& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: return report.dump(2) + "\n";
    case OutputFormat::tsv: return render_tsv(report);
    case OutputFormat::text: return render_text(report);
  }
  return report.dump(2) + "\n";
}

}  // namespace loopex
