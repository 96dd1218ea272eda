// End-to-end acceptance run: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "loopex/alexander.hpp"
#include "loopex/corpus.hpp"
#include "loopex/loopexpand.hpp"
#include "loopex/qsl2.hpp"
#include "loopex/qsl3fund.hpp"
#include "loopex/twoloop.hpp"

using namespace loopex;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double budget_seconds, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (secs > budget_seconds) {
    o.pass = false;
    o.detail += "; over budget of " + std::to_string(budget_seconds) + " s";
  }
  failures += !o.pass;
  std::printf("criterion %2d %s  %s: %s (%.2f s)\n", id, o.pass ? "PASS" : "FAIL", title, o.detail.c_str(), secs);
  std::fflush(stdout);
}

LaurentPolynomial symmetric_completion(const LaurentPolynomial& half) {
  LaurentPolynomial out({Var::t});
  for (const auto& [e, c] : half.terms()) {
    out.add_term({e[0], 0}, c);
    if (e[0] != 0) out.add_term({-e[0], 0}, c);
  }
  return out;
}

std::string strip_underscores(std::string s) {
  std::erase(s, '_');
  return s;
}

struct Extraction {
  LaurentPolynomial delta;
  MMArray multiplied;
  ExtractionResult result;
  double seconds = 0;
};

Extraction extract(const BraidWord& b, const LaurentPolynomial& delta, int genus, std::size_t order, int colors) {
  const auto t0 = Clock::now();
  Extraction x;
  x.delta = delta;
  const auto sweep = color_sweep(b, colors, order);
  x.multiplied = mm_array(sweep, delta, true);
  x.result = extract_loop_polys(x.multiplied, delta, 2, 2 * genus);
  x.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return x;
}

bool p1_ok(const Extraction& x) {
  return !x.result.loops.levels.empty() && x.result.loops.levels[0].loop == 1 && x.result.loops.levels[0].residual == 0;
}

}  // namespace

int main() {
  const auto& corpus = embedded_corpus();
  const auto& tables = reference_tables();

  criterion(1, "Alexander golden", 1.0, [&] {
    int matched = 0;
    std::string bad;
    bool fig8 = false;
    for (const auto& k : corpus) {
      const auto d = alexander_poly(k.braid);
      const auto* row = tables.table1_row(k.name);
      if (!row) return Outcome{false, "no printed row for " + k.name};
      const auto printed = symmetric_completion(parse_laurent(strip_underscores(row->alexander_half), {Var::t}));
      if (k.name == "4_1") {
        fig8 = d == parse_laurent("-t + 3 - t^-1", {Var::t}) && !(printed == d) &&
               k.has_flag("paper-table-4_1-alexander-discrepancy");
      } else if (printed == d) {
        ++matched;
      } else {
        bad += " " + k.name;
      }
    }
    std::ostringstream os;
    os << matched << "/13 match the printed table" << (bad.empty() ? "" : ", mismatched:" + bad)
       << "; 4_1 = -t + 3 - t^-1 with discrepancy flag " << (fig8 ? "present" : "MISSING");
    return Outcome{matched == 13 && fig8, os.str()};
  });

  criterion(2, "cross-table consistency", 1.0, [&] {
    int passed = 0;
    bool skipped_62 = false, forced = true;
    std::string notes;
    for (const auto& k : corpus) {
      const auto r = cross_table_check(k, tables);
      if (k.name == "6_2") {
        skipped_62 = r.status == "skipped";
        continue;
      }
      passed += r.status == "pass";
      if (r.typo_token) {
        forced = forced && r.candidates_fitting == 1;
        notes += " " + k.name + ":" + *r.typo_token + "->" + r.resolved_term.value_or("?");
      }
    }
    std::ostringstream os;
    os << passed << "/13 rows agree; typo resolutions" << notes << (forced ? " (each unique)" : " (NOT unique)")
       << "; 6_2 " << (skipped_62 ? "skipped" : "NOT skipped");
    return Outcome{passed == 13 && forced && skipped_62, os.str()};
  });

  criterion(3, "structural suite", 1.0, [&] {
    int checks = 0, failed = 0;
    std::string bad;
    bool amphichiral = true;
    for (const auto& k : corpus) {
      for (const auto& c : structural_checks(k)) {
        ++checks;
        if (c.status == "fail") {
          ++failed;
          bad += " " + k.name + "/" + c.name;
        }
        if (c.name == "amphichiral_zero" && (k.name == "4_1" || k.name == "6_3")) amphichiral = amphichiral && c.status == "pass";
      }
    }
    std::ostringstream os;
    os << checks << " checks over 14 knots, " << failed << " failed" << bad << "; p_theta(4_1) = p_theta(6_3) = 0 "
       << (amphichiral ? "holds" : "FAILS");
    return Outcome{failed == 0 && amphichiral, os.str()};
  });

  criterion(4, "transform round trip", 60.0, [&] {
    int corpus_ok = 0, diag_ok = 0, random_ok = 0;
    for (const auto& k : corpus) {
      const auto z = ztheta(k);
      const auto f = f1_from_ztheta(z);
      corpus_ok += ztheta_from_f1(f) == z;
      diag_ok += at_second_one(f).numerator == at_second_one(z).numerator * k.alexander_golden.pow(2) * Rational(36);
    }
    std::mt19937_64 rng(20240611);
    for (int i = 0; i < 50; ++i) {
      const auto z = random_symmetric_instance(rng);
      random_ok += ztheta_from_f1(f1_from_ztheta(z)) == z;
    }
    std::ostringstream os;
    os << "round trip " << corpus_ok << "/14 corpus, " << random_ok << "/50 random; F(t,1) = 36 z(t,1) " << diag_ok
       << "/14";
    return Outcome{corpus_ok == 14 && random_ok == 50 && diag_ok == 14, os.str()};
  });

  criterion(5, "MMR diagonal (N = 10, A = 24, order x^8)", 1800.0, [&] {
    int passed = 0;
    std::string bad;
    for (const auto& k : corpus) {
      const auto sweep = color_sweep(k.braid, 24, 10);
      const auto mm = mm_array(sweep, k.alexander_golden, false);
      const auto r = mmr_diagonal_check(mm, k.alexander_golden, 8);
      if (r.pass) {
        ++passed;
      } else {
        bad += " " + k.name;
      }
    }
    return Outcome{passed == 14, std::to_string(passed) + "/14 knots" + (bad.empty() ? "" : ", failed:" + bad)};
  });

  // Criteria 6, 7 and 9 share the N = 14, A = 32 extractions.
  std::map<std::string, Extraction> ext, mir;
  double slowest = 0, total = 0;
  criterion(6, "loop extraction and reduction identity (N = 14, A = 32)", 1800.0, [&] {
    int zero_residual = 0;
    std::map<std::string, LaurentPolynomial> p1;
    for (const auto& k : corpus) {
      auto x = extract(k.braid, k.alexander_golden, k.genus, 14, 32);
      slowest = std::max(slowest, x.seconds);
      total += x.seconds;
      if (p1_ok(x)) {
        ++zero_residual;
        p1[k.name] = x.result.loops.P(1);
      }
      ext.emplace(k.name, std::move(x));
    }
    if (!p1.count("3_1")) return Outcome{false, "no P_1 for the calibration knot"};
    const auto red = sl2_reduction_check(corpus, p1);
    int fits = 0;
    for (const auto& [name, ok] : red.fits) fits += ok && name != "3_1";
    std::ostringstream os;
    os << "P_1 with zero residual " << zero_residual << "/14; c = "
       << (red.constant ? to_pretty_string(*red.constant) : "none") << " (from 3_1) fits " << fits
       << "/13 others; slowest knot " << slowest << " s";
    return Outcome{zero_residual == 14 && red.constant && fits == 13 && slowest <= 300, os.str()};
  });

  criterion(7, "resubstitution (alpha = 2, 3, 4)", 1800.0, [&] {
    int passed = 0, runs = 0;
    std::string bad;
    for (const auto& k : corpus) {
      const auto it = ext.find(k.name);
      if (it == ext.end() || !p1_ok(it->second)) {
        bad += " " + k.name + "(no extraction)";
        continue;
      }
      LoopPolynomials usable = it->second.result.loops;
      if (usable.levels.size() > 2) usable.levels.resize(2);
      const auto hb = convert_hbar_to_h(usable, k.alexander_golden);
      for (int alpha : {2, 3, 4}) {
        ++runs;
        const auto rr = resubstitute_check(hb, k.alexander_golden, colored_jones_series(k.braid, alpha, 14).series, alpha);
        if (rr.pass) {
          ++passed;
        } else {
          bad += " " + k.name + "@" + std::to_string(alpha);
        }
      }
    }
    return Outcome{passed == 42, std::to_string(passed) + "/" + std::to_string(runs) + " (knot, alpha) pairs" +
                                     (bad.empty() ? "" : ", failed:" + bad)};
  });

  criterion(8, "oracle equivalence and skein identity", 600.0, [&] {
    int agree = 0;
    for (const auto& k : corpus)
      agree += colored_jones_series(k.braid, 2, 8).series == quarter_power_series(jones_kauffman_oracle(k.braid), 8);
    int triples = 0, skein_ok = 0;
    for (const auto& k : corpus) {
      if (triples == 10) break;
      if (k.braid.letters.size() > 12) continue;
      ++triples;
      skein_ok += skein_residual(skein_triple(k.braid, 0)).is_zero();
    }
    std::ostringstream os;
    os << "alpha = 2 series equals oracle to order 8 for " << agree << "/14; skein identity " << skein_ok << "/"
       << triples << " triples";
    return Outcome{agree == 14 && triples == 10 && skein_ok == 10, os.str()};
  });

  criterion(9, "mirror antisymmetry", 1800.0, [&] {
    int ok = 0;
    std::string bad;
    for (const auto& k : corpus) {
      const auto it = ext.find(k.name);
      if (it == ext.end() || !p1_ok(it->second)) {
        bad += " " + k.name;
        continue;
      }
      const auto m = extract(mirror(k.braid), k.alexander_golden, k.genus, 14, 32);
      if (!p1_ok(m)) {
        bad += " " + k.name + "(mirror)";
        continue;
      }
      const auto& p = it->second.result.loops.P(1);
      const auto& q = m.result.loops.P(1);
      const bool good = k.amphichiral ? (p.is_zero() && q.is_zero()) : (!p.is_zero() && q == -p);
      if (good) {
        ++ok;
      } else {
        bad += " " + k.name;
      }
    }
    return Outcome{ok == 14, std::to_string(ok) + "/14 (chiral: P_1 negates; 4_1, 6_3: P_1 = 0)" +
                                 (bad.empty() ? "" : ", failed:" + bad)};
  });

  criterion(10, "SU(3) first-order vanishing", 60.0, [&] {
    int ok = 0;
    std::string bad;
    for (const auto& k : corpus) {
      const auto r = first_order_vanishing_check(k.braid, k.alexander_golden);
      if (r.pass && r.coefficient == 0) {
        ++ok;
      } else {
        bad += " " + k.name + "(" + to_pretty_string(r.coefficient) + ")";
      }
    }
    return Outcome{ok == 14, std::to_string(ok) + "/14 knots with zero hbar^1 coefficient" +
                                 (bad.empty() ? "" : ", failed:" + bad)};
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
