#include <algorithm>

#include "loopex/error.hpp"
#include "loopex/twoloop.hpp"

namespace loopex {

namespace {

CheckOutcome outcome(std::string name, bool ok, std::string detail = {}) {
  return {std::move(name), ok ? "pass" : "fail", std::move(detail)};
}

}  // namespace

std::vector<CheckOutcome> structural_checks(const KnotRecord& record) {
  std::vector<CheckOutcome> out;
  const auto theta = symmetrize_from_fundamental(record.theta12_fundamental);
  const auto sym = check_symmetries(theta.expanded);
  std::string moved;
  for (const auto& f : sym.failed) moved += (moved.empty() ? "" : ", ") + f;
  out.push_back(outcome("gamma_invariance", sym.pass, moved));

  const Rational at_one = theta.expanded.sum_of_coefficients();
  out.push_back(outcome("vanishes_at_1_1", at_one == 0, at_one == 0 ? "" : "value " + to_pretty_string(at_one)));

  std::string nonint;
  for (const auto& e : record.theta12_fundamental) {
    if (!is_integer(e.coefficient)) nonint = to_pretty_string(e.coefficient);
  }
  out.push_back(outcome("integer_coefficients", nonint.empty(), nonint));

  std::int64_t degree = 0;
  for (const auto& e : record.theta12_fundamental) degree = std::max(degree, e.m1);
  out.push_back(outcome("degree_bounded_by_genus", degree <= 2 * record.genus,
                        "degree " + std::to_string(degree) + ", 2*genus " + std::to_string(2 * record.genus)));

  if (record.amphichiral) {
    out.push_back(outcome("amphichiral_zero", theta.expanded.is_zero()));
  } else {
    out.push_back({"amphichiral_zero", "skipped", "chiral"});
  }
  return out;
}

CrossTableResult cross_table_check(const KnotRecord& record, const ReferenceTables& tables) {
  CrossTableResult r;
  r.knot = record.name;
  const LaurentPolynomial derived = to_u_basis(symmetrize_from_fundamental(record.theta12_fundamental).expanded);
  if (record.theta12_u && !record.theta12_u->is_zero() && !(derived == *record.theta12_u)) {
    r.status = "fail";
    r.detail = "corpus u-basis entry differs from the orbit expansion";
    return r;
  }
  const auto* row = tables.table2_row(record.name);
  if (!row) {
    r.status = "skipped";
    r.detail = "no printed u-table row";
    return r;
  }
  const auto terms = split_printed_u(row->theta12_u_printed);
  r.typo_token = tables.typo_token(record.name);
  if (!r.typo_token) {
    try {
      const LaurentPolynomial printed = parse_printed_u(row->theta12_u_printed);
      r.status = printed == derived ? "pass" : "fail";
      if (r.status == "fail") r.detail = "printed " + render_printed_u(printed) + ", derived " + render_printed_u(derived);
    } catch (const Error& e) {
      r.status = "fail";
      r.detail = e.what();
    }
    return r;
  }
  // One printed term is garbled: every other term must be readable, and
  // exactly one printed monomial u1^p u2^b with the garbled coefficient may
  // complete the row to the table1 reference value.
  LaurentPolynomial rest({Var::u1, Var::u2});
  const PrintedTerm* suspect = nullptr;
  for (const auto& t : terms) {
    if (t.raw.find(*r.typo_token) != std::string::npos || !t.valid) {
      if (suspect) {
        r.status = "fail";
        r.detail = "more than one unreadable term";
        return r;
      }
      suspect = &t;
      continue;
    }
    rest.add_term({t.p - t.b, t.b}, t.coefficient);
  }
  if (!suspect) {
    r.status = "fail";
    r.detail = "flagged token not found in the printed row";
    return r;
  }
  int max_degree = 0;
  for (const auto& t : terms) max_degree = std::max(max_degree, t.p + t.b);
  for (int p = 0; p <= max_degree + 2; ++p) {
    for (int b = 0; b <= p; ++b) {
      LaurentPolynomial candidate = rest;
      candidate.add_term({p - b, b}, suspect->coefficient);
      if (candidate == derived) {
        ++r.candidates_fitting;
        r.resolved_term = render_printed_u(LaurentPolynomial({Var::u1, Var::u2}, {{{p - b, b}, suspect->coefficient}}));
      }
    }
  }
  r.status = r.candidates_fitting == 1 ? "pass" : "fail";
  r.detail = "'" + suspect->raw + "' read as " + (r.resolved_term ? *r.resolved_term : std::string("?")) + " (" +
             std::to_string(r.candidates_fitting) + " fitting reading)";
  return r;
}

std::optional<Rational> proportionality(const LaurentPolynomial& a, const LaurentPolynomial& b, bool* both_zero) {
  if (both_zero) *both_zero = a.is_zero() && b.is_zero();
  if (b.is_zero()) return std::nullopt;
  const auto& [e, cb] = *b.terms().begin();
  const Rational c = a.is_zero() ? Rational(0) : a.coefficient(e) / cb;
  if (c == 0) return std::nullopt;
  if (!(b * c == a.rename(b.variables()))) return std::nullopt;
  return c;
}

ReductionResult sl2_reduction_check(const std::vector<KnotRecord>& records,
                                    const std::map<std::string, LaurentPolynomial>& p1,
                                    const std::string& calibration_knot) {
  ReductionResult r;
  r.calibration_knot = calibration_knot;
  auto p_theta_diag = [](const KnotRecord& k) {
    return at_second_one(symmetrize_from_fundamental(k.theta12_fundamental).expanded) * Rational(1, 12);
  };
  const auto& cal = find_knot(records, calibration_knot);
  auto it = p1.find(calibration_knot);
  if (it == p1.end()) throw Error(ErrorCode::precondition, "no P_1 for the calibration knot");
  r.constant = proportionality(it->second, p_theta_diag(cal), nullptr);
  if (!r.constant) return r;
  r.pass = true;
  for (const auto& [name, poly] : p1) {
    const auto diag = p_theta_diag(find_knot(records, name));
    const LaurentPolynomial lhs = poly.is_zero() ? LaurentPolynomial({Var::t}) : poly.rename({Var::t});
    const bool ok = lhs == diag * *r.constant;
    r.fits[name] = ok;
    r.pass = r.pass && ok;
  }
  return r;
}

}  // namespace loopex
