#pragma once

#include <array>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "loopex/corpus.hpp"
#include "loopex/laurent.hpp"

namespace loopex {

// The order-12 group acting on exponent pairs of t1^a t2^b, generated by
// (a,b) -> (b,a), (a,b) -> (-a, b-a), (a,b) -> (-a,-b).
const std::vector<ExponentMap>& gamma_group();
const std::array<ExponentMap, 3>& gamma_generators();
Exponents apply_exponent_map(const ExponentMap& m, Exponents e);
// Orbit as a set, in descending order.
std::vector<Exponents> gamma_orbit(Exponents e);
// The unique orbit element with m1 >= 2 m2 >= 0.
Exponents fundamental_representative(Exponents e);

struct ThetaPolynomial {
  std::vector<FundamentalEntry> fundamental;  // descending (m1, m2)
  LaurentPolynomial expanded{{Var::t1, Var::t2}};
};

// Throws Error(invalid_argument) on a domain violation or a repeated pair.
ThetaPolynomial symmetrize_from_fundamental(const std::vector<FundamentalEntry>& entries);
// Inverse of the orbit expansion; throws Error(precondition) on asymmetric input.
std::vector<FundamentalEntry> fundamental_from_expanded(const LaurentPolynomial& p);

struct SymmetryReport {
  bool pass = true;
  std::vector<std::string> failed;  // names of generators that move p
};
SymmetryReport check_symmetries(const LaurentPolynomial& p);

// Orbit sums of (1,0) and (2,1) in t1, t2.
LaurentPolynomial u1_expanded();
LaurentPolynomial u2_expanded();

// Symmetric p in t1,t2 -> polynomial in u1,u2 (product basis).
LaurentPolynomial to_u_basis(const LaurentPolynomial& p);
LaurentPolynomial from_u_basis(const LaurentPolynomial& u);

// p(t, 1) in the variable t.
LaurentPolynomial at_second_one(const LaurentPolynomial& p);

// numerator / (Delta(t1) Delta(t2) Delta(t1 t2))^power with Delta(1) = 1.
struct ThetaRational {
  LaurentPolynomial numerator{{Var::t1, Var::t2}};
  LaurentPolynomial delta{{Var::t}};
  int power = 1;

  friend bool operator==(const ThetaRational&, const ThetaRational&) = default;
};

// z = p / (Delta(t1) Delta(t2) Delta(t1 t2)), p the golden 12 p_theta / 12.
ThetaRational ztheta(const KnotRecord& record);
ThetaRational ztheta_from(const LaurentPolynomial& p, const LaurentPolynomial& delta);

// Value at (t, 1): numerator(t,1) / Delta(t)^{2 power}.
struct UnivariateRational {
  LaurentPolynomial numerator{{Var::t}};
  LaurentPolynomial delta{{Var::t}};
  int delta_power = 0;
};
UnivariateRational at_second_one(const ThetaRational& z);

// F = 12 (z(t1,1) + z(t2,1) + z((t1 t2)^-1, 1) + z(t1,t2)), over (...)^2.
ThetaRational f1_from_ztheta(const ThetaRational& z);
// z = (3 F(t1,t2) - F(t1,1) - F(t2,1) - F((t1 t2)^-1,1)) / 36, reduced to power 1.
ThetaRational ztheta_from_f1(const ThetaRational& f);

// Random Gamma-symmetric numerator vanishing at (1,1) over a random
// symmetric Delta with Delta(1) = 1.
ThetaRational random_symmetric_instance(std::mt19937_64& rng);

// Divide by Delta(t1), Delta(t2) or Delta(t1 t2); throws Error(not_exact).
LaurentPolynomial divide_by_delta_t1(const LaurentPolynomial& p, const LaurentPolynomial& delta);
LaurentPolynomial divide_by_delta_t2(const LaurentPolynomial& p, const LaurentPolynomial& delta);
LaurentPolynomial divide_by_delta_t1t2(const LaurentPolynomial& p, const LaurentPolynomial& delta);
LaurentPolynomial delta_in_t1(const LaurentPolynomial& delta);
LaurentPolynomial delta_in_t2(const LaurentPolynomial& delta);
LaurentPolynomial delta_in_t1t2(const LaurentPolynomial& delta);

struct CheckOutcome {
  std::string name;
  std::string status;  // "pass", "fail" or "skipped"
  std::string detail;
};

// Gamma invariance, p(1,1) = 0, integrality, degree <= 2 genus, amphichiral zero.
std::vector<CheckOutcome> structural_checks(const KnotRecord& record);

// Printed u-table notation: u_1^p u_2^b denotes the product u1^(p-b) u2^b.
struct PrintedTerm {
  std::string raw;
  Rational coefficient = 0;
  int p = 0;
  int b = 0;
  bool valid = false;  // false for tokens that do not parse as u_1^p u_2^b with p >= b
};
std::vector<PrintedTerm> split_printed_u(const std::string& text);
// Throws Error(parse_error) if any term is invalid.
LaurentPolynomial parse_printed_u(const std::string& text);
std::string render_printed_u(const LaurentPolynomial& algebraic);
std::string render_fundamental(const std::vector<FundamentalEntry>& entries);

struct CrossTableResult {
  std::string knot;
  std::string status;  // "pass", "fail", "skipped"
  std::optional<std::string> typo_token;
  std::optional<std::string> resolved_term;  // printed rendering of the forced term
  std::size_t candidates_fitting = 0;
  std::string detail;
};

// Orbit expansion of the table1 entry, in the u basis, against the table2 reference row.
CrossTableResult cross_table_check(const KnotRecord& record, const ReferenceTables& tables);

struct ReductionResult {
  std::optional<Rational> constant;
  std::map<std::string, bool> fits;  // knot -> P_1 == c p_theta(t, 1)
  std::string calibration_knot;
  bool pass = false;
};

// P_1 per knot against p_theta(t,1) with one constant fixed on the calibration knot.
ReductionResult sl2_reduction_check(const std::vector<KnotRecord>& records,
                                    const std::map<std::string, LaurentPolynomial>& p1,
                                    const std::string& calibration_knot = "3_1");

// Constant c with a = c b, if any (b nonzero); a = 0 = b gives nullopt with `both_zero`.
std::optional<Rational> proportionality(const LaurentPolynomial& a, const LaurentPolynomial& b, bool* both_zero);

}  // namespace loopex
