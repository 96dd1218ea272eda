#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "loopex/rational.hpp"

namespace loopex {

// Symbols a Laurent polynomial may be written in. `a` stands for q^(1/4) and
// only carries Kauffman-bracket values. Enumerator order is the canonical
// variable order.
enum class Var : std::uint8_t { t, t1, t2, u, u1, u2, a };

std::string_view var_name(Var v);
std::optional<Var> parse_var(std::string_view name);

using Exponents = std::array<std::int64_t, 2>;

struct ExponentsDescending {
  bool operator()(const Exponents& lhs, const Exponents& rhs) const { return lhs > rhs; }
};

// Descending lexicographic order; unused second slot is always 0.
using TermMap = std::map<Exponents, Rational, ExponentsDescending>;

// Integer 2x2 matrix acting on exponent vectors: (a,b) -> (m00 a + m01 b, m10 a + m11 b).
using ExponentMap = std::array<std::array<std::int64_t, 2>, 2>;

enum class ArithKind { add, sub, mul };

class LaurentPolynomial {
 public:
  LaurentPolynomial();  // zero polynomial in t
  explicit LaurentPolynomial(std::vector<Var> vars);
  LaurentPolynomial(std::vector<Var> vars, std::initializer_list<std::pair<Exponents, Rational>> terms);

  static LaurentPolynomial constant(std::vector<Var> vars, const Rational& c);
  static LaurentPolynomial monomial(std::vector<Var> vars, Exponents e, const Rational& c = 1);
  static LaurentPolynomial univariate(Var v, std::initializer_list<std::pair<std::int64_t, Rational>> terms);

  const std::vector<Var>& variables() const { return vars_; }
  std::size_t arity() const { return vars_.size(); }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(Exponents e) const;
  void add_term(Exponents e, const Rational& c);

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const Rational& c);

  friend LaurentPolynomial operator+(LaurentPolynomial lhs, const LaurentPolynomial& rhs) { return lhs += rhs; }
  friend LaurentPolynomial operator-(LaurentPolynomial lhs, const LaurentPolynomial& rhs) { return lhs -= rhs; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& lhs, const LaurentPolynomial& rhs);
  friend LaurentPolynomial operator*(LaurentPolynomial lhs, const Rational& c) { return lhs *= c; }
  friend LaurentPolynomial operator*(const Rational& c, LaurentPolynomial rhs) { return rhs *= c; }
  LaurentPolynomial operator-() const;

  friend bool operator==(const LaurentPolynomial& lhs, const LaurentPolynomial& rhs) {
    return lhs.vars_ == rhs.vars_ && lhs.terms_ == rhs.terms_;
  }

  LaurentPolynomial pow(unsigned n) const;

  // Every point coordinate must be nonzero when negative exponents occur.
  Rational evaluate(std::span<const Rational> point) const;
  Rational sum_of_coefficients() const;

  std::int64_t max_exponent(std::size_t slot = 0) const;
  std::int64_t min_exponent(std::size_t slot = 0) const;

  LaurentPolynomial transform_exponents(const ExponentMap& m, std::vector<Var> new_vars) const;
  // Bivariate only: set the second variable to 1.
  LaurentPolynomial specialize_second_to_one(Var result_var) const;
  LaurentPolynomial rename(std::vector<Var> new_vars) const;
  // Multiply by the monomial with the given exponents.
  LaurentPolynomial shifted(Exponents e) const;

  // Terms in descending exponent order, "num/den" coefficients:
  // "1/1*t^1 + -1/1 + 1/1*t^-1". Golden tests compare this form.
  std::string canonical() const;
  // Human form: "t - 1 + t^-1". `sep` goes between a coefficient and the
  // variables and between variables ("-13 t1^2 t2" vs "36u1^2").
  std::string pretty(std::string_view sep = " ") const;

 private:
  void check_same_vars(const LaurentPolynomial& other, const char* op) const;
  void canonicalize_vars();

  std::vector<Var> vars_;
  TermMap terms_;
};

LaurentPolynomial laurent_arith(const LaurentPolynomial& a, const LaurentPolynomial& b, ArithKind kind);

// Exact division of univariate Laurent polynomials; nullopt when b does not divide a.
std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& a, const LaurentPolynomial& b);

// a is bivariate; b is univariate in the same symbol as a's first variable
// (any symbol accepted, only the exponents matter). Divides a by b(x1)
// treating the second variable as part of the coefficient ring. Throws
// ErrorCode::not_exact when the division leaves a remainder.
LaurentPolynomial divide_exact_in_first(const LaurentPolynomial& a, const LaurentPolynomial& b);

// Parse the canonical or pretty rendering back. Accepts "t - 1 + t^-1",
// "3/2*t1^2*t2^-1", "-13 t1^2 t2". Variables are inferred unless given.
LaurentPolynomial parse_laurent(std::string_view text, std::vector<Var> vars);

}  // namespace loopex
