#include "loopex/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "loopex/error.hpp"

namespace loopex {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::overflow, "exponent overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::overflow, "exponent overflow");
  return r;
}

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  return {checked_add(a[0], b[0]), checked_add(a[1], b[1])};
}

void accumulate(TermMap& terms, const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

}  // namespace

std::string_view var_name(Var v) {
  switch (v) {
    case Var::t: return "t";
    case Var::t1: return "t1";
    case Var::t2: return "t2";
    case Var::u: return "u";
    case Var::u1: return "u1";
    case Var::u2: return "u2";
    case Var::a: return "a";
  }
  return "?";
}

std::optional<Var> parse_var(std::string_view name) {
  for (Var v : {Var::t, Var::t1, Var::t2, Var::u, Var::u1, Var::u2, Var::a}) {
    if (var_name(v) == name) return v;
  }
  return std::nullopt;
}

LaurentPolynomial::LaurentPolynomial() : vars_{Var::t} {}

LaurentPolynomial::LaurentPolynomial(std::vector<Var> vars) : vars_(std::move(vars)) { canonicalize_vars(); }

LaurentPolynomial::LaurentPolynomial(std::vector<Var> vars,
                                     std::initializer_list<std::pair<Exponents, Rational>> terms)
    : vars_(std::move(vars)) {
  if (vars_.size() == 1) {
    for (const auto& [e, c] : terms) {
      if (e[1] != 0) throw Error(ErrorCode::invalid_argument, "second exponent set on a univariate polynomial");
    }
  }
  for (const auto& [e, c] : terms) accumulate(terms_, e, c);
  canonicalize_vars();
}

void LaurentPolynomial::canonicalize_vars() {
  if (vars_.empty() || vars_.size() > 2) {
    throw Error(ErrorCode::invalid_argument, "Laurent polynomials carry one or two variables");
  }
  if (vars_.size() == 2) {
    if (vars_[0] == vars_[1]) throw Error(ErrorCode::invalid_argument, "repeated variable");
    if (vars_[1] < vars_[0]) {
      std::swap(vars_[0], vars_[1]);
      TermMap swapped;
      for (const auto& [e, c] : terms_) swapped.emplace(Exponents{e[1], e[0]}, c);
      terms_ = std::move(swapped);
    }
  }
}

LaurentPolynomial LaurentPolynomial::constant(std::vector<Var> vars, const Rational& c) {
  LaurentPolynomial p(std::move(vars));
  accumulate(p.terms_, {0, 0}, c);
  return p;
}

LaurentPolynomial LaurentPolynomial::monomial(std::vector<Var> vars, Exponents e, const Rational& c) {
  std::vector<Var> original = vars;
  LaurentPolynomial p(std::move(vars));
  if (p.arity() == 1 && e[1] != 0) throw Error(ErrorCode::invalid_argument, "second exponent set on a univariate polynomial");
  if (original != p.vars_) std::swap(e[0], e[1]);
  accumulate(p.terms_, e, c);
  return p;
}

LaurentPolynomial LaurentPolynomial::univariate(Var v, std::initializer_list<std::pair<std::int64_t, Rational>> terms) {
  LaurentPolynomial p({v});
  for (const auto& [e, c] : terms) accumulate(p.terms_, {e, 0}, c);
  return p;
}

Rational LaurentPolynomial::coefficient(Exponents e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPolynomial::add_term(Exponents e, const Rational& c) {
  if (arity() == 1 && e[1] != 0) throw Error(ErrorCode::invalid_argument, "second exponent set on a univariate polynomial");
  accumulate(terms_, e, c);
}

void LaurentPolynomial::check_same_vars(const LaurentPolynomial& other, const char* op) const {
  if (vars_ != other.vars_) {
    throw Error(ErrorCode::variable_mismatch, std::string("variable lists differ in ") + op);
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  check_same_vars(other, "add");
  for (const auto& [e, c] : other.terms_) accumulate(terms_, e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  check_same_vars(other, "sub");
  for (const auto& [e, c] : other.terms_) accumulate(terms_, e, -c);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& lhs, const LaurentPolynomial& rhs) {
  lhs.check_same_vars(rhs, "mul");
  LaurentPolynomial out(lhs.vars_);
  Rational prod;
  for (const auto& [e1, c1] : lhs.terms_) {
    for (const auto& [e2, c2] : rhs.terms_) {
      prod = c1 * c2;
      accumulate(out.terms_, add_exponents(e1, e2), prod);
    }
  }
  return out;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& other) {
  *this = *this * other;
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned n) const {
  LaurentPolynomial result = constant(vars_, 1);
  LaurentPolynomial base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

Rational LaurentPolynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != arity()) throw Error(ErrorCode::invalid_argument, "evaluation point arity mismatch");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < arity(); ++i) {
      if (e[i] == 0) continue;
      if (point[i] == 0) throw Error(ErrorCode::invalid_argument, "evaluation at zero with negative exponent");
      const auto mag = static_cast<unsigned>(e[i] < 0 ? -e[i] : e[i]);
      Rational p = rational_pow(point[i], mag);
      if (e[i] > 0) term *= p;
      else term /= p;
    }
    total += term;
  }
  return total;
}

Rational LaurentPolynomial::sum_of_coefficients() const {
  Rational total = 0;
  for (const auto& [e, c] : terms_) total += c;
  return total;
}

std::int64_t LaurentPolynomial::max_exponent(std::size_t slot) const {
  if (terms_.empty()) throw Error(ErrorCode::invalid_argument, "degree of the zero polynomial");
  std::int64_t m = terms_.begin()->first[slot];
  for (const auto& [e, c] : terms_) m = std::max(m, e[slot]);
  return m;
}

std::int64_t LaurentPolynomial::min_exponent(std::size_t slot) const {
  if (terms_.empty()) throw Error(ErrorCode::invalid_argument, "degree of the zero polynomial");
  std::int64_t m = terms_.begin()->first[slot];
  for (const auto& [e, c] : terms_) m = std::min(m, e[slot]);
  return m;
}

LaurentPolynomial LaurentPolynomial::transform_exponents(const ExponentMap& m, std::vector<Var> new_vars) const {
  LaurentPolynomial out(new_vars);
  const bool reordered = out.vars_ != new_vars;
  for (const auto& [e, c] : terms_) {
    Exponents ne{checked_add(checked_mul(m[0][0], e[0]), checked_mul(m[0][1], e[1])),
                 checked_add(checked_mul(m[1][0], e[0]), checked_mul(m[1][1], e[1]))};
    if (out.arity() == 1) {
      if (ne[1] != 0) throw Error(ErrorCode::invalid_argument, "exponent map leaves a second exponent");
    }
    if (reordered) std::swap(ne[0], ne[1]);
    accumulate(out.terms_, ne, c);
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::specialize_second_to_one(Var result_var) const {
  if (arity() != 2) throw Error(ErrorCode::invalid_argument, "specialization needs a bivariate polynomial");
  LaurentPolynomial out({result_var});
  for (const auto& [e, c] : terms_) accumulate(out.terms_, {e[0], 0}, c);
  return out;
}

LaurentPolynomial LaurentPolynomial::rename(std::vector<Var> new_vars) const {
  if (new_vars.size() != arity()) throw Error(ErrorCode::invalid_argument, "rename arity mismatch");
  LaurentPolynomial out(new_vars);
  const bool reordered = out.vars_ != new_vars;
  for (const auto& [e, c] : terms_) {
    Exponents ne = e;
    if (reordered) std::swap(ne[0], ne[1]);
    out.terms_.emplace(ne, c);
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::shifted(Exponents e) const {
  if (arity() == 1 && e[1] != 0) throw Error(ErrorCode::invalid_argument, "second exponent set on a univariate polynomial");
  LaurentPolynomial out(vars_);
  for (const auto& [k, c] : terms_) out.terms_.emplace(add_exponents(k, e), c);
  return out;
}

std::string LaurentPolynomial::canonical() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << to_canonical_string(c);
    for (std::size_t i = 0; i < arity(); ++i) {
      if (e[i] != 0) os << '*' << var_name(vars_[i]) << '^' << e[i];
    }
  }
  return os.str();
}

std::string LaurentPolynomial::pretty(std::string_view sep) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool has_vars = (e[0] != 0) || (arity() == 2 && e[1] != 0);
    bool wrote = false;
    if (!has_vars || mag != 1) {
      os << to_pretty_string(mag);
      wrote = true;
    }
    for (std::size_t i = 0; i < arity(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << sep;
      os << var_name(vars_[i]);
      if (e[i] != 1) os << '^' << e[i];
      wrote = true;
    }
  }
  return os.str();
}

LaurentPolynomial laurent_arith(const LaurentPolynomial& a, const LaurentPolynomial& b, ArithKind kind) {
  switch (kind) {
    case ArithKind::add: return a + b;
    case ArithKind::sub: return a - b;
    case ArithKind::mul: return a * b;
  }
  throw Error(ErrorCode::internal, "unknown arithmetic kind");
}

std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.arity() != 1 || b.arity() != 1) throw Error(ErrorCode::invalid_argument, "divide_exact is univariate");
  if (a.variables() != b.variables()) throw Error(ErrorCode::variable_mismatch, "variable lists differ in divide");
  if (b.is_zero()) throw Error(ErrorCode::invalid_argument, "division by zero polynomial");
  if (a.is_zero()) return LaurentPolynomial(a.variables());
  const std::int64_t blow = b.min_exponent(), bhigh = b.max_exponent();
  const std::int64_t alow = a.min_exponent(), ahigh = a.max_exponent();
  if (ahigh - alow < bhigh - blow) return std::nullopt;
  std::vector<Rational> rem(static_cast<std::size_t>(ahigh - alow + 1));
  for (const auto& [e, c] : a.terms()) rem[static_cast<std::size_t>(e[0] - alow)] = c;
  std::vector<Rational> div(static_cast<std::size_t>(bhigh - blow + 1));
  for (const auto& [e, c] : b.terms()) div[static_cast<std::size_t>(e[0] - blow)] = c;
  const Rational& lead = div.back();
  const std::size_t qlen = rem.size() - div.size() + 1;
  std::vector<Rational> quot(qlen);
  for (std::size_t k = qlen; k-- > 0;) {
    const Rational& top = rem[k + div.size() - 1];
    if (top == 0) continue;
    Rational q = top / lead;
    quot[k] = q;
    for (std::size_t j = 0; j < div.size(); ++j) rem[k + j] -= q * div[j];
  }
  for (const auto& r : rem) {
    if (r != 0) return std::nullopt;
  }
  LaurentPolynomial out(a.variables());
  for (std::size_t k = 0; k < qlen; ++k) {
    if (quot[k] != 0) out.add_term({static_cast<std::int64_t>(k) + alow - blow, 0}, quot[k]);
  }
  return out;
}

LaurentPolynomial divide_exact_in_first(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.arity() != 2 || b.arity() != 1) throw Error(ErrorCode::invalid_argument, "divide_exact_in_first shapes");
  if (b.is_zero()) throw Error(ErrorCode::invalid_argument, "division by zero polynomial");
  if (a.is_zero()) return a;
  const std::int64_t blow = b.min_exponent(), bhigh = b.max_exponent();
  const std::int64_t alow = a.min_exponent(0), ahigh = a.max_exponent(0);
  if (ahigh - alow < bhigh - blow) throw Error(ErrorCode::not_exact, "bivariate division leaves a remainder");
  // Rows indexed by first exponent; each row is a map second-exponent -> coeff.
  std::vector<std::map<std::int64_t, Rational>> rem(static_cast<std::size_t>(ahigh - alow + 1));
  for (const auto& [e, c] : a.terms()) rem[static_cast<std::size_t>(e[0] - alow)][e[1]] = c;
  std::vector<Rational> div(static_cast<std::size_t>(bhigh - blow + 1));
  for (const auto& [e, c] : b.terms()) div[static_cast<std::size_t>(e[0] - blow)] = c;
  const Rational lead = div.back();
  const std::size_t qlen = rem.size() - div.size() + 1;
  LaurentPolynomial out(a.variables());
  for (std::size_t k = qlen; k-- > 0;) {
    auto top = rem[k + div.size() - 1];
    for (const auto& [e2, c] : top) {
      if (c == 0) continue;
      Rational q = c / lead;
      out.add_term({static_cast<std::int64_t>(k) + alow - blow, e2}, q);
      for (std::size_t j = 0; j < div.size(); ++j) {
        if (div[j] == 0) continue;
        auto& slot = rem[k + j][e2];
        slot -= q * div[j];
      }
    }
  }
  for (const auto& row : rem) {
    for (const auto& [e2, c] : row) {
      if (c != 0) throw Error(ErrorCode::not_exact, "bivariate division leaves a remainder");
    }
  }
  return out;
}

namespace {

struct LaurentParser {
  std::string s;
  std::size_t pos = 0;

  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }

  std::optional<Var> read_var() {
    // Longest match first so "t1" wins over "t".
    for (std::string_view name : {"t1", "t2", "u1", "u2", "t", "u", "a"}) {
      if (s.compare(pos, name.size(), name) == 0) {
        pos += name.size();
        return parse_var(name);
      }
    }
    return std::nullopt;
  }

  std::int64_t read_int() {
    std::size_t start = pos;
    if (peek() == '-' || peek() == '+') ++pos;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start])))) {
      throw Error(ErrorCode::parse_error, "expected integer in '" + s + "'");
    }
    return std::stoll(s.substr(start, pos - start));
  }
};

}  // namespace

LaurentPolynomial parse_laurent(std::string_view text, std::vector<Var> vars) {
  LaurentParser p;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) p.s.push_back(ch);
  }
  if (p.s.empty()) throw Error(ErrorCode::parse_error, "empty polynomial");
  LaurentPolynomial out(vars);
  if (p.s == "0") return out;
  const std::vector<Var>& order = out.variables();
  while (!p.done()) {
    int sign = 1;
    if (p.peek() == '+' || p.peek() == '-') {
      sign = p.peek() == '-' ? -1 : 1;
      ++p.pos;
      // canonical form writes "+ -1/1": fold a second sign
      if (p.peek() == '-' || p.peek() == '+') {
        if (p.peek() == '-') sign = -sign;
        ++p.pos;
      }
    }
    Rational coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(p.peek()))) {
      std::size_t start = p.pos;
      while (!p.done() && (std::isdigit(static_cast<unsigned char>(p.peek())) || p.peek() == '/')) ++p.pos;
      coeff = parse_rational(p.s.substr(start, p.pos - start));
      if (p.peek() == '*') ++p.pos;
    }
    Exponents e{0, 0};
    while (!p.done() && p.peek() != '+' && p.peek() != '-') {
      auto v = p.read_var();
      if (!v) throw Error(ErrorCode::parse_error, "unexpected character in '" + std::string(text) + "'");
      auto it = std::find(order.begin(), order.end(), *v);
      if (it == order.end()) throw Error(ErrorCode::variable_mismatch, "variable not in list: " + std::string(var_name(*v)));
      std::int64_t power = 1;
      if (p.peek() == '^') {
        ++p.pos;
        power = p.read_int();
      }
      e[static_cast<std::size_t>(it - order.begin())] += power;
      if (p.peek() == '*') ++p.pos;
    }
    out.add_term(e, sign * coeff);
  }
  return out;
}

}  // namespace loopex
