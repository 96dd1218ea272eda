#include <algorithm>
#include <cctype>
#include <sstream>

#include "loopex/error.hpp"
#include "loopex/twoloop.hpp"

namespace loopex {

namespace {

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

// body without sign: "3u_1^2u_2", "u_13", "66".
PrintedTerm parse_term(const std::string& raw, int sign) {
  PrintedTerm t;
  t.raw = raw;
  const std::string s = strip_spaces(raw);
  std::size_t i = 0;
  Integer coef = 1;
  if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    coef = Integer(s.substr(i, j - i));
    i = j;
  } else if (i >= s.size()) {
    return t;
  }
  t.coefficient = Rational(coef) * sign;
  int p = 0, b = 0;
  while (i < s.size()) {
    if (s[i] != 'u') return t;
    ++i;
    if (i < s.size() && s[i] == '_') ++i;
    if (i >= s.size() || (s[i] != '1' && s[i] != '2')) return t;
    const bool first = s[i] == '1';
    ++i;
    int k = 1;
    if (i < s.size() && s[i] == '^') {
      std::size_t j = ++i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == i) return t;
      k = std::stoi(s.substr(i, j - i));
      i = j;
    }
    (first ? p : b) += k;
  }
  t.p = p;
  t.b = b;
  t.valid = p >= b;
  return t;
}

}  // namespace

std::vector<PrintedTerm> split_printed_u(const std::string& text) {
  std::vector<PrintedTerm> out;
  std::string current;
  int sign = 1;
  bool have = false;
  auto flush = [&] {
    if (have) out.push_back(parse_term(current, sign));
    current.clear();
    have = false;
  };
  for (char c : text) {
    if (c == '+' || c == '-') {
      flush();
      sign = c == '-' ? -1 : 1;
      continue;
    }
    if (!std::isspace(static_cast<unsigned char>(c))) have = true;
    if (have) current.push_back(c);
  }
  flush();
  // Trim trailing blanks kept inside `raw`.
  for (auto& t : out) {
    while (!t.raw.empty() && std::isspace(static_cast<unsigned char>(t.raw.back()))) t.raw.pop_back();
  }
  return out;
}

LaurentPolynomial parse_printed_u(const std::string& text) {
  LaurentPolynomial out({Var::u1, Var::u2});
  if (strip_spaces(text) == "0") return out;
  for (const auto& t : split_printed_u(text)) {
    if (!t.valid) throw Error(ErrorCode::parse_error, "unreadable u-table term '" + t.raw + "'");
    out.add_term({t.p - t.b, t.b}, t.coefficient);
  }
  return out;
}

std::string render_printed_u(const LaurentPolynomial& algebraic) {
  if (algebraic.is_zero()) return "0";
  struct Item {
    std::int64_t p, b;
    Rational c;
  };
  std::vector<Item> items;
  for (const auto& [e, c] : algebraic.terms()) items.push_back({e[0] + e[1], e[1], c});
  std::sort(items.begin(), items.end(), [](const Item& x, const Item& y) {
    if (x.p + x.b != y.p + y.b) return x.p + x.b > y.p + y.b;
    return x.b < y.b;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& it : items) {
    const bool negative = it.c < 0;
    const Rational mag = negative ? Rational(-it.c) : it.c;
    os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    const bool vars = it.p > 0 || it.b > 0;
    if (!vars || mag != 1) os << to_pretty_string(mag);
    if (it.p > 0) os << "u1" << (it.p != 1 ? "^" + std::to_string(it.p) : "");
    if (it.b > 0) os << "u2" << (it.b != 1 ? "^" + std::to_string(it.b) : "");
  }
  return os.str();
}

std::string render_fundamental(const std::vector<FundamentalEntry>& entries) {
  LaurentPolynomial p({Var::t1, Var::t2});
  for (const auto& e : entries) p.add_term({e.m1, e.m2}, e.coefficient);
  return p.pretty(" ");
}

}  // namespace loopex
