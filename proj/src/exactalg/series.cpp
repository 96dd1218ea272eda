#include "loopex/series.hpp"

#include <array>
#include <sstream>

namespace loopex {

const char* series_param_name(SeriesParam p) {
  switch (p) {
    case SeriesParam::hbar: return "hbar";
    case SeriesParam::h: return "h";
    case SeriesParam::x: return "x";
  }
  return "?";
}

RationalSeries series_invert(const RationalSeries& a) {
  if (a[0] == 0) throw Error(ErrorCode::precondition, "invert needs a nonzero constant term");
  const std::size_t n = a.order();
  RationalSeries out(a.parameter(), n);
  const Rational inv0 = 1 / a[0];
  out[0] = inv0;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      if (a[i] != 0) acc += a[i] * out[k - i];
    }
    out[k] = -acc * inv0;
  }
  return out;
}

// exp(f) with f(0) = 0 via g' = f' g.
RationalSeries series_exp(const RationalSeries& a) {
  if (a[0] != 0) throw Error(ErrorCode::precondition, "exp needs a zero constant term");
  const std::size_t n = a.order();
  RationalSeries out(a.parameter(), n);
  out[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      if (a[i] != 0) acc += Rational(static_cast<long>(i)) * a[i] * out[k - i];
    }
    out[k] = acc / static_cast<long>(k);
  }
  return out;
}

// log(f) with f(0) = 1 via (log f)' = f'/f.
RationalSeries series_log(const RationalSeries& a) {
  if (a[0] != 1) throw Error(ErrorCode::precondition, "log needs constant term 1");
  const std::size_t n = a.order();
  RationalSeries out(a.parameter(), n);
  // k L_k = k a_k - sum_{i=1}^{k-1} i L_i a_{k-i}
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc = Rational(static_cast<long>(k)) * a[k];
    for (std::size_t i = 1; i < k; ++i) {
      if (a[k - i] != 0) acc -= Rational(static_cast<long>(i)) * out[i] * a[k - i];
    }
    out[k] = acc / static_cast<long>(k);
  }
  return out;
}

RationalSeries series_arith(const RationalSeries& a, const RationalSeries& b, SeriesOp kind) {
  switch (kind) {
    case SeriesOp::add: return a + b;
    case SeriesOp::mul: return a * b;
    case SeriesOp::invert: return series_invert(a);
    case SeriesOp::exp: return series_exp(a);
    case SeriesOp::log: return series_log(a);
  }
  throw Error(ErrorCode::internal, "unknown series op");
}

RationalSeries divide_with_valuation(const RationalSeries& a, const RationalSeries& b) {
  if (a.parameter() != b.parameter()) throw Error(ErrorCode::parameter_mismatch, "series parameters differ");
  const std::size_t v = b.valuation();
  const std::size_t n = std::min(a.order(), b.order());
  if (v > n) throw Error(ErrorCode::precondition, "divisor vanishes to the working order");
  for (std::size_t k = 0; k < v; ++k) {
    if (a[k] != 0) throw Error(ErrorCode::not_exact, "dividend valuation below divisor valuation");
  }
  const std::size_t m = n - v;
  RationalSeries num(a.parameter(), m), den(a.parameter(), m);
  for (std::size_t k = 0; k <= m; ++k) {
    num[k] = a[k + v];
    den[k] = b[k + v];
  }
  return num * series_invert(den);
}

RationalSeries exp_linear(SeriesParam param, const Rational& c, std::size_t order) {
  RationalSeries out(param, order);
  Rational term = 1;
  out[0] = 1;
  for (std::size_t k = 1; k <= order; ++k) {
    term *= c;
    term /= static_cast<long>(k);
    out[k] = term;
  }
  return out;
}

RationalSeries substitute_exponential(const LaurentPolynomial& p, const ExponentialAssignment& assignment,
                                      std::size_t order, SeriesParam param) {
  std::array<std::int64_t, 2> slope{0, 0};
  for (std::size_t i = 0; i < p.arity(); ++i) {
    auto it = assignment.find(p.variables()[i]);
    if (it == assignment.end()) {
      throw Error(ErrorCode::invalid_argument,
                  "no exponential assignment for " + std::string(var_name(p.variables()[i])));
    }
    slope[i] = it->second;
  }
  // sum_terms c * e^{(slope . e) x}; group by the combined rate.
  std::map<std::int64_t, Rational> by_rate;
  for (const auto& [e, c] : p.terms()) {
    std::int64_t rate = 0;
    for (std::size_t i = 0; i < p.arity(); ++i) rate += slope[i] * e[i];
    by_rate[rate] += c;
  }
  RationalSeries out(param, order);
  for (const auto& [rate, c] : by_rate) {
    if (c == 0) continue;
    Integer power = 1;
    for (std::size_t k = 0; k <= order; ++k) {
      out[k] += c * Rational(power) / Rational(factorial(static_cast<unsigned>(k)));
      power *= rate;
    }
  }
  return out;
}

std::string render_series(const RationalSeries& s) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k <= s.order(); ++k) {
    if (s[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << to_canonical_string(s[k]);
    if (k > 0) os << '*' << series_param_name(s.parameter()) << '^' << k;
  }
  os << (first ? "" : " + ") << "O(" << series_param_name(s.parameter()) << '^' << s.order() + 1 << ')';
  return os.str();
}

}  // namespace loopex
