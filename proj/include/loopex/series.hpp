#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "loopex/error.hpp"
#include "loopex/laurent.hpp"
#include "loopex/rational.hpp"

namespace loopex {

// hbar: q = e^hbar.  h: h = q - 1.  x: resummation variable.
enum class SeriesParam { hbar, h, x };

const char* series_param_name(SeriesParam p);

template <class C>
C series_zero_like(const C& sample);

template <>
inline Rational series_zero_like<Rational>(const Rational&) {
  return Rational(0);
}

template <>
inline LaurentPolynomial series_zero_like<LaurentPolynomial>(const LaurentPolynomial& sample) {
  return LaurentPolynomial(sample.variables());
}

// Power series sum_{k<=N} c_k p^k, known modulo p^(N+1).
template <class C>
class TruncatedSeries {
 public:
  TruncatedSeries(SeriesParam param, std::size_t order, const C& zero = C())
      : param_(param), coeffs_(order + 1, zero) {}
  TruncatedSeries(SeriesParam param, std::vector<C> coeffs) : param_(param), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw Error(ErrorCode::invalid_argument, "series needs at least one coefficient");
  }

  static TruncatedSeries constant(SeriesParam param, std::size_t order, const C& c) {
    TruncatedSeries s(param, order, series_zero_like(c));
    s.coeffs_[0] = c;
    return s;
  }

  SeriesParam parameter() const { return param_; }
  std::size_t order() const { return coeffs_.size() - 1; }
  const C& operator[](std::size_t k) const { return coeffs_.at(k); }
  C& operator[](std::size_t k) { return coeffs_.at(k); }
  const std::vector<C>& coefficients() const { return coeffs_; }

  TruncatedSeries truncated(std::size_t order) const {
    if (order > this->order()) throw Error(ErrorCode::invalid_argument, "cannot extend a truncated series");
    return TruncatedSeries(param_, std::vector<C>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
  }

  // Index of the first nonzero coefficient, or order()+1 when all vanish.
  std::size_t valuation() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (!is_zero_coeff(coeffs_[k])) return k;
    }
    return coeffs_.size();
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    check(o);
    shrink_to(o.order());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    check(o);
    shrink_to(o.order());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check(b);
    const std::size_t n = std::min(a.order(), b.order());
    TruncatedSeries out(a.param_, n, series_zero_like(a.coeffs_[0]));
    for (std::size_t i = 0; i <= n; ++i) {
      if (is_zero_coeff(a.coeffs_[i])) continue;
      for (std::size_t j = 0; i + j <= n; ++j) {
        if (is_zero_coeff(b.coeffs_[j])) continue;
        out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return out;
  }
  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

  TruncatedSeries& operator*=(const Rational& c) {
    for (auto& v : coeffs_) v *= c;
    return *this;
  }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c) { return a *= c; }

  TruncatedSeries operator-() const {
    TruncatedSeries r = *this;
    for (auto& v : r.coeffs_) v = -v;
    return r;
  }

  // p -> -p.
  TruncatedSeries negate_parameter() const {
    TruncatedSeries r = *this;
    for (std::size_t k = 1; k < r.coeffs_.size(); k += 2) r.coeffs_[k] = -r.coeffs_[k];
    return r;
  }

  // p -> c p.
  TruncatedSeries rescale(const Rational& c) const {
    TruncatedSeries r = *this;
    Rational f = 1;
    for (std::size_t k = 1; k < r.coeffs_.size(); ++k) {
      f *= c;
      r.coeffs_[k] *= f;
    }
    return r;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.param_ == b.param_ && a.coeffs_ == b.coeffs_;
  }

 private:
  static bool is_zero_coeff(const Rational& c) { return c == 0; }
  static bool is_zero_coeff(const LaurentPolynomial& c) { return c.is_zero(); }

  void check(const TruncatedSeries& o) const {
    if (param_ != o.param_) throw Error(ErrorCode::parameter_mismatch, "series parameters differ");
  }
  void shrink_to(std::size_t order) {
    if (order < this->order()) coeffs_.resize(order + 1);
  }

  SeriesParam param_;
  std::vector<C> coeffs_;
};

using RationalSeries = TruncatedSeries<Rational>;
using PolySeries = TruncatedSeries<LaurentPolynomial>;

enum class SeriesOp { add, mul, invert, exp, log };

RationalSeries series_invert(const RationalSeries& a);
RationalSeries series_exp(const RationalSeries& a);
RationalSeries series_log(const RationalSeries& a);
// Dispatcher; `b` is ignored for unary kinds.
RationalSeries series_arith(const RationalSeries& a, const RationalSeries& b, SeriesOp kind);

// a / b where b has valuation v and b_v != 0; requires valuation(a) >= v.
// The result is known to order min(ord a, ord b) - v.
RationalSeries divide_with_valuation(const RationalSeries& a, const RationalSeries& b);

// e^{c p} to order N.
RationalSeries exp_linear(SeriesParam param, const Rational& c, std::size_t order);

// Linear form in x with integer slope: variable -> x * slope.
using ExponentialAssignment = std::map<Var, std::int64_t>;

// p(e^{slope_1 x}, ...) truncated at x^order.
RationalSeries substitute_exponential(const LaurentPolynomial& p, const ExponentialAssignment& assignment,
                                      std::size_t order, SeriesParam param = SeriesParam::x);

// Coefficients joined as "c0 + c1*x + ..." with canonical rationals; for reports.
std::string render_series(const RationalSeries& s);

}  // namespace loopex
