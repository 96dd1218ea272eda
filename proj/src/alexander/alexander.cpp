#include "loopex/alexander.hpp"

#include "loopex/error.hpp"

namespace loopex {

namespace {

LaurentPolynomial T(std::int64_t e, const Rational& c = 1) { return LaurentPolynomial::monomial({Var::t}, {e, 0}, c); }
LaurentPolynomial zero() { return LaurentPolynomial({Var::t}); }

LaurentMatrix identity(std::size_t n) {
  LaurentMatrix m(n, std::vector<LaurentPolynomial>(n, zero()));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = T(0);
  return m;
}

// Reduced Burau block for sigma_i (1-based) on n = strands - 1 dimensions.
LaurentMatrix generator(int i, int n) {
  LaurentMatrix m = identity(static_cast<std::size_t>(n));
  const auto k = static_cast<std::size_t>(i - 1);
  m[k][k] = T(1, -1);
  if (i > 1) m[k][k - 1] = T(1);
  if (i < n) m[k][k + 1] = T(0);
  return m;
}

// Inverse block: row k becomes (1/t)(row stuff); derived from generator(i) by hand.
LaurentMatrix generator_inverse(int i, int n) {
  LaurentMatrix m = identity(static_cast<std::size_t>(n));
  const auto k = static_cast<std::size_t>(i - 1);
  m[k][k] = T(-1, -1);
  if (i > 1) m[k][k - 1] = T(0);
  if (i < n) m[k][k + 1] = T(-1);
  return m;
}

}  // namespace

LaurentMatrix matrix_multiply(const LaurentMatrix& a, const LaurentMatrix& b) {
  const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), inner = b.size();
  LaurentMatrix out(n, std::vector<LaurentPolynomial>(m, zero()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return out;
}

LaurentMatrix burau_reduced(const BraidWord& b) {
  const int n = b.strands - 1;
  LaurentMatrix acc = identity(static_cast<std::size_t>(std::max(n, 0)));
  if (n == 0) return acc;
  for (const auto& l : b.letters) {
    acc = matrix_multiply(acc, l.sign > 0 ? generator(l.index, n) : generator_inverse(l.index, n));
  }
  return acc;
}

// Bareiss fraction-free elimination; every division is exact in Q[t, 1/t].
LaurentPolynomial determinant(const LaurentMatrix& input) {
  const std::size_t n = input.size();
  if (n == 0) return T(0);
  LaurentMatrix m = input;
  LaurentPolynomial sign = T(0);
  LaurentPolynomial prev = T(0);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return zero();
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPolynomial num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        auto q = divide_exact(num, prev);
        if (!q) throw Error(ErrorCode::internal, "Bareiss step not exact");
        m[i][j] = std::move(*q);
      }
      m[i][k] = zero();
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

LaurentPolynomial alexander_unnormalized(const BraidWord& b) {
  const int s = b.strands;
  if (s == 1) return T(0);
  LaurentMatrix m = burau_reduced(b);
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = (i == j ? T(0) : zero()) - m[i][j];
  }
  LaurentPolynomial d = determinant(m);
  LaurentPolynomial num = d * (T(0) - T(1));
  auto q = divide_exact(num, T(0) - T(s));
  if (!q) throw Error(ErrorCode::not_exact, "(1 - t^s) does not divide the Burau determinant");
  return *q;
}

LaurentPolynomial alexander_poly(const BraidWord& b) {
  if (closure_component_count(b) != 1) throw Error(ErrorCode::precondition, "braid closure is a link, not a knot");
  LaurentPolynomial p = alexander_unnormalized(b);
  if (p.is_zero()) throw Error(ErrorCode::internal, "vanishing Alexander polynomial for a knot");
  const std::int64_t lo = p.min_exponent(), hi = p.max_exponent();
  if ((lo + hi) % 2 != 0) throw Error(ErrorCode::internal, "no integer-power unit symmetrizes the polynomial");
  p = p.shifted({-(lo + hi) / 2, 0});
  const Rational v = p.sum_of_coefficients();
  if (v == -1) p = -p;
  else if (v != 1) throw Error(ErrorCode::internal, "Alexander polynomial does not take the value +-1 at t = 1");
  if (!is_symmetric_in_t(p)) throw Error(ErrorCode::internal, "normalized Alexander polynomial is not symmetric");
  return p;
}

bool is_symmetric_in_t(const LaurentPolynomial& p) {
  for (const auto& [e, c] : p.terms()) {
    if (p.coefficient({-e[0], 0}) != c) return false;
  }
  return true;
}

LaurentPolynomial alexander_in_u(const LaurentPolynomial& a) {
  if (a.arity() != 1) throw Error(ErrorCode::invalid_argument, "alexander_in_u needs a univariate polynomial");
  if (!is_symmetric_in_t(a)) throw Error(ErrorCode::precondition, "polynomial is not symmetric under t <-> 1/t");
  LaurentPolynomial rest = a.rename({Var::t});
  LaurentPolynomial out({Var::u});
  const LaurentPolynomial u_t = T(1) + T(-1);
  while (!rest.is_zero()) {
    const std::int64_t d = rest.max_exponent();
    const Rational c = rest.coefficient({d, 0});
    out.add_term({d, 0}, c);
    rest -= u_t.pow(static_cast<unsigned>(d)) * c;
  }
  return out;
}

LaurentPolynomial u_to_t(const LaurentPolynomial& q) {
  LaurentPolynomial out = zero();
  const LaurentPolynomial u_t = T(1) + T(-1);
  for (const auto& [e, c] : q.terms()) {
    if (e[0] < 0) throw Error(ErrorCode::invalid_argument, "negative power of u");
    out += u_t.pow(static_cast<unsigned>(e[0])) * c;
  }
  return out;
}

}  // namespace loopex
