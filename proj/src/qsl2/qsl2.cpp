#include "loopex/qsl2.hpp"

#include <memory>
#include <mutex>

#include "loopex/error.hpp"

namespace loopex {

namespace {

LaurentPolynomial A(std::int64_t e, const Rational& c = 1) { return LaurentPolynomial::monomial({Var::a}, {e, 0}, c); }

LaurentPolynomial quantum_factorial(int k) {
  LaurentPolynomial f = A(0);
  for (int j = 2; j <= k; ++j) f *= quantum_integer_poly(j);
  return f;
}

LaurentPolynomial quantum_binomial(int n, int k) {
  auto q = divide_exact(quantum_factorial(n), quantum_factorial(k) * quantum_factorial(n - k));
  if (!q) throw Error(ErrorCode::internal, "quantum binomial is not a Laurent polynomial");
  return *q;
}

LocalTerm to_term(int out_a, int out_b, int valuation, const LaurentPolynomial& p) {
  LocalTerm t{out_a, out_b, valuation, {}};
  for (const auto& [e, c] : p.terms()) {
    if (!is_integer(c) || !c.get_num().fits_slong_p()) throw Error(ErrorCode::overflow, "R-matrix coefficient too large");
    t.poly.push_back({e[0], c.get_num().get_si()});
  }
  return t;
}

std::unique_ptr<ClosureModel> build_sl2_model(int alpha) {
  auto model = std::make_unique<ClosureModel>();
  const int m = alpha - 1;
  model->dim = alpha;
  model->denominator = 4;
  model->metric = DriftMetric::absolute_difference;
  model->twist = static_cast<std::int64_t>(alpha) * alpha - 1;
  auto h = [m](int i) { return static_cast<std::int64_t>(m - 2 * i); };
  for (int i = 0; i < alpha; ++i) model->pivot.push_back(2 * h(i));
  const LaurentPolynomial gap = A(2) - A(-2);  // q^{1/2} - q^{-1/2}
  model->positive.dim = model->negative.dim = alpha;
  model->positive.terms.resize(static_cast<std::size_t>(alpha * alpha));
  model->negative.terms.resize(static_cast<std::size_t>(alpha * alpha));
  for (int i = 0; i < alpha; ++i) {
    for (int j = 0; j < alpha; ++j) {
      // R-check(e_i (x) e_j) = sum_n c_n e_{j+n} (x) e_{i-n}
      for (int n = 0; n <= std::min(i, m - j); ++n) {
        LaurentPolynomial c = gap.pow(static_cast<unsigned>(n)) * quantum_binomial(i, n);
        for (int k = 0; k < n; ++k) c *= quantum_integer_poly(m - j - k);
        c = c.shifted({h(i - n) * h(j + n) + n * (n - 1), 0});
        model->positive.terms[static_cast<std::size_t>(i * alpha + j)].push_back(to_term(j + n, i - n, n, c));
      }
      // inverse: e_a (x) e_b -> sum_n (-1)^n ... e_{b-n} (x) e_{a+n}
      const int a = i, b = j;
      for (int n = 0; n <= std::min(b, m - a); ++n) {
        LaurentPolynomial c = gap.pow(static_cast<unsigned>(n)) * quantum_binomial(b, n);
        for (int k = 0; k < n; ++k) c *= quantum_integer_poly(m - a - k);
        c = c.shifted({-(h(a) * h(b) + n * (n - 1)), 0});
        if (n % 2 == 1) c = -c;
        model->negative.terms[static_cast<std::size_t>(a * alpha + b)].push_back(to_term(b - n, a + n, n, c));
      }
    }
  }
  return model;
}

}  // namespace

LaurentPolynomial quantum_integer_poly(int k) {
  if (k < 0) return -quantum_integer_poly(-k);
  LaurentPolynomial p({Var::a});
  for (int j = 0; j < k; ++j) p.add_term({2 * (k - 1 - 2 * j), 0}, 1);
  return p;
}

RationalSeries quantum_integer(int alpha, std::size_t order) {
  if (alpha < 1) throw Error(ErrorCode::invalid_argument, "color must be at least 1");
  return quarter_power_series(quantum_integer_poly(alpha), order);
}

const ClosureModel& sl2_model(int alpha) {
  if (alpha < 1) throw Error(ErrorCode::invalid_argument, "color must be at least 1");
  if (alpha > 255) throw Error(ErrorCode::invalid_argument, "color too large");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<ClosureModel>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(alpha);
  if (it == cache.end()) it = cache.emplace(alpha, build_sl2_model(alpha)).first;
  return *it->second;
}

RMatrixSeries rmatrix_sl2(int alpha, std::size_t order) {
  const ClosureModel& model = sl2_model(alpha);
  RMatrixSeries out;
  out.alpha = alpha;
  auto convert = [&](const LocalOperator& op, auto& dest) {
    for (int i = 0; i < alpha; ++i) {
      for (int j = 0; j < alpha; ++j) {
        auto& list = dest[{i, j}];
        for (const auto& term : op.terms[static_cast<std::size_t>(i * alpha + j)]) {
          LaurentPolynomial p({Var::a});
          for (const auto& [e, c] : term.poly) p.add_term({e, 0}, c);
          list.push_back({{term.out_a, term.out_b}, quarter_power_series(p, order)});
        }
      }
    }
  };
  convert(model.positive, out.r);
  convert(model.negative, out.r_inverse);
  return out;
}

ColoredJonesSeries colored_jones_series(const BraidWord& b, int alpha, std::size_t order, ClosureStats* stats) {
  if (closure_component_count(b) != 1) throw Error(ErrorCode::precondition, "braid closure is a link, not a knot");
  if (order == 0) throw Error(ErrorCode::invalid_argument, "truncation order 0 carries no information");
  ColoredJonesSeries out;
  out.alpha = alpha;
  out.series = closure_invariant(sl2_model(alpha), b, order, stats);
  return out;
}

RationalSeries quarter_power_series(const LaurentPolynomial& p, std::size_t order) {
  // a = e^{hbar/4}: expand at slope 1 in x = hbar/4, then rescale.
  RationalSeries s = substitute_exponential(p, {{p.variables()[0], 1}}, order, SeriesParam::hbar);
  return s.rescale(Rational(1, 4));
}

LaurentPolynomial invert_quarter_power(const LaurentPolynomial& p) {
  return p.transform_exponents({{{-1, 0}, {0, 1}}}, p.variables());
}

}  // namespace loopex
