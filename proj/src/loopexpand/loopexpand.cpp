#include "loopex/loopexpand.hpp"

#include "loopex/error.hpp"
#include "loopex/family.hpp"
#include "loopex/linalg.hpp"
#include "loopex/parallel.hpp"
#include "loopex/qsl2.hpp"

namespace loopex {

namespace {

RationalSeries delta_at_exponential(const LaurentPolynomial& delta, std::int64_t slope, std::size_t order,
                                    SeriesParam param) {
  return substitute_exponential(delta.rename({Var::t}), {{Var::t, slope}}, order, param);
}

RationalSeries power(const RationalSeries& s, unsigned k) {
  RationalSeries out = RationalSeries::constant(s.parameter(), s.order(), 1);
  for (unsigned i = 0; i < k; ++i) out *= s;
  return out;
}

}  // namespace

ColorSweep color_sweep(const BraidWord& b, int colors, std::size_t order, const SweepOptions& options) {
  if (colors < 1) throw Error(ErrorCode::invalid_argument, "color count must be positive");
  ColorSweep sweep;
  sweep.order = order;
  sweep.normalized.assign(static_cast<std::size_t>(colors), RationalSeries(SeriesParam::hbar, order));
  if (options.source == ColorSource::family) {
    const auto fam = ColoredJonesFamily::fit(b, order, options.jobs);
    for (int a = 1; a <= colors; ++a) {
      sweep.normalized[static_cast<std::size_t>(a - 1)] =
          a <= static_cast<int>(fam.node_count()) ? fam.node_value(a) : fam.normalized(a);
    }
    return sweep;
  }
  parallel_for(static_cast<std::size_t>(colors), options.jobs, [&](std::size_t idx) {
    const int a = colors - static_cast<int>(idx);
    const auto j = colored_jones_series(b, a, order);
    sweep.normalized[static_cast<std::size_t>(a - 1)] = j.series * series_invert(quantum_integer(a, order));
  });
  return sweep;
}

Rational MMArray::entry(std::size_t n, std::size_t m) const {
  if (n >= c.size() || m >= c[n].size()) return 0;
  return c[n][m];
}

std::size_t minimum_colors(std::size_t order) { return 2 * order + 4; }

MMArray mm_array(const ColorSweep& sweep, const LaurentPolynomial& delta, bool multiply_by_delta,
                 bool allow_few_colors) {
  const std::size_t N = sweep.order;
  const int A = sweep.colors();
  if (N < 2) throw Error(ErrorCode::precondition, "loop expansion needs truncation order at least 2");
  const bool few = static_cast<std::size_t>(A) < minimum_colors(N);
  if (few && !allow_few_colors) {
    throw Error(ErrorCode::precondition, "colors " + std::to_string(A) + " below 2N + 4 = " +
                                             std::to_string(minimum_colors(N)));
  }
  std::vector<RationalSeries> values;
  values.reserve(static_cast<std::size_t>(A));
  for (int a = 1; a <= A; ++a) {
    RationalSeries s = sweep.normalized[static_cast<std::size_t>(a - 1)];
    if (multiply_by_delta) s = s * delta_at_exponential(delta, a, N, SeriesParam::hbar);
    values.push_back(std::move(s));
  }
  std::vector<Rational> nodes;
  for (int a = 1; a <= A; ++a) nodes.emplace_back(a);

  MMArray out;
  out.colors = A;
  out.order = N;
  out.delta_multiplied = multiply_by_delta;
  out.colors_overridden = few;
  out.min_margin = static_cast<std::size_t>(A);
  for (std::size_t n = 0; n <= N; ++n) {
    std::vector<Rational> row;
    for (const auto& s : values) row.push_back(s[n]);
    const auto fit = interpolate_polynomial(nodes, row, 2 * n);
    if (fit.status == InterpolationStatus::too_few_nodes) {
      throw Error(ErrorCode::precondition, "too few colors for degree bound " + std::to_string(2 * n) +
                                               " at hbar^" + std::to_string(n));
    }
    if (!fit.stable()) {
      throw Error(ErrorCode::not_exact,
                  "degree bound " + std::to_string(2 * n) + " violated at hbar^" + std::to_string(n) +
                      (fit.failing_node ? " (color " + std::to_string(*fit.failing_node + 1) + ")" : ""));
    }
    std::vector<Rational> coeffs(2 * n + 1, Rational(0));
    for (std::size_t m = 0; m < fit.coefficients.size(); ++m) coeffs[m] = fit.coefficients[m];
    out.row_degree.push_back(fit.coefficients.empty() ? 0 : fit.coefficients.size() - 1);
    out.c.push_back(std::move(coeffs));
    out.min_margin = std::min(out.min_margin, fit.margin_checked);
  }
  return out;
}

MMRResult mmr_diagonal_check(const MMArray& unmultiplied, const LaurentPolynomial& delta, std::size_t order) {
  if (unmultiplied.delta_multiplied) {
    throw Error(ErrorCode::precondition, "diagonal check needs the J/[alpha] array");
  }
  if (order > unmultiplied.order) throw Error(ErrorCode::precondition, "array order below requested order");
  MMRResult r;
  r.diagonal = RationalSeries(SeriesParam::x, order);
  for (std::size_t n = 0; n <= order; ++n) r.diagonal[n] = unmultiplied.entry(n, n);
  r.expected = series_invert(delta_at_exponential(delta, 1, order, SeriesParam::x));
  for (std::size_t n = 0; n <= order; ++n) {
    if (r.diagonal[n] != r.expected[n]) {
      r.first_mismatch = n;
      break;
    }
  }
  r.pass = !r.first_mismatch;
  return r;
}

const LaurentPolynomial& LoopPolynomials::P(int loop) const {
  if (loop < 1 || static_cast<std::size_t>(loop) > levels.size()) {
    throw Error(ErrorCode::invalid_argument, "loop " + std::to_string(loop) + " not extracted");
  }
  return levels[static_cast<std::size_t>(loop - 1)].poly;
}

std::string laurent_parity(const LaurentPolynomial& p) {
  if (p.is_zero()) return "zero";
  const auto flipped = p.transform_exponents({{{-1, 0}, {0, 1}}}, p.variables());
  if (flipped == p) return "symmetric";
  if (flipped == -p) return "antisymmetric";
  return "none";
}

ExtractionResult extract_loop_polys(const MMArray& multiplied, const LaurentPolynomial& delta, int max_loop,
                                    int d0, int support_cap) {
  if (!multiplied.delta_multiplied) throw Error(ErrorCode::precondition, "extraction needs the Delta-multiplied array");
  if (max_loop < 1) throw Error(ErrorCode::invalid_argument, "loop depth must be at least 1");
  const std::size_t N = multiplied.order;
  ExtractionResult result;
  result.loops.basis = LoopBasis::hbar;
  for (int l = 1; l <= max_loop; ++l) {
    const auto ul = static_cast<std::size_t>(l);
    if (ul > N) {
      result.failed_loop = l;
      result.message = "loop " + std::to_string(l) + " exceeds truncation order";
      return result;
    }
    const std::size_t M = N - ul;
    RationalSeries f(SeriesParam::x, M);
    for (std::size_t m = 0; m <= M; ++m) f[m] = multiplied.entry(m + ul, m);
    const RationalSeries g = f * power(delta_at_exponential(delta, 1, M, SeriesParam::x), 2 * ul);
    // sum_j p_j j^m = m! g_m for m = 0..M.
    std::vector<Rational> rhs;
    for (std::size_t m = 0; m <= M; ++m) rhs.push_back(g[m] * Rational(factorial(static_cast<unsigned>(m))));
    const int dmax = static_cast<int>((M + 1) / 2) - 1;  // 2d + 1 < M + 1
    bool solved = false;
    for (int d = std::min(std::max(d0, 0), dmax); d <= std::min(dmax, support_cap); ++d) {
      std::vector<std::vector<Rational>> mat;
      for (std::size_t m = 0; m <= M; ++m) {
        std::vector<Rational> rowv;
        for (int j = -d; j <= d; ++j) {
          Integer pw = 1;
          for (std::size_t k = 0; k < m; ++k) pw *= j;
          rowv.emplace_back(pw);
        }
        mat.push_back(std::move(rowv));
      }
      const auto sol = solve_linear_exact(mat, rhs);
      if (sol.status != LinearStatus::unique) continue;
      LoopLevel level;
      level.loop = l;
      level.support = d;
      level.equations = M + 1;
      Rational worst = 0;
      for (std::size_t m = 0; m <= M; ++m) {
        Rational acc = 0;
        for (std::size_t k = 0; k < sol.solution.size(); ++k) acc += mat[m][k] * sol.solution[k];
        acc -= rhs[m];
        if (abs(acc) > worst) worst = abs(acc);
      }
      if (worst != 0) throw Error(ErrorCode::internal, "linear solver returned a nonzero residual");
      level.residual = worst;
      LaurentPolynomial p({Var::t});
      for (int j = -d; j <= d; ++j) p.add_term({j, 0}, sol.solution[static_cast<std::size_t>(j + d)]);
      level.poly = p;
      level.parity = laurent_parity(p);
      result.loops.levels.push_back(std::move(level));
      solved = true;
      break;
    }
    if (!solved) {
      result.failed_loop = l;
      result.message = "no consistent Laurent support for loop " + std::to_string(l) + " with " +
                       std::to_string(M + 1) + " equations";
      return result;
    }
  }
  result.ok = true;
  return result;
}

LoopPolynomials convert_hbar_to_h(const LoopPolynomials& lp, const LaurentPolynomial& delta) {
  if (lp.basis != LoopBasis::hbar) throw Error(ErrorCode::invalid_argument, "input is not in the hbar basis");
  if (lp.levels.size() > 2) throw Error(ErrorCode::invalid_argument, "basis change implemented for at most 2 loops");
  LoopPolynomials out = lp;
  out.basis = LoopBasis::h;
  if (out.levels.size() == 2) {
    const LaurentPolynomial d = delta.rename({Var::t});
    LaurentPolynomial p2 = lp.levels[1].poly - d * d * lp.levels[0].poly * Rational(1, 2);
    out.levels[1].poly = p2;
    out.levels[1].parity = laurent_parity(p2);
  }
  return out;
}

ResubstitutionResult resubstitute_check(const LoopPolynomials& h_basis, const LaurentPolynomial& delta,
                                        const RationalSeries& colored_jones, int alpha) {
  if (h_basis.basis != LoopBasis::h) throw Error(ErrorCode::invalid_argument, "resubstitution expects the h basis");
  const std::size_t N = colored_jones.order();
  ResubstitutionResult r;
  const RationalSeries d = delta_at_exponential(delta, alpha, N, SeriesParam::hbar);
  const RationalSeries d_inv = series_invert(d);
  const RationalSeries d_inv2 = d_inv * d_inv;
  RationalSeries h = exp_linear(SeriesParam::hbar, 1, N);
  h[0] -= 1;
  RationalSeries sum = RationalSeries::constant(SeriesParam::hbar, N, 1);
  RationalSeries hpow = RationalSeries::constant(SeriesParam::hbar, N, 1);
  RationalSeries dpow = RationalSeries::constant(SeriesParam::hbar, N, 1);
  for (const auto& level : h_basis.levels) {
    hpow *= h;
    dpow *= d_inv2;
    const RationalSeries p = substitute_exponential(level.poly.rename({Var::t}), {{Var::t, alpha}}, N, SeriesParam::hbar);
    sum += p * hpow * dpow;
  }
  r.rebuilt = quantum_integer(alpha, N) * d_inv * sum;
  r.direct = colored_jones;
  r.protected_order = std::min(h_basis.levels.size(), N);
  for (std::size_t k = 0; k <= r.protected_order; ++k) {
    if (r.rebuilt[k] != colored_jones[k]) {
      r.first_mismatch = k;
      break;
    }
  }
  r.pass = !r.first_mismatch;
  return r;
}

}  // namespace loopex
