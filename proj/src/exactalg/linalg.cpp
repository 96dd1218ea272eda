#include "loopex/linalg.hpp"

#include <set>

#include "loopex/error.hpp"

namespace loopex {

InterpolationResult interpolate_polynomial(const std::vector<Rational>& nodes, const std::vector<Rational>& values,
                                           std::size_t degree_bound) {
  if (nodes.size() != values.size()) throw Error(ErrorCode::invalid_argument, "nodes and values differ in length");
  InterpolationResult result;
  if (nodes.size() < degree_bound + 1) {
    result.status = InterpolationStatus::too_few_nodes;
    return result;
  }
  std::set<Rational> seen(nodes.begin(), nodes.end());
  if (seen.size() != nodes.size()) {
    result.status = InterpolationStatus::repeated_node;
    return result;
  }
  const std::size_t n = degree_bound + 1;
  // Newton divided differences on the first n nodes.
  std::vector<Rational> dd(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(n));
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - level]);
    }
  }
  // Expand the Newton form into monomial coefficients (Horner from the top).
  std::vector<Rational> coeffs(n, Rational(0));
  coeffs[0] = dd[n - 1];
  for (std::size_t k = n - 1; k-- > 0;) {
    // coeffs <- coeffs * (x - nodes[k]) + dd[k]
    for (std::size_t j = n - 1; j > 0; --j) coeffs[j] = coeffs[j - 1] - nodes[k] * coeffs[j];
    coeffs[0] = -nodes[k] * coeffs[0];
    coeffs[0] += dd[k];
  }
  for (std::size_t i = n; i < nodes.size(); ++i) {
    ++result.margin_checked;
    if (evaluate_polynomial(coeffs, nodes[i]) != values[i]) {
      result.status = InterpolationStatus::degree_bound_violation;
      result.failing_node = i;
      return result;
    }
  }
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  result.coefficients = std::move(coeffs);
  return result;
}

Rational evaluate_polynomial(const std::vector<Rational>& coefficients, const Rational& x) {
  Rational acc = 0;
  for (std::size_t k = coefficients.size(); k-- > 0;) acc = acc * x + coefficients[k];
  return acc;
}

LinearSolution solve_linear_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw Error(ErrorCode::invalid_argument, "rhs length differs from row count");
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  for (const auto& r : a) {
    if (r.size() != cols) throw Error(ErrorCode::invalid_argument, "ragged matrix");
  }
  LinearSolution out;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (a[r][j] != 0) a[i][j] -= f * a[r][j];
      }
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  out.rank = r;
  for (std::size_t i = r; i < rows; ++i) {
    if (b[i] != 0) {
      out.status = LinearStatus::inconsistent;
      return out;
    }
  }
  out.solution.assign(cols, Rational(0));
  for (std::size_t i = 0; i < r; ++i) out.solution[pivot_col[i]] = b[i];
  out.status = r < cols ? LinearStatus::underdetermined : LinearStatus::unique;
  return out;
}

}  // namespace loopex
