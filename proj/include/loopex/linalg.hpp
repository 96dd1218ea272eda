#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "loopex/rational.hpp"

namespace loopex {

enum class InterpolationStatus { ok, degree_bound_violation, too_few_nodes, repeated_node };

struct InterpolationResult {
  InterpolationStatus status = InterpolationStatus::ok;
  // Coefficients of alpha^0 .. alpha^d (trailing zeros trimmed) when status is ok.
  std::vector<Rational> coefficients;
  // Nodes beyond the first d+1 that were checked exactly.
  std::size_t margin_checked = 0;
  // First surplus node that failed the fit.
  std::optional<std::size_t> failing_node;
  bool stable() const { return status == InterpolationStatus::ok; }
};

InterpolationResult interpolate_polynomial(const std::vector<Rational>& nodes, const std::vector<Rational>& values,
                                           std::size_t degree_bound);

Rational evaluate_polynomial(const std::vector<Rational>& coefficients, const Rational& x);

enum class LinearStatus { unique, underdetermined, inconsistent };

struct LinearSolution {
  LinearStatus status = LinearStatus::unique;
  std::vector<Rational> solution;  // a particular solution unless inconsistent
  std::size_t rank = 0;
};

// Gaussian elimination over Q. Rows may outnumber columns.
LinearSolution solve_linear_exact(std::vector<std::vector<Rational>> matrix, std::vector<Rational> rhs);

}  // namespace loopex
