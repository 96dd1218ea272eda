#pragma once

#include <optional>
#include <string>
#include <vector>

#include "loopex/braid.hpp"
#include "loopex/laurent.hpp"
#include "loopex/series.hpp"

namespace loopex {

// How J_alpha is obtained for the color sweep.
//   family: direct values at alpha <= N/2 + 1, cyclotomic fit for the rest.
//   direct: one braid-closure contraction per color.
enum class ColorSource { family, direct };

struct SweepOptions {
  ColorSource source = ColorSource::family;
  unsigned jobs = 1;
};

// J_alpha / [alpha] for alpha = 1 .. colors, truncated at hbar^order.
struct ColorSweep {
  std::size_t order = 0;
  std::vector<RationalSeries> normalized;  // index alpha - 1
  int colors() const { return static_cast<int>(normalized.size()); }
};

ColorSweep color_sweep(const BraidWord& b, int colors, std::size_t order, const SweepOptions& options = {});

// c[n][m] = coefficient of alpha^m hbar^n, from per-color series by exact
// interpolation with degree bound 2n.
struct MMArray {
  int colors = 0;
  std::size_t order = 0;
  bool delta_multiplied = true;
  bool colors_overridden = false;  // fewer than 2N + 4 colors accepted on request
  std::vector<std::vector<Rational>> c;  // row n has 2n + 1 entries
  std::vector<std::size_t> row_degree;   // actual degree of each row
  std::size_t min_margin = 0;            // fewest surplus nodes checked in any row

  Rational entry(std::size_t n, std::size_t m) const;
};

std::size_t minimum_colors(std::size_t order);

// Throws Error(precondition) when colors < 2N + 4 and allow_few_colors is
// false, and Error(not_exact) naming n when a row violates its degree bound.
MMArray mm_array(const ColorSweep& sweep, const LaurentPolynomial& delta, bool multiply_by_delta,
                 bool allow_few_colors = false);

struct MMRResult {
  bool pass = false;
  RationalSeries diagonal{SeriesParam::x, 0};
  RationalSeries expected{SeriesParam::x, 0};
  std::optional<std::size_t> first_mismatch;
};

// Diagonal of the J/[alpha] array against 1/Delta(e^x).
MMRResult mmr_diagonal_check(const MMArray& unmultiplied, const LaurentPolynomial& delta, std::size_t order);

enum class LoopBasis { hbar, h };

struct LoopLevel {
  int loop = 0;
  LaurentPolynomial poly{{Var::t}};
  int support = 0;           // ansatz exponents in [-support, support]
  std::size_t equations = 0;
  Rational residual = 0;     // always 0 on success
  std::string parity;        // "symmetric", "antisymmetric", "zero" or "none"
};

struct LoopPolynomials {
  LoopBasis basis = LoopBasis::hbar;
  std::vector<LoopLevel> levels;  // levels[i].loop == i + 1

  const LaurentPolynomial& P(int loop) const;
};

struct ExtractionResult {
  bool ok = false;
  int failed_loop = 0;
  std::string message;
  LoopPolynomials loops;
};

// f_l(x) = sum_m c[m+l][m] x^m equals P_l(e^x)/Delta(e^x)^{2l}; solve for the
// Laurent coefficients of P_l with support growing from d0 until the
// overdetermined system is exactly consistent.
ExtractionResult extract_loop_polys(const MMArray& multiplied, const LaurentPolynomial& delta, int max_loop,
                                    int d0, int support_cap = 64);

// P'_1 = P_1, P'_2 = P_2 - Delta^2 P_1 / 2.
LoopPolynomials convert_hbar_to_h(const LoopPolynomials& lp, const LaurentPolynomial& delta);

struct ResubstitutionResult {
  bool pass = false;
  std::size_t protected_order = 0;
  std::optional<std::size_t> first_mismatch;
  RationalSeries rebuilt{SeriesParam::hbar, 0};
  RationalSeries direct{SeriesParam::hbar, 0};
};

// Rebuild [alpha]/Delta(q^alpha) (1 + sum P'_n(q^alpha) h^n / Delta(q^alpha)^{2n})
// and compare with J_alpha through hbar^{loop count}.
ResubstitutionResult resubstitute_check(const LoopPolynomials& h_basis, const LaurentPolynomial& delta,
                                        const RationalSeries& colored_jones, int alpha);

std::string laurent_parity(const LaurentPolynomial& p);

}  // namespace loopex
