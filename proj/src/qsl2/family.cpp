#include "loopex/family.hpp"

#include "loopex/error.hpp"
#include "loopex/parallel.hpp"
#include "loopex/qsl2.hpp"

namespace loopex {

namespace {

// Drop the first `shift` coefficients of a series whose valuation is at least `shift`.
RationalSeries shift_down(const RationalSeries& s, std::size_t shift) {
  RationalSeries out(s.parameter(), s.order() - shift);
  for (std::size_t k = 0; k <= out.order(); ++k) out[k] = s[k + shift];
  return out;
}

}  // namespace

RationalSeries cyclotomic_node(int a, std::size_t order) {
  return exp_linear(SeriesParam::hbar, a, order) + exp_linear(SeriesParam::hbar, -a, order);
}

ColoredJonesFamily ColoredJonesFamily::fit(const BraidWord& b, std::size_t order, unsigned jobs) {
  if (order == 0) throw Error(ErrorCode::invalid_argument, "truncation order 0 carries no information");
  ColoredJonesFamily fam;
  fam.order_ = order;
  const std::size_t K = order / 2;
  const std::size_t nodes = K + 1;
  fam.normalized_nodes_.assign(nodes, RationalSeries(SeriesParam::hbar, order));
  // Largest colors are the expensive ones; start them first.
  parallel_for(nodes, jobs, [&](std::size_t idx) {
    const int alpha = static_cast<int>(nodes - idx);
    const auto j = colored_jones_series(b, alpha, order);
    fam.normalized_nodes_[static_cast<std::size_t>(alpha - 1)] = j.series * series_invert(quantum_integer(alpha, order));
  });

  std::vector<RationalSeries> y;
  for (std::size_t i = 1; i <= nodes; ++i) y.push_back(cyclotomic_node(static_cast<int>(i), order));
  std::vector<RationalSeries> dd = fam.normalized_nodes_;
  fam.cyclotomic_.push_back(dd[0]);
  for (std::size_t level = 1; level < nodes; ++level) {
    for (std::size_t j = nodes - 1; j >= level; --j) {
      RationalSeries num = dd[j] - dd[j - 1];
      RationalSeries den = y[j] - y[j - level];
      if (num.valuation() < 2) {
        throw Error(ErrorCode::not_exact, "divided difference not divisible by the node gap (level " +
                                              std::to_string(level) + ")");
      }
      dd[j] = divide_with_valuation(num, den);
    }
    fam.cyclotomic_.push_back(dd[level]);
  }
  return fam;
}

RationalSeries ColoredJonesFamily::normalized(int alpha) const {
  if (alpha < 1) throw Error(ErrorCode::invalid_argument, "color must be at least 1");
  const std::size_t N = order_;
  RationalSeries total(SeriesParam::hbar, N);
  const RationalSeries ya = cyclotomic_node(alpha, N);
  RationalSeries product = RationalSeries::constant(SeriesParam::hbar, N, 1);
  for (std::size_t k = 0; k < cyclotomic_.size(); ++k) {
    if (k > 0) product *= ya - cyclotomic_node(static_cast<int>(k), N);
    if (2 * k > N) break;
    // product has valuation >= 2k; C_k is known to order N - 2k.
    const RationalSeries reduced = shift_down(product, 2 * k);
    const RationalSeries term = reduced * cyclotomic_[k];
    for (std::size_t n = 0; n <= term.order() && n + 2 * k <= N; ++n) total[n + 2 * k] += term[n];
  }
  return total;
}

RationalSeries ColoredJonesFamily::colored_jones(int alpha) const {
  return normalized(alpha) * quantum_integer(alpha, order_);
}

}  // namespace loopex
