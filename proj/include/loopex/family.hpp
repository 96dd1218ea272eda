#pragma once

#include <vector>

#include "loopex/braid.hpp"
#include "loopex/series.hpp"

namespace loopex {

// J_alpha(K)/[alpha] = sum_k C_k(q) prod_{i=1}^{k} (y_alpha - y_i), y_a = q^a + q^-a.
// Only k <= N/2 matter modulo hbar^{N+1}; the C_k are fitted by Newton
// divided differences from direct values at alpha = 1 .. N/2 + 1 and then
// give J_alpha mod hbar^{N+1} for every alpha.
class ColoredJonesFamily {
 public:
  static ColoredJonesFamily fit(const BraidWord& b, std::size_t order, unsigned jobs = 1);

  std::size_t order() const { return order_; }
  std::size_t node_count() const { return normalized_nodes_.size(); }
  // J_alpha / [alpha].
  RationalSeries normalized(int alpha) const;
  // J_alpha.
  RationalSeries colored_jones(int alpha) const;
  // Directly computed J_alpha/[alpha] at the nodes alpha = 1 .. node_count().
  const RationalSeries& node_value(int alpha) const { return normalized_nodes_.at(static_cast<std::size_t>(alpha - 1)); }
  const std::vector<RationalSeries>& coefficients() const { return cyclotomic_; }

 private:
  std::size_t order_ = 0;
  std::vector<RationalSeries> normalized_nodes_;
  std::vector<RationalSeries> cyclotomic_;  // C_k known to order N - 2k
};

// q^a + q^-a at q = e^hbar.
RationalSeries cyclotomic_node(int a, std::size_t order);

}  // namespace loopex
