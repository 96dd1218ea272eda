#include <numeric>

#include "loopex/error.hpp"
#include "loopex/qsl2.hpp"

namespace loopex {

namespace {

constexpr std::size_t kMaxLetters = 20;

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  }
  void join(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

// Segments (pos, level) with level L identified with 0 by the closure. A
// crossing either keeps strands vertical or joins the two incoming and the
// two outgoing ends. For a positive letter the vertical smoothing is the
// A-smoothing.
LaurentPolynomial jones_kauffman_oracle(const BraidWord& b) {
  const std::size_t L = b.letters.size();
  if (L > kMaxLetters) {
    throw Error(ErrorCode::invalid_argument, "state sum capped at " + std::to_string(kMaxLetters) + " letters");
  }
  const int s = b.strands;
  const std::size_t levels = std::max<std::size_t>(L, 1);
  auto seg = [&](int pos, std::size_t level) { return static_cast<int>((level % levels) * static_cast<std::size_t>(s) + static_cast<std::size_t>(pos)); };
  const std::size_t nseg = levels * static_cast<std::size_t>(s);

  const LaurentPolynomial d = -(LaurentPolynomial::monomial({Var::a}, {2, 0}) + LaurentPolynomial::monomial({Var::a}, {-2, 0}));
  std::vector<LaurentPolynomial> d_powers{LaurentPolynomial::constant({Var::a}, 1)};
  // Accumulate counts by (A-B, loops) first, then assemble.
  std::map<std::pair<int, int>, Integer> tally;
  for (std::uint32_t mask = 0; mask < (1U << L); ++mask) {
    DisjointSets ds(nseg);
    int balance = 0;
    for (std::size_t t = 0; t < L; ++t) {
      const int i = b.letters[t].index - 1;
      for (int pos = 0; pos < s; ++pos) {
        if (pos == i || pos == i + 1) continue;
        ds.join(seg(pos, t), seg(pos, t + 1));
      }
      const bool vertical = ((mask >> t) & 1U) == 0;
      if (vertical) {
        ds.join(seg(i, t), seg(i, t + 1));
        ds.join(seg(i + 1, t), seg(i + 1, t + 1));
      } else {
        ds.join(seg(i, t), seg(i + 1, t));
        ds.join(seg(i, t + 1), seg(i + 1, t + 1));
      }
      const bool a_smoothing = vertical == (b.letters[t].sign > 0);
      balance += a_smoothing ? 1 : -1;
    }
    int loops = 0;
    for (std::size_t v = 0; v < nseg; ++v) {
      if (ds.find(static_cast<int>(v)) == static_cast<int>(v)) ++loops;
    }
    tally[{balance, loops}] += 1;
  }
  LaurentPolynomial bracket({Var::a});
  for (const auto& [key, count] : tally) {
    const auto [balance, loops] = key;
    while (d_powers.size() <= static_cast<std::size_t>(loops)) d_powers.push_back(d_powers.back() * d);
    bracket += d_powers[static_cast<std::size_t>(loops)].shifted({balance, 0}) * Rational(count);
  }
  // (-1)^c (-A^3)^{-w} <D> with A = a; the sign (-1)^c makes the c-component unlink [2]^c.
  const std::int64_t w = writhe(b);
  const int c = closure_component_count(b);
  LaurentPolynomial framing = LaurentPolynomial::monomial({Var::a}, {-3 * w, 0}, (w % 2 == 0) ? 1 : -1);
  LaurentPolynomial out = bracket * framing;
  if (c % 2 == 1) out = -out;
  return out;
}

}  // namespace loopex

namespace loopex {

SkeinTriple skein_triple(const BraidWord& b, std::size_t letter) {
  if (letter >= b.letters.size()) throw Error(ErrorCode::invalid_argument, "letter index out of range");
  SkeinTriple t{b, b, b};
  t.positive.letters[letter].sign = 1;
  t.negative.letters[letter].sign = -1;
  t.smoothed.letters.erase(t.smoothed.letters.begin() + static_cast<std::ptrdiff_t>(letter));
  return t;
}

LaurentPolynomial skein_residual(const SkeinTriple& t) {
  const auto q = LaurentPolynomial::monomial({Var::a}, {4, 0});
  const auto q_inv = LaurentPolynomial::monomial({Var::a}, {-4, 0});
  const auto gap = LaurentPolynomial::monomial({Var::a}, {2, 0}) - LaurentPolynomial::monomial({Var::a}, {-2, 0});
  return q * jones_kauffman_oracle(t.positive) - q_inv * jones_kauffman_oracle(t.negative) -
         gap * jones_kauffman_oracle(t.smoothed);
}

}  // namespace loopex
