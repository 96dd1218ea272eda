#include "loopex/closure.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "loopex/error.hpp"

namespace loopex {

namespace {

// Residues stay below 2^30, so fifteen products fit in a 64-bit accumulator.
constexpr std::uint64_t kPrimeCeiling = 1ULL << 30;
constexpr int kLazyTerms = 15;
constexpr double kPrimeBits = 29.9;

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t prime_at(std::size_t index) {
  static std::mutex mu;
  static std::vector<std::uint64_t> pool;
  std::lock_guard<std::mutex> lock(mu);
  std::uint64_t candidate = pool.empty() ? kPrimeCeiling - 1 : pool.back() - 2;
  while (pool.size() <= index) {
    if (is_prime(candidate)) pool.push_back(candidate);
    candidate -= 2;
  }
  return pool[index];
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

std::uint64_t reduce_signed(std::int64_t v, std::uint64_t p) {
  const std::int64_t m = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(m < 0 ? m + static_cast<std::int64_t>(p) : m);
}

// Word geometry shared by the bound pass and the residue passes.
struct WordPlan {
  int strands = 1;
  int dim = 1;
  std::size_t states = 1;
  std::vector<std::size_t> place;                    // dim^pos
  std::vector<std::uint8_t> digits;                  // states x strands
  std::vector<std::vector<int>> future;              // future[t][pos] = final position
  std::vector<int> letter_pos;                       // 0-based left position per letter
  std::vector<int> letter_sign;
  DriftMetric metric = DriftMetric::absolute_difference;
  std::size_t order = 0;

  int digit(std::size_t y, int pos) const { return digits[y * static_cast<std::size_t>(strands) + static_cast<std::size_t>(pos)]; }

  // Remaining hbar budget for state y at step t when the trace returns to x.
  int budget(std::size_t y, std::size_t t, std::size_t x) const {
    long dist = 0;
    const auto& fut = future[t];
    for (int pos = 0; pos < strands; ++pos) {
      const int a = digit(y, pos);
      const int b = digit(x, fut[static_cast<std::size_t>(pos)]);
      if (metric == DriftMetric::absolute_difference) dist += a > b ? a - b : b - a;
      else dist += a != b;
    }
    return static_cast<int>(order) - static_cast<int>((dist + 1) / 2);
  }
};

WordPlan make_plan(const ClosureModel& model, const BraidWord& b, std::size_t order) {
  WordPlan plan;
  plan.strands = b.strands;
  plan.dim = model.dim;
  plan.metric = model.metric;
  plan.order = order;
  double approx = std::pow(static_cast<double>(model.dim), b.strands);
  if (approx > 4e7) throw Error(ErrorCode::invalid_argument, "state space too large for the closure evaluator");
  plan.place.resize(static_cast<std::size_t>(b.strands));
  std::size_t w = 1;
  for (int pos = 0; pos < b.strands; ++pos) {
    plan.place[static_cast<std::size_t>(pos)] = w;
    w *= static_cast<std::size_t>(model.dim);
  }
  plan.states = w;
  plan.digits.resize(w * static_cast<std::size_t>(b.strands));
  for (std::size_t y = 0; y < w; ++y) {
    std::size_t rest = y;
    for (int pos = 0; pos < b.strands; ++pos) {
      plan.digits[y * static_cast<std::size_t>(b.strands) + static_cast<std::size_t>(pos)] =
          static_cast<std::uint8_t>(rest % static_cast<std::size_t>(model.dim));
      rest /= static_cast<std::size_t>(model.dim);
    }
  }
  const std::size_t L = b.letters.size();
  plan.future.assign(L + 1, std::vector<int>(static_cast<std::size_t>(b.strands)));
  for (int pos = 0; pos < b.strands; ++pos) plan.future[L][static_cast<std::size_t>(pos)] = pos;
  for (std::size_t t = L; t-- > 0;) {
    const int i = b.letters[t].index - 1;
    for (int pos = 0; pos < b.strands; ++pos) {
      int moved = pos == i ? i + 1 : pos == i + 1 ? i : pos;
      plan.future[t][static_cast<std::size_t>(pos)] = plan.future[t + 1][static_cast<std::size_t>(moved)];
    }
  }
  for (const auto& l : b.letters) {
    plan.letter_pos.push_back(l.index - 1);
    plan.letter_sign.push_back(l.sign);
  }
  return plan;
}

void check_operator(const LocalOperator& op, int dim) {
  if (op.dim != dim || op.terms.size() != static_cast<std::size_t>(dim * dim)) {
    throw Error(ErrorCode::invalid_argument, "crossing operator does not match the module dimension");
  }
}

// Sparse vector over basis states with per-state truncation order.
template <class Cell>
struct SparseVector {
  std::vector<Cell> cells;
  std::vector<int> order;  // -1 when inactive
  std::vector<std::size_t> active;
  std::size_t width = 1;

  void init(std::size_t states, std::size_t w) {
    width = w;
    cells.assign(states * w, Cell{});
    order.assign(states, -1);
    active.clear();
  }
  Cell* row(std::size_t y) { return cells.data() + y * width; }
  bool touch(std::size_t y, int ord) {
    if (order[y] >= 0) return false;
    order[y] = ord;
    active.push_back(y);
    return true;
  }
  void clear() {
    for (std::size_t y : active) {
      std::fill(row(y), row(y) + width, Cell{});
      order[y] = -1;
    }
    active.clear();
  }
};

struct BoundCell {
  double weight = 0;
  std::int64_t exponent = 0;
};

struct TermInfo {
  double l1 = 0;
  std::int64_t max_abs_exponent = 0;
};

TermInfo term_info(const LocalTerm& term) {
  TermInfo info;
  for (const auto& [e, c] : term.poly) {
    info.l1 += std::fabs(static_cast<double>(c));
    info.max_abs_exponent = std::max(info.max_abs_exponent, e < 0 ? -e : e);
  }
  return info;
}

std::int64_t pivot_exponent(const ClosureModel& model, const WordPlan& plan, std::size_t x) {
  std::int64_t e = 0;
  for (int pos = 0; pos < plan.strands; ++pos) e += model.pivot[static_cast<std::size_t>(plan.digit(x, pos))];
  return e;
}

// log2 of a bound on |D^k k! r_k| over k <= order for every trace coefficient.
double bound_bits(const ClosureModel& model, const WordPlan& plan, std::size_t* transitions) {
  std::vector<std::vector<TermInfo>> info_pos(model.positive.terms.size()), info_neg(model.negative.terms.size());
  for (std::size_t i = 0; i < info_pos.size(); ++i) {
    for (const auto& t : model.positive.terms[i]) info_pos[i].push_back(term_info(t));
    for (const auto& t : model.negative.terms[i]) info_neg[i].push_back(term_info(t));
  }
  SparseVector<BoundCell> cur, next;
  cur.init(plan.states, 1);
  next.init(plan.states, 1);
  double total_weight = 0;
  std::int64_t max_exponent = 1;
  for (std::size_t x = 0; x < plan.states; ++x) {
    const int o0 = plan.budget(x, 0, x);
    if (o0 < 0) continue;
    cur.touch(x, o0);
    cur.row(x)->weight = 1;
    for (std::size_t t = 0; t < plan.letter_pos.size(); ++t) {
      const int pos = plan.letter_pos[t];
      const LocalOperator& op = plan.letter_sign[t] > 0 ? model.positive : model.negative;
      const auto& infos = plan.letter_sign[t] > 0 ? info_pos : info_neg;
      for (std::size_t y : cur.active) {
        const int a = plan.digit(y, pos), b = plan.digit(y, pos + 1);
        const std::size_t slot = static_cast<std::size_t>(a * plan.dim + b);
        const BoundCell& from = *cur.row(y);
        for (std::size_t k = 0; k < op.terms[slot].size(); ++k) {
          const LocalTerm& term = op.terms[slot][k];
          const std::size_t y2 = y + (static_cast<std::size_t>(term.out_a) - static_cast<std::size_t>(a)) * plan.place[static_cast<std::size_t>(pos)] +
                                 (static_cast<std::size_t>(term.out_b) - static_cast<std::size_t>(b)) * plan.place[static_cast<std::size_t>(pos + 1)];
          const int o2 = plan.budget(y2, t + 1, x);
          if (o2 < term.valuation) continue;
          next.touch(y2, o2);
          BoundCell& to = *next.row(y2);
          to.weight += from.weight * infos[slot][k].l1;
          to.exponent = std::max(to.exponent, from.exponent + infos[slot][k].max_abs_exponent);
          if (transitions) ++*transitions;
        }
      }
      cur.clear();
      std::swap(cur, next);
    }
    if (cur.order[x] >= 0) {
      total_weight += cur.row(x)->weight;
      const std::int64_t pe = pivot_exponent(model, plan, x);
      max_exponent = std::max(max_exponent, cur.row(x)->exponent + (pe < 0 ? -pe : pe));
    }
    cur.clear();
  }
  if (total_weight == 0) return 0;
  // Double rounding is absorbed by the extra margin bits.
  return std::log2(total_weight) + static_cast<double>(plan.order) * std::log2(static_cast<double>(max_exponent)) + 8;
}

// e^{(e/D) hbar} truncated, modulo p.
std::vector<std::uint64_t> exp_series_mod(std::int64_t e, std::uint64_t inv_d, const std::vector<std::uint64_t>& inv_fact,
                                          std::size_t order, std::uint64_t p) {
  std::vector<std::uint64_t> out(order + 1);
  const std::uint64_t rate = mulmod(reduce_signed(e, p), inv_d, p);
  std::uint64_t power = 1;
  for (std::size_t k = 0; k <= order; ++k) {
    out[k] = mulmod(power, inv_fact[k], p);
    power = mulmod(power, rate, p);
  }
  return out;
}

std::vector<std::uint64_t> poly_series_mod(const LocalTerm& term, std::uint64_t inv_d,
                                           const std::vector<std::uint64_t>& inv_fact, std::size_t order,
                                           std::uint64_t p) {
  std::vector<std::uint64_t> out(order + 1, 0);
  for (const auto& [e, c] : term.poly) {
    const auto s = exp_series_mod(e, inv_d, inv_fact, order, p);
    const std::uint64_t cm = reduce_signed(c, p);
    for (std::size_t k = 0; k <= order; ++k) out[k] = (out[k] + mulmod(cm, s[k], p)) % p;
  }
  return out;
}

// Trace coefficients r_k modulo p.
std::vector<std::uint64_t> trace_mod(const ClosureModel& model, const WordPlan& plan, std::uint64_t p) {
  const std::size_t N = plan.order;
  const std::size_t width = N + 1;
  std::vector<std::uint64_t> inv_fact(width);
  std::uint64_t f = 1;
  for (std::size_t k = 0; k <= N; ++k) {
    if (k > 0) f = mulmod(f, k % p, p);
    inv_fact[k] = invmod(f, p);
  }
  const std::uint64_t inv_d = invmod(static_cast<std::uint64_t>(model.denominator), p);
  auto build = [&](const LocalOperator& op) {
    std::vector<std::vector<std::vector<std::uint64_t>>> out(op.terms.size());
    for (std::size_t i = 0; i < op.terms.size(); ++i) {
      for (const auto& t : op.terms[i]) out[i].push_back(poly_series_mod(t, inv_d, inv_fact, N, p));
    }
    return out;
  };
  const auto pos_series = build(model.positive);
  const auto neg_series = build(model.negative);
  std::map<std::int64_t, std::vector<std::uint64_t>> pivot_cache;

  SparseVector<std::uint32_t> cur, next;
  cur.init(plan.states, width);
  next.init(plan.states, width);
  std::vector<std::uint64_t> trace(width, 0);
  std::uint64_t acc[64];
  if (width > 64) throw Error(ErrorCode::invalid_argument, "truncation order above 63 is not supported");

  for (std::size_t x = 0; x < plan.states; ++x) {
    const int o0 = plan.budget(x, 0, x);
    if (o0 < 0) continue;
    cur.touch(x, o0);
    cur.row(x)[0] = 1;
    for (std::size_t t = 0; t < plan.letter_pos.size(); ++t) {
      const int pos = plan.letter_pos[t];
      const bool positive = plan.letter_sign[t] > 0;
      const LocalOperator& op = positive ? model.positive : model.negative;
      const auto& series = positive ? pos_series : neg_series;
      const std::size_t wa = plan.place[static_cast<std::size_t>(pos)];
      const std::size_t wb = plan.place[static_cast<std::size_t>(pos + 1)];
      for (std::size_t y : cur.active) {
        const int a = plan.digit(y, pos), b = plan.digit(y, pos + 1);
        const std::size_t slot = static_cast<std::size_t>(a * plan.dim + b);
        const std::uint32_t* src = cur.row(y);
        const int oy = cur.order[y];
        const auto& terms = op.terms[slot];
        for (std::size_t k = 0; k < terms.size(); ++k) {
          const LocalTerm& term = terms[k];
          const std::size_t y2 = y - static_cast<std::size_t>(a) * wa - static_cast<std::size_t>(b) * wb +
                                 static_cast<std::size_t>(term.out_a) * wa + static_cast<std::size_t>(term.out_b) * wb;
          const int o2 = plan.budget(y2, t + 1, x);
          if (o2 < term.valuation) continue;
          next.touch(y2, o2);
          std::uint32_t* dst = next.row(y2);
          const std::uint64_t* e = series[slot][k].data();
          const int v = term.valuation;
          for (int n = v; n <= o2; ++n) {
            // sum_{i <= min(n - v, oy)} src[i] * e[n - i]
            const int top = std::min(n - v, oy);
            std::uint64_t sum = 0;
            int lazy = 0;
            for (int i = 0; i <= top; ++i) {
              sum += static_cast<std::uint64_t>(src[i]) * e[n - i];
              if (++lazy == kLazyTerms) {
                sum %= p;
                lazy = 0;
              }
            }
            acc[n] = sum % p;
          }
          for (int n = v; n <= o2; ++n) {
            std::uint64_t s = dst[n] + acc[n];
            dst[n] = static_cast<std::uint32_t>(s >= p ? s - p : s);
          }
        }
      }
      cur.clear();
      std::swap(cur, next);
    }
    if (cur.order[x] >= 0) {
      const std::int64_t pe = pivot_exponent(model, plan, x);
      auto it = pivot_cache.find(pe);
      if (it == pivot_cache.end()) it = pivot_cache.emplace(pe, exp_series_mod(pe, inv_d, inv_fact, N, p)).first;
      const std::uint32_t* d = cur.row(x);
      const int ox = cur.order[x];
      for (std::size_t n = 0; n <= N; ++n) {
        std::uint64_t sum = 0;
        for (std::size_t i = 0; i <= n && static_cast<int>(i) <= ox; ++i) sum = (sum + d[i] * it->second[n - i]) % p;
        trace[n] = (trace[n] + sum) % p;
      }
    }
    cur.clear();
  }
  return trace;
}

}  // namespace

std::vector<std::pair<std::int64_t, std::int64_t>> local_coefficient(const LocalOperator& op, int a, int b, int c,
                                                                     int d) {
  std::map<std::int64_t, std::int64_t> acc;
  for (const auto& term : op.terms.at(static_cast<std::size_t>(a * op.dim + b))) {
    if (term.out_a != c || term.out_b != d) continue;
    for (const auto& [e, v] : term.poly) acc[e] += v;
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (const auto& [e, v] : acc) {
    if (v != 0) out.push_back({e, v});
  }
  return out;
}

RationalSeries closure_trace(const ClosureModel& model, const BraidWord& b, std::size_t order, ClosureStats* stats) {
  if (model.dim < 1 || model.denominator < 1) throw Error(ErrorCode::invalid_argument, "malformed closure model");
  if (model.pivot.size() != static_cast<std::size_t>(model.dim)) throw Error(ErrorCode::invalid_argument, "pivot size");
  check_operator(model.positive, model.dim);
  check_operator(model.negative, model.dim);
  const WordPlan plan = make_plan(model, b, order);
  std::size_t transitions = 0;
  const double bits = bound_bits(model, plan, &transitions);
  const std::size_t nprimes = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(bits / kPrimeBits)) + 1);

  std::vector<std::uint64_t> primes;
  std::vector<std::vector<std::uint64_t>> residues;
  for (std::size_t i = 0; i < nprimes; ++i) {
    const std::uint64_t p = prime_at(i);
    primes.push_back(p);
    residues.push_back(trace_mod(model, plan, p));
  }
  if (stats) {
    stats->primes = nprimes;
    stats->transitions = transitions;
    stats->bound_bits = bits;
  }

  RationalSeries out(SeriesParam::hbar, order);
  for (std::size_t k = 0; k <= order; ++k) {
    // Lift H_k = D^k k! r_k, an integer, by incremental CRT.
    Integer value = 0, modulus = 1;
    for (std::size_t i = 0; i < nprimes; ++i) {
      const std::uint64_t p = primes[i];
      std::uint64_t scale = powmod(static_cast<std::uint64_t>(model.denominator), k, p);
      for (std::size_t j = 2; j <= k; ++j) scale = mulmod(scale, j, p);
      const std::uint64_t h = mulmod(residues[i][k], scale, p);
      const Integer cur_mod = value % static_cast<unsigned long>(p);
      const std::uint64_t vm = cur_mod.get_ui();
      const std::uint64_t mm = Integer(modulus % static_cast<unsigned long>(p)).get_ui();
      const std::uint64_t diff = (h + p - vm) % p;
      const std::uint64_t t = mulmod(diff, invmod(mm, p), p);
      value += modulus * static_cast<unsigned long>(t);
      modulus *= static_cast<unsigned long>(p);
    }
    if (2 * value > modulus) value -= modulus;
    Integer denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), static_cast<unsigned long>(model.denominator), static_cast<unsigned long>(k));
    denom *= factorial(static_cast<unsigned>(k));
    Rational r(value, denom);
    r.canonicalize();
    out[k] = r;
  }
  return out;
}

RationalSeries closure_invariant(const ClosureModel& model, const BraidWord& b, std::size_t order, ClosureStats* stats) {
  RationalSeries tr = closure_trace(model, b, order, stats);
  Rational rate{Integer(static_cast<long>(-writhe(b) * model.twist)), Integer(model.denominator)};
  rate.canonicalize();
  return tr * exp_linear(SeriesParam::hbar, rate, order);
}

}  // namespace loopex
