#include <set>

#include "loopex/error.hpp"
#include "loopex/twoloop.hpp"

namespace loopex {

namespace {

const std::vector<Var> kT12{Var::t1, Var::t2};

LaurentPolynomial bivariate(const LaurentPolynomial& p) {
  return p.is_zero() ? LaurentPolynomial(kT12) : p.rename(kT12);
}

LaurentPolynomial remap(const LaurentPolynomial& p, const ExponentMap& m) {
  return bivariate(p).transform_exponents(m, kT12);
}

// N(t1,1), N(t2,1), N((t1 t2)^-1, 1) as bivariate polynomials.
LaurentPolynomial spec_t1(const LaurentPolynomial& n) { return remap(n, {{{1, 0}, {0, 0}}}); }
LaurentPolynomial spec_t2(const LaurentPolynomial& n) { return remap(n, {{{0, 0}, {1, 0}}}); }
LaurentPolynomial spec_t12_inverse(const LaurentPolynomial& n) { return remap(n, {{{-1, 0}, {-1, 0}}}); }

LaurentPolynomial univariate_t(const LaurentPolynomial& delta) { return delta.rename({Var::t}); }

struct DeltaPowers {
  LaurentPolynomial d1, d2, d12;
  DeltaPowers(const LaurentPolynomial& delta, unsigned k)
      : d1(delta_in_t1(delta).pow(k)), d2(delta_in_t2(delta).pow(k)), d12(delta_in_t1t2(delta).pow(k)) {}
};

// Combine 3 specializations with the full term over the squared denominator:
// (a N D^k + b (N1 (D2 D12)^{2k} + N2 (D1 D12)^{2k} + N3 (D1 D2)^{2k})) * scale.
ThetaRational combine(const ThetaRational& z, const Rational& full, const Rational& special, const Rational& scale) {
  const auto k = static_cast<unsigned>(z.power);
  const DeltaPowers dk(z.delta, k);
  const DeltaPowers d2k(z.delta, 2 * k);
  const LaurentPolynomial n = bivariate(z.numerator);
  LaurentPolynomial out = n * dk.d1 * dk.d2 * dk.d12 * full;
  out += (spec_t1(n) * d2k.d2 * d2k.d12 + spec_t2(n) * d2k.d1 * d2k.d12 + spec_t12_inverse(n) * d2k.d1 * d2k.d2) *
         special;
  out *= scale;
  return ThetaRational{out, univariate_t(z.delta), 2 * z.power};
}

bool try_divide_full(LaurentPolynomial& n, const LaurentPolynomial& delta) {
  try {
    LaurentPolynomial q = divide_by_delta_t1(n, delta);
    q = divide_by_delta_t2(q, delta);
    q = divide_by_delta_t1t2(q, delta);
    n = q;
    return true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::not_exact) throw;
    return false;
  }
}

}  // namespace

LaurentPolynomial delta_in_t1(const LaurentPolynomial& delta) {
  return univariate_t(delta).transform_exponents({{{1, 0}, {0, 0}}}, kT12);
}
LaurentPolynomial delta_in_t2(const LaurentPolynomial& delta) {
  return univariate_t(delta).transform_exponents({{{0, 0}, {1, 0}}}, kT12);
}
LaurentPolynomial delta_in_t1t2(const LaurentPolynomial& delta) {
  return univariate_t(delta).transform_exponents({{{1, 0}, {1, 0}}}, kT12);
}

LaurentPolynomial divide_by_delta_t1(const LaurentPolynomial& p, const LaurentPolynomial& delta) {
  if (p.is_zero()) return LaurentPolynomial(kT12);
  return divide_exact_in_first(bivariate(p), univariate_t(delta));
}

LaurentPolynomial divide_by_delta_t2(const LaurentPolynomial& p, const LaurentPolynomial& delta) {
  if (p.is_zero()) return LaurentPolynomial(kT12);
  const ExponentMap swap{{{0, 1}, {1, 0}}};
  return remap(divide_exact_in_first(remap(p, swap), univariate_t(delta)), swap);
}

// s = t1 t2: t1^a t2^b = s^b t1^(a-b).
LaurentPolynomial divide_by_delta_t1t2(const LaurentPolynomial& p, const LaurentPolynomial& delta) {
  if (p.is_zero()) return LaurentPolynomial(kT12);
  const LaurentPolynomial q = divide_exact_in_first(remap(p, {{{0, 1}, {1, -1}}}), univariate_t(delta));
  return remap(q, {{{1, 1}, {1, 0}}});
}

ThetaRational ztheta_from(const LaurentPolynomial& p, const LaurentPolynomial& delta) {
  return ThetaRational{bivariate(p), univariate_t(delta), 1};
}

ThetaRational ztheta(const KnotRecord& record) {
  const auto theta = symmetrize_from_fundamental(record.theta12_fundamental);
  return ztheta_from(theta.expanded * Rational(1, 12), record.alexander_golden);
}

UnivariateRational at_second_one(const ThetaRational& z) {
  UnivariateRational r;
  r.numerator = at_second_one(bivariate(z.numerator));
  r.delta = univariate_t(z.delta);
  r.delta_power = 2 * z.power;
  return r;
}

ThetaRational f1_from_ztheta(const ThetaRational& z) { return combine(z, 1, 1, 12); }

ThetaRational ztheta_from_f1(const ThetaRational& f) {
  if (!check_symmetries(bivariate(f.numerator)).pass) {
    throw Error(ErrorCode::precondition, "F is not Gamma-invariant");
  }
  if (bivariate(f.numerator).sum_of_coefficients() != 0) {
    throw Error(ErrorCode::precondition, "F does not vanish at (1,1)");
  }
  ThetaRational z = combine(f, 3, -1, Rational(1, 36));
  while (z.power > 1 && try_divide_full(z.numerator, z.delta)) --z.power;
  return z;
}

}  // namespace loopex

namespace loopex {

ThetaRational random_symmetric_instance(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-5, 5), count(1, 4), deg(1, 2), small(-3, 3);
  std::vector<FundamentalEntry> entries;
  std::set<std::pair<int, int>> used{{0, 0}};
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    std::uniform_int_distribution<int> m1d(1, 4);
    const int m1 = m1d(rng);
    std::uniform_int_distribution<int> m2d(0, m1 / 2);
    const int m2 = m2d(rng);
    const int c = coef(rng);
    if (c == 0 || !used.insert({m1, m2}).second) continue;
    entries.push_back({m1, m2, Rational(c)});
  }
  Rational total = symmetrize_from_fundamental(entries).expanded.sum_of_coefficients();
  if (total != 0) entries.push_back({0, 0, -total});
  LaurentPolynomial delta({Var::t});
  Rational middle = 1;
  const int d = deg(rng);
  for (int k = 1; k <= d; ++k) {
    const int a = small(rng);
    if (a == 0) continue;
    delta.add_term({k, 0}, a);
    delta.add_term({-k, 0}, a);
    middle -= 2 * a;
  }
  delta.add_term({0, 0}, middle);
  std::uniform_int_distribution<int> den(1, 12);
  return ztheta_from(symmetrize_from_fundamental(entries).expanded * Rational(1, den(rng)), delta);
}

}  // namespace loopex
