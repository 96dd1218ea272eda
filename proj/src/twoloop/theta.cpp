#include <algorithm>
#include <set>

#include "loopex/error.hpp"
#include "loopex/twoloop.hpp"

namespace loopex {

namespace {

const std::vector<Var> kT12{Var::t1, Var::t2};
const std::vector<Var> kU12{Var::u1, Var::u2};

ExponentMap compose(const ExponentMap& a, const ExponentMap& b) {
  ExponentMap r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return r;
}

std::int64_t norm(const Exponents& e) { return e[0] * e[0] - e[0] * e[1] + e[1] * e[1]; }

LaurentPolynomial u_power(unsigned i, unsigned j) {
  return u1_expanded().pow(i) * u2_expanded().pow(j);
}

LaurentPolynomial orbit_sum(Exponents e, const Rational& c) {
  LaurentPolynomial p(kT12);
  for (const auto& x : gamma_orbit(e)) p.add_term(x, c);
  return p;
}

}  // namespace

const std::array<ExponentMap, 3>& gamma_generators() {
  static const std::array<ExponentMap, 3> gens{{
      {{{0, 1}, {1, 0}}},
      {{{-1, 0}, {-1, 1}}},
      {{{-1, 0}, {0, -1}}},
  }};
  return gens;
}

const std::vector<ExponentMap>& gamma_group() {
  static const std::vector<ExponentMap> group = [] {
    std::vector<ExponentMap> elems{{{{1, 0}, {0, 1}}}};
    for (std::size_t k = 0; k < elems.size(); ++k) {
      for (const auto& g : gamma_generators()) {
        const auto h = compose(g, elems[k]);
        if (std::find(elems.begin(), elems.end(), h) == elems.end()) elems.push_back(h);
      }
    }
    return elems;
  }();
  return group;
}

Exponents apply_exponent_map(const ExponentMap& m, Exponents e) {
  return {m[0][0] * e[0] + m[0][1] * e[1], m[1][0] * e[0] + m[1][1] * e[1]};
}

std::vector<Exponents> gamma_orbit(Exponents e) {
  std::set<Exponents, ExponentsDescending> orbit;
  for (const auto& g : gamma_group()) orbit.insert(apply_exponent_map(g, e));
  return {orbit.begin(), orbit.end()};
}

Exponents fundamental_representative(Exponents e) {
  std::optional<Exponents> rep;
  for (const auto& x : gamma_orbit(e)) {
    if (in_fundamental_domain(x[0], x[1])) {
      if (rep) throw Error(ErrorCode::internal, "orbit meets the fundamental domain twice");
      rep = x;
    }
  }
  if (!rep) throw Error(ErrorCode::internal, "orbit misses the fundamental domain");
  return *rep;
}

ThetaPolynomial symmetrize_from_fundamental(const std::vector<FundamentalEntry>& entries) {
  ThetaPolynomial out;
  std::set<Exponents> seen;
  for (const auto& e : entries) {
    if (!in_fundamental_domain(e.m1, e.m2)) {
      throw Error(ErrorCode::invalid_argument, "(" + std::to_string(e.m1) + "," + std::to_string(e.m2) +
                                                   ") outside m1 >= 2 m2 >= 0");
    }
    if (!seen.insert({e.m1, e.m2}).second) {
      throw Error(ErrorCode::invalid_argument, "repeated pair (" + std::to_string(e.m1) + "," +
                                                   std::to_string(e.m2) + ")");
    }
    if (e.coefficient == 0) continue;
    out.expanded += orbit_sum({e.m1, e.m2}, e.coefficient);
    out.fundamental.push_back(e);
  }
  std::sort(out.fundamental.begin(), out.fundamental.end(), [](const auto& a, const auto& b) {
    return std::pair(a.m1, a.m2) > std::pair(b.m1, b.m2);
  });
  return out;
}

std::vector<FundamentalEntry> fundamental_from_expanded(const LaurentPolynomial& p) {
  if (!check_symmetries(p).pass) throw Error(ErrorCode::precondition, "polynomial is not Gamma-invariant");
  std::vector<FundamentalEntry> out;
  for (const auto& [e, c] : p.terms()) {
    if (in_fundamental_domain(e[0], e[1])) out.push_back({e[0], e[1], c});
  }
  return out;
}

SymmetryReport check_symmetries(const LaurentPolynomial& p) {
  static const char* names[] = {"swap", "t1 -> (t1 t2)^-1", "inverse"};
  SymmetryReport r;
  if (p.arity() != 2) {
    r.pass = p.is_zero() || (p.terms().size() == 1 && p.terms().begin()->first == Exponents{0, 0});
    if (!r.pass) r.failed.push_back("not bivariate");
    return r;
  }
  for (std::size_t g = 0; g < 3; ++g) {
    if (!(p.transform_exponents(gamma_generators()[g], p.variables()) == p)) r.failed.emplace_back(names[g]);
  }
  r.pass = r.failed.empty();
  return r;
}

LaurentPolynomial u1_expanded() {
  static const LaurentPolynomial u = orbit_sum({1, 0}, 1);
  return u;
}

LaurentPolynomial u2_expanded() {
  static const LaurentPolynomial u = orbit_sum({2, 1}, 1);
  return u;
}

LaurentPolynomial to_u_basis(const LaurentPolynomial& input) {
  LaurentPolynomial p = input.is_zero() ? LaurentPolynomial(kT12) : input.rename(kT12);
  if (!check_symmetries(p).pass) throw Error(ErrorCode::precondition, "to_u_basis needs a Gamma-invariant input");
  LaurentPolynomial out(kU12);
  while (!p.is_zero()) {
    auto lead = p.terms().begin()->first;
    for (const auto& [e, c] : p.terms()) {
      if (norm(e) > norm(lead) || (norm(e) == norm(lead) && e > lead)) lead = e;
    }
    const Exponents rep = fundamental_representative(lead);
    const Rational c = p.coefficient(rep);
    const auto i = static_cast<unsigned>(rep[0] - 2 * rep[1]);
    const auto j = static_cast<unsigned>(rep[1]);
    const LaurentPolynomial prod = u_power(i, j);
    if (prod.coefficient(rep) != 1) throw Error(ErrorCode::internal, "leading orbit coefficient is not 1");
    p -= prod * c;
    if (p.coefficient(rep) != 0) throw Error(ErrorCode::not_exact, "u-basis rewriting left a remainder");
    out.add_term({static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)}, c);
  }
  return out;
}

LaurentPolynomial from_u_basis(const LaurentPolynomial& u) {
  LaurentPolynomial out(kT12);
  for (const auto& [e, c] : u.terms()) {
    if (e[0] < 0 || e[1] < 0) throw Error(ErrorCode::invalid_argument, "negative power in the u basis");
    out += u_power(static_cast<unsigned>(e[0]), static_cast<unsigned>(e[1])) * c;
  }
  return out;
}

LaurentPolynomial at_second_one(const LaurentPolynomial& p) {
  if (p.is_zero()) return LaurentPolynomial({Var::t});
  return p.specialize_second_to_one(Var::t);
}

}  // namespace loopex
