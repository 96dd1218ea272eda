#include "loopex/rational.hpp"

#include "loopex/error.hpp"

namespace loopex {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::variable_mismatch: return "variable_mismatch";
    case ErrorCode::parameter_mismatch: return "parameter_mismatch";
    case ErrorCode::precondition: return "precondition";
    case ErrorCode::not_exact: return "not_exact";
    case ErrorCode::overflow: return "overflow";
    case ErrorCode::schema: return "schema";
    case ErrorCode::unknown_knot: return "unknown_knot";
    case ErrorCode::io: return "io";
    case ErrorCode::internal: return "internal";
  }
  return "unknown";
}

std::string to_canonical_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_pretty_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorCode::parse_error, "empty rational literal");
  if (s.front() == '+') s.erase(0, 1);
  Rational r;
  if (r.set_str(s, 10) != 0 || s.find_first_of(" \t") != std::string::npos) {
    throw Error(ErrorCode::parse_error, "malformed rational literal '" + std::string(text) + "'");
  }
  if (r.get_den() == 0) throw Error(ErrorCode::parse_error, "zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

Rational make_rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::invalid_argument, "zero denominator");
  Rational r{Integer(num), Integer(den)};
  r.canonicalize();
  return r;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

Rational rational_pow(const Rational& base, unsigned exponent) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

}  // namespace loopex
