#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

#include "erdos/error.hpp"

namespace erdos {

// Arbitrary-precision rational. GMP keeps results of arithmetic canonical
// (reduced, positive denominator); values built from raw parts go through
// make_rational, which canonicalizes explicitly.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

static_assert(sizeof(long) == sizeof(std::int64_t), "gmpxx long conversions assume LP64");

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return make_rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
}

/// Parses "p", "-p" or "p/q" with decimal integers. Whitespace around the
/// text is ignored; anything else is a ParseError.
inline Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
      s.remove_suffix(1);
    return s;
  };
  auto parse_int = [&](std::string_view s, bool allow_sign) -> Integer {
    s = trim(s);
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) throw Error(ErrorCode::ParseError, "expected integer in '" + std::string(text) + "'");
    for (std::size_t j = i; j < s.size(); ++j) {
      if (s[j] < '0' || s[j] > '9')
        throw Error(ErrorCode::ParseError, "bad rational literal '" + std::string(text) + "'");
    }
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return Integer(digits, 10);
  };

  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, true));
  const Integer num = parse_int(text.substr(0, slash), true);
  const Integer den = parse_int(text.substr(slash + 1), false);
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  return make_rational(num, den);
}

/// "p" for integers, "p/q" otherwise.
inline std::string format_rational(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

/// Nearest-ish double; mpq_get_d truncates, so the relative error is below
/// one ulp. Values outside double range saturate to +-inf.
inline double to_double(const Rational& value) { return value.get_d(); }

/// Square root of a nonnegative rational, relative error at most 2^-50.
/// Evaluated in 128-bit GMP floating point so that huge or tiny operands do
/// not lose precision before the final rounding to double.
inline double sqrt_to_double(const Rational& value) {
  if (value < 0) throw Error(ErrorCode::InvalidArgument, "square root of negative value");
  if (value == 0) return 0.0;
  mpf_class f(0, 128);
  f = value;
  mpf_class root(0, 128);
  mpf_sqrt(root.get_mpf_t(), f.get_mpf_t());
  return root.get_d();
}

inline Rational floor_rational(const Rational& value) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return Rational(q);
}

}  // namespace erdos
