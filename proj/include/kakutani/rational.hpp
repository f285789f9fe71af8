#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "kakutani/errors.hpp"

namespace kak {

// Exact rational scalar. GMP already maintains the canonical form
// (gcd(|num|,den) = 1, den > 0) across arithmetic.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational rat(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Serialized form is always "p/q", including integers ("0/1", "3/1").
inline std::string to_pq(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Accepts "p/q" or a bare integer "p".
inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      Rational q(Integer(s), 1);
      q.canonicalize();
      return q;
    }
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) throw config_error("rational with zero denominator: " + s);
    Rational q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw config_error("malformed rational: '" + s + "'");
  }
}

inline Rational pow_rat(const Rational& base, unsigned long e) {
  Rational r;
  mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), e);
  return r;  // canonical since base is
}

// Decimal rendering with a fixed number of fractional digits, round-to-nearest.
// Used for the float columns of CSV exports; deterministic by construction.
inline std::string to_decimal(const Rational& q, int digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rational scaled = q * Rational(scale);
  Integer twice_num = 2 * scaled.get_num();
  Integer rounded = (twice_num + scaled.get_den()) / (2 * scaled.get_den());  // floor((2n+d)/2d)
  bool neg = rounded < 0;
  if (neg) rounded = -rounded;
  std::string ds = rounded.get_str();
  if (static_cast<int>(ds.size()) <= digits) ds.insert(0, digits + 1 - ds.size(), '0');
  std::string out = ds.substr(0, ds.size() - digits) + "." + ds.substr(ds.size() - digits);
  return neg ? "-" + out : out;
}

}  // namespace kak
