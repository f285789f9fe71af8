#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "kakutani/rational.hpp"

namespace kak {

// Arbitrary-precision real backed by MPFR, round-to-nearest.
// Binary operations produce results at the wider of the two operand
// precisions, so precision never silently degrades through a formula.
class Real {
public:
  Real();
  explicit Real(mpfr_prec_t prec);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  static Real of(long v, mpfr_prec_t prec = 0);
  static Real of(const Rational& q, mpfr_prec_t prec = 0);
  static Real of_str(const std::string& s, mpfr_prec_t prec = 0);

  static void set_default_prec(mpfr_prec_t bits);
  static mpfr_prec_t default_prec();

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  const mpfr_t& raw() const { return v_; }
  mpfr_t& raw() { return v_; }

  int sign() const { return mpfr_sgn(v_); }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Decimal string with the given number of significant digits.
  std::string str(int digits = 20) const;

  Real operator-() const;

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator*(const Real& a, long b);
  friend Real operator/(const Real& a, long b);

  friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

private:
  mpfr_t v_;
};

Real abs(const Real& a);
Real sqrt(const Real& a);
Real exp(const Real& a);
Real log(const Real& a);
Real sin(const Real& a);
Real cos(const Real& a);
Real atan2(const Real& y, const Real& x);
Real floor(const Real& a);
Real pow(const Real& a, long e);
Real pow(const Real& a, const Real& b);
Real zeta(const Real& a);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);
Real pi(mpfr_prec_t prec = 0);
// ln of a positive rational at given precision.
Real log_rat(const Rational& q, mpfr_prec_t prec = 0);

// Complex number over Real; enough surface for Dirichlet-series work.
struct Complex {
  Real re, im;

  Complex() = default;
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  static Complex of(double r, double i, mpfr_prec_t prec = 0);

  Complex operator-() const { return {-re, -im}; }
  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const Real& s, const Complex& a) { return {s * a.re, s * a.im}; }
  friend Complex operator/(const Complex& a, const Complex& b);

  Real norm2() const { return re * re + im * im; }
};

Real abs(const Complex& z);
Real arg(const Complex& z);
Complex exp(const Complex& z);
Complex conj(const Complex& z);
// base^z for a positive rational base, i.e. exp(z * ln(base)).
Complex pow_rat_base(const Rational& base, const Complex& z);

// Closed real interval with outward rounding; just enough operations for
// certified continued fractions and root enclosures.
struct RealInterval {
  Real lo, hi;

  static RealInterval log_of(const Rational& q, mpfr_prec_t prec = 0);
  static RealInterval point(const Real& x);

  Real width() const { return hi - lo; }
  bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }

  RealInterval sub_int(const Integer& n) const;  // outward [lo-n, hi-n]
  RealInterval recip_pos() const;                // outward 1/x, requires lo > 0
  RealInterval div_pos(const RealInterval& d) const;  // outward, both positive
  RealInterval neg() const { return {-hi, -lo}; }
};

}  // namespace kak
