#include "kakutani/real.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace kak {

namespace {
thread_local mpfr_prec_t g_default_prec = 200;

mpfr_prec_t pick(mpfr_prec_t p) { return p > 0 ? p : g_default_prec; }
}  // namespace

Real::Real() { mpfr_init2(v_, g_default_prec); }
Real::Real(mpfr_prec_t prec) { mpfr_init2(v_, pick(prec)); }

Real::Real(const Real& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  if (this != &o) mpfr_swap(v_, o.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::of(long v, mpfr_prec_t prec) {
  Real r(pick(prec));
  mpfr_set_si(r.v_, v, MPFR_RNDN);
  return r;
}

Real Real::of(const Rational& q, mpfr_prec_t prec) {
  Real r(pick(prec));
  mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real Real::of_str(const std::string& s, mpfr_prec_t prec) {
  Real r(pick(prec));
  mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN);
  return r;
}

void Real::set_default_prec(mpfr_prec_t bits) { g_default_prec = bits; }
mpfr_prec_t Real::default_prec() { return g_default_prec; }

std::string Real::str(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

Real Real::operator-() const {
  Real r(prec());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

#define KAK_BINOP(op, fn)                                      \
  Real operator op(const Real& a, const Real& b) {             \
    Real r(std::max(a.prec(), b.prec()));                      \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                           \
    return r;                                                  \
  }

KAK_BINOP(+, mpfr_add)
KAK_BINOP(-, mpfr_sub)
KAK_BINOP(*, mpfr_mul)
KAK_BINOP(/, mpfr_div)
#undef KAK_BINOP

Real operator*(const Real& a, long b) {
  Real r(a.prec());
  mpfr_mul_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, long b) {
  Real r(a.prec());
  mpfr_div_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}

#define KAK_UNFN(name, fn)         \
  Real name(const Real& a) {       \
    Real r(a.prec());              \
    fn(r.raw(), a.raw(), MPFR_RNDN); \
    return r;                      \
  }

KAK_UNFN(abs, mpfr_abs)
KAK_UNFN(sqrt, mpfr_sqrt)
KAK_UNFN(exp, mpfr_exp)
KAK_UNFN(log, mpfr_log)
KAK_UNFN(sin, mpfr_sin)
KAK_UNFN(cos, mpfr_cos)
KAK_UNFN(zeta, mpfr_zeta)
#undef KAK_UNFN

Real floor(const Real& a) {
  Real r(a.prec());
  mpfr_floor(r.raw(), a.raw());
  return r;
}

Real atan2(const Real& y, const Real& x) {
  Real r(std::max(y.prec(), x.prec()));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real pow(const Real& a, long e) {
  Real r(a.prec());
  mpfr_pow_si(r.raw(), a.raw(), e, MPFR_RNDN);
  return r;
}

Real pow(const Real& a, const Real& b) {
  Real r(std::max(a.prec(), b.prec()));
  mpfr_pow(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return a < b ? a : b; }

Real pi(mpfr_prec_t prec) {
  Real r(pick(prec));
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

Real log_rat(const Rational& q, mpfr_prec_t prec) { return log(Real::of(q, pick(prec))); }

Complex Complex::of(double r, double i, mpfr_prec_t prec) {
  Real re(pick(prec)), im(pick(prec));
  mpfr_set_d(re.raw(), r, MPFR_RNDN);
  mpfr_set_d(im.raw(), i, MPFR_RNDN);
  return {re, im};
}

Complex operator/(const Complex& a, const Complex& b) {
  Real d = b.norm2();
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

Real abs(const Complex& z) { return sqrt(z.norm2()); }
Real arg(const Complex& z) { return atan2(z.im, z.re); }

Complex exp(const Complex& z) {
  Real m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

Complex conj(const Complex& z) { return {z.re, -z.im}; }

Complex pow_rat_base(const Rational& base, const Complex& z) {
  Real lb = log_rat(base, std::max(z.re.prec(), z.im.prec()));
  return exp(Complex{z.re * lb, z.im * lb});
}

RealInterval RealInterval::log_of(const Rational& q, mpfr_prec_t prec) {
  mpfr_prec_t p = pick(prec);
  Real lo(p), hi(p), x(p + 32);
  mpfr_set_q(x.raw(), q.get_mpq_t(), MPFR_RNDD);
  mpfr_log(lo.raw(), x.raw(), MPFR_RNDD);
  mpfr_set_q(x.raw(), q.get_mpq_t(), MPFR_RNDU);
  mpfr_log(hi.raw(), x.raw(), MPFR_RNDU);
  return {lo, hi};
}

RealInterval RealInterval::point(const Real& x) { return {x, x}; }

RealInterval RealInterval::sub_int(const Integer& n) const {
  Real a(lo.prec()), b(hi.prec()), nn(lo.prec() + 32);
  mpfr_set_z(nn.raw(), n.get_mpz_t(), MPFR_RNDN);  // exact for moderate n
  mpfr_sub(a.raw(), lo.raw(), nn.raw(), MPFR_RNDD);
  mpfr_sub(b.raw(), hi.raw(), nn.raw(), MPFR_RNDU);
  return {a, b};
}

RealInterval RealInterval::recip_pos() const {
  Real a(lo.prec()), b(hi.prec());
  mpfr_ui_div(a.raw(), 1, hi.raw(), MPFR_RNDD);
  mpfr_ui_div(b.raw(), 1, lo.raw(), MPFR_RNDU);
  return {a, b};
}

RealInterval RealInterval::div_pos(const RealInterval& d) const {
  Real a(lo.prec()), b(hi.prec());
  mpfr_div(a.raw(), lo.raw(), d.hi.raw(), MPFR_RNDD);
  mpfr_div(b.raw(), hi.raw(), d.lo.raw(), MPFR_RNDU);
  return {a, b};
}

}  // namespace kak
