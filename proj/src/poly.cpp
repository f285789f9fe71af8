#include "kakutani/poly.hpp"

#include <algorithm>

#include "kakutani/errors.hpp"

namespace kak {

ZPoly zp_trim(ZPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

int zp_degree(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

ZPoly zp_add(const ZPoly& a, const ZPoly& b) {
  ZPoly out(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return zp_trim(out);
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return zp_trim(out);
}

ZPoly zp_neg(ZPoly a) {
  for (auto& c : a) c = -c;
  return a;
}

ZPoly zp_monomial(std::size_t k, const Integer& c) {
  ZPoly p(k + 1, Integer(0));
  p[k] = c;
  return zp_trim(p);
}

QPoly qp_from(const ZPoly& p) {
  QPoly out;
  out.reserve(p.size());
  for (const auto& c : p) out.emplace_back(c);
  return out;
}

QPoly qp_trim(QPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return qp_trim(out);
}

QPoly qp_rem(QPoly a, const QPoly& b) {
  a = qp_trim(std::move(a));
  if (b.empty()) throw domain_error("polynomial division by zero");
  while (a.size() >= b.size()) {
    Rational q = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    a = qp_trim(std::move(a));
    if (a.empty()) break;
  }
  return a;
}

QPoly qp_gcd(QPoly a, QPoly b) {
  a = qp_trim(std::move(a));
  b = qp_trim(std::move(b));
  while (!b.empty()) {
    QPoly r = qp_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

QPoly qp_divexact(const QPoly& a, const QPoly& b) {
  QPoly r = qp_trim(a);
  if (qp_trim(b).empty()) throw domain_error("polynomial division by zero");
  QPoly q(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rational(0));
  while (r.size() >= b.size() && !r.empty()) {
    Rational c = r.back() / b.back();
    std::size_t shift = r.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
    r = qp_trim(std::move(r));
  }
  if (!r.empty()) throw domain_error("polynomial division has a remainder");
  return qp_trim(std::move(q));
}

ZPoly qp_primitive(const QPoly& p) {
  QPoly q = qp_trim(p);
  if (q.empty()) return {};
  Integer den_lcm = 1;
  for (const auto& c : q) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  ZPoly z;
  z.reserve(q.size());
  for (const auto& c : q) z.push_back(Integer(c.get_num() * (den_lcm / c.get_den())));
  Integer content = 0;
  for (const auto& c : z) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  if (content > 1)
    for (auto& c : z) c /= content;
  if (z.back() < 0)
    for (auto& c : z) c = -c;
  return z;
}

Complex zp_eval(const ZPoly& p, const Complex& z) {
  mpfr_prec_t prec = std::max(z.re.prec(), z.im.prec());
  Complex acc{Real::of(0L, prec), Real::of(0L, prec)};
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = acc * z;
    acc.re = acc.re + Real::of(Rational(*it), prec);
  }
  return acc;
}

namespace {

Complex zp_eval_q(const QPoly& p, const Complex& z) {
  mpfr_prec_t prec = std::max(z.re.prec(), z.im.prec());
  Complex acc{Real::of(0L, prec), Real::of(0L, prec)};
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = acc * z;
    acc.re = acc.re + Real::of(*it, prec);
  }
  return acc;
}

}  // namespace

std::vector<PolyRoot> find_poly_roots(const ZPoly& poly, mpfr_prec_t prec) {
  ZPoly p = zp_trim(poly);
  if (zp_degree(p) < 1) throw domain_error("find_poly_roots needs degree >= 1");
  std::size_t n = p.size() - 1;

  // Monic rational copy for the iteration.
  QPoly monic = qp_from(p);
  Rational lead = monic.back();
  for (auto& c : monic) c /= lead;

  // Cauchy bound for the initial circle.
  Rational bound = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Rational a = abs(monic[i]);
    if (a > bound) bound = a;
  }
  bound += 1;
  Real r0 = Real::of(bound, prec);
  Real two_pi = pi(prec) * 2L;

  std::vector<Complex> z;
  for (std::size_t k = 0; k < n; ++k) {
    Real ang = two_pi * Real::of(Rational(static_cast<long>(k), static_cast<long>(n)), prec) +
               Real::of_str("0.4", prec);
    z.push_back({r0 * cos(ang), r0 * sin(ang)});
  }

  Real tiny = Real::of(1L, prec);
  mpfr_mul_2si(tiny.raw(), tiny.raw(), -(static_cast<long>(prec) - 16), MPFR_RNDN);

  std::vector<Real> wabs(n, Real::of(0L, prec));
  for (int iter = 0; iter < 2000; ++iter) {
    Real worst = Real::of(0L, prec);
    for (std::size_t i = 0; i < n; ++i) {
      Complex denom{Real::of(1L, prec), Real::of(0L, prec)};
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) denom = denom * (z[i] - z[j]);
      Complex w = zp_eval_q(monic, z[i]) / denom;
      z[i] = z[i] - w;
      wabs[i] = abs(w);
      worst = max(worst, wabs[i]);
    }
    if (worst < tiny) break;
  }

  // Weierstrass disks: every root lies in the union of D(z_i, n*|W_i|);
  // pairwise disjoint disks isolate one root each. Overlapping disks are
  // merged into clusters reported with multiplicity.
  std::vector<Real> rad;
  for (std::size_t i = 0; i < n; ++i) {
    Complex denom{Real::of(1L, prec), Real::of(0L, prec)};
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) denom = denom * (z[i] - z[j]);
    Real w = abs(zp_eval_q(monic, z[i])) / abs(denom);
    // Inflate generously for rounding; the iteration has converged far below
    // any tolerance callers use.
    rad.push_back(w * static_cast<long>(2 * n) + tiny);
  }

  std::vector<int> cluster(n);
  for (std::size_t i = 0; i < n; ++i) cluster[i] = static_cast<int>(i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Real dist = abs(z[i] - z[j]);
      if (dist <= rad[i] + rad[j]) {
        int ci = cluster[i], cj = cluster[j];
        for (std::size_t k = 0; k < n; ++k)
          if (cluster[k] == cj) cluster[k] = ci;
      }
    }

  std::vector<PolyRoot> out;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i)
      if (cluster[i] == static_cast<int>(c)) members.push_back(i);
    if (members.empty()) continue;
    if (members.size() == 1) {
      out.push_back({z[members[0]], rad[members[0]], 1});
    } else {
      Complex ctr = z[members[0]];
      for (std::size_t k = 1; k < members.size(); ++k) ctr = ctr + z[members[k]];
      Real inv = Real::of(Rational(1, static_cast<long>(members.size())), prec);
      ctr = {ctr.re * inv, ctr.im * inv};
      Real r = Real::of(0L, prec);
      for (std::size_t i : members) r = max(r, abs(z[i] - ctr) + rad[i]);
      out.push_back({ctr, r, static_cast<int>(members.size())});
    }
  }
  std::sort(out.begin(), out.end(), [](const PolyRoot& a, const PolyRoot& b) {
    if (a.center.re < b.center.re) return true;
    if (b.center.re < a.center.re) return false;
    return a.center.im < b.center.im;
  });
  return out;
}

}  // namespace kak
