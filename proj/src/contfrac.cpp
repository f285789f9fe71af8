#include "kakutani/contfrac.hpp"

#include <algorithm>

#include "kakutani/errors.hpp"
#include "kakutani/renewal.hpp"

namespace kak {

CFResult continued_fraction(const RealInterval& gamma, std::size_t max_terms,
                            const Integer& max_denominator) {
  CFResult out;
  RealInterval g = gamma;
  Integer q_prev2 = 1, q_prev1 = 0;  // q_{-2}, q_{-1}
  while (true) {
    if (out.quotients.size() >= max_terms) {
      out.stop = CFResult::Stop::max_terms;
      return out;
    }
    Real flo = floor(g.lo), fhi = floor(g.hi);
    if (!(flo == fhi)) {
      out.stop = CFResult::Stop::precision_exhausted;
      return out;
    }
    Integer a;
    mpfr_get_z(a.get_mpz_t(), flo.raw(), MPFR_RNDN);
    if (!out.quotients.empty() && a < 1) {
      out.stop = CFResult::Stop::precision_exhausted;
      return out;
    }
    Integer q = a * q_prev1 + q_prev2;
    out.quotients.push_back(a);
    out.denominators.push_back(q);
    q_prev2 = q_prev1;
    q_prev1 = q;
    if (q > max_denominator) {
      out.stop = CFResult::Stop::max_denominator;
      return out;
    }
    RealInterval frac = g.sub_int(a);
    if (frac.lo.sign() <= 0) {
      // The tail could vanish (rational) or is below resolution.
      out.stop = CFResult::Stop::precision_exhausted;
      return out;
    }
    g = frac.recip_pos();
  }
}

CFResult continued_fraction(const Rational& gamma, std::size_t, const Integer&) {
  throw rational_input_error("continued_fraction: rational input " + to_pq(gamma) +
                             " has a terminating expansion");
}

bool multiplicatively_dependent(const Rational& a, const Rational& b) {
  auto va = factorize(a.get_num());
  for (auto& [p, e] : factorize(a.get_den())) va[p] -= e;
  auto vb = factorize(b.get_num());
  for (auto& [p, e] : factorize(b.get_den())) vb[p] -= e;
  std::erase_if(va, [](const auto& kv) { return kv.second == 0; });
  std::erase_if(vb, [](const auto& kv) { return kv.second == 0; });
  if (va.empty() || vb.empty()) return true;  // a or b equals 1
  // Parallel integer vectors: cross-ratios equal over the union of primes.
  std::vector<Integer> primes;
  for (const auto& [p, e] : va) primes.push_back(p);
  for (const auto& [p, e] : vb)
    if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
  long a0 = 0, b0 = 0;
  bool have_ref = false;
  for (const auto& p : primes) {
    long ea = va.count(p) ? va[p] : 0;
    long eb = vb.count(p) ? vb[p] : 0;
    if (!have_ref) {
      a0 = ea;
      b0 = eb;
      have_ref = true;
      continue;
    }
    if (Integer(ea) * b0 != Integer(eb) * a0) return false;
  }
  return true;
}

BadApproxEstimate estimate_bad_approx_r(const Scheme& s, Symbol j, Symbol k,
                                        const Integer& max_denominator, mpfr_prec_t prec) {
  mpfr_prec_t p = prec > 0 ? prec : std::max<mpfr_prec_t>(Real::default_prec(), 512);
  Rational aj = s.alpha(j), ak = s.alpha(k);
  if (aj == ak) throw domain_error("badly-approximable pair needs distinct lengths");
  if (multiplicatively_dependent(aj, ak))
    throw rational_input_error("log(" + to_pq(aj) + ")/log(" + to_pq(ak) +
                               ") is rational; the pair is rank one");

  // gamma = ln(alpha_j) / ln(alpha_k) = |ln alpha_j| / |ln alpha_k| > 0.
  RealInterval lj = RealInterval::log_of(aj, p).neg();
  RealInterval lk = RealInterval::log_of(ak, p).neg();
  RealInterval gamma = lj.div_pos(lk);

  CFResult cf = continued_fraction(gamma, 400, max_denominator);

  BadApproxEstimate est;
  est.quotients = cf.quotients;
  est.terms = cf.quotients.size();
  est.sym_j = j;
  est.sym_k = k;
  est.alpha_j = aj;
  est.alpha_k = ak;
  est.certified_up_to = cf.denominators.empty() ? Integer(0) : cf.denominators.back();
  est.r_hat = Real::of(0L, p);
  // Small denominators make the normalized exponent meaningless; the floor
  // of 4 keeps the estimator on the asymptotic side of the definition.
  for (std::size_t m = 0; m + 1 < cf.quotients.size(); ++m) {
    const Integer& qm = cf.denominators[m];
    const Integer& anext = cf.quotients[m + 1];
    if (qm < 4 || anext < 2) continue;
    Real r = log(Real::of(Rational(anext), p)) / log(Real::of(Rational(qm), p));
    est.r_hat = max(est.r_hat, r);
  }
  return est;
}

RealInterval sqrt_interval(const Rational& q, mpfr_prec_t prec) {
  mpfr_prec_t p = prec > 0 ? prec : Real::default_prec();
  Real lo(p), hi(p), x(p + 32);
  mpfr_set_q(x.raw(), q.get_mpq_t(), MPFR_RNDD);
  mpfr_sqrt(lo.raw(), x.raw(), MPFR_RNDD);
  mpfr_set_q(x.raw(), q.get_mpq_t(), MPFR_RNDU);
  mpfr_sqrt(hi.raw(), x.raw(), MPFR_RNDU);
  return {lo, hi};
}

}  // namespace kak
