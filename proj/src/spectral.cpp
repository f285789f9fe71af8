#include "kakutani/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "kakutani/errors.hpp"

namespace kak {

namespace {

mpfr_prec_t pick(mpfr_prec_t p) { return p > 0 ? p : Real::default_prec(); }

void check_gcd_one(const PowerBasis& pb) {
  Integer g = 0;
  auto fold = [&](long v) { mpz_gcd_ui(g.get_mpz_t(), g.get_mpz_t(), std::labs(v)); };
  for (long e : pb.atom_exponents) fold(e);
  for (const auto& t : pb.tails) {
    fold(t.start);
    fold(t.step);
  }
  if (g != 1) throw domain_error("power basis exponents must have gcd 1");
}

// S(y) = sum_j y^{n_j} for real y in (0,1), tails in closed form.
Real power_sum(const PowerBasis& pb, const Real& y) {
  Real total = Real::of(0L, y.prec());
  for (long e : pb.atom_exponents) total = total + pow(y, e);
  for (const auto& t : pb.tails)
    total = total + pow(y, t.start) / (Real::of(1L, y.prec()) - pow(y, t.step));
  return total;
}

Rational power_sum_exact(const PowerBasis& pb, const Rational& y) {
  Rational total = 0;
  for (long e : pb.atom_exponents) total += pow_rat(y, static_cast<unsigned long>(e));
  for (const auto& t : pb.tails)
    total += pow_rat(y, static_cast<unsigned long>(t.start)) /
             (1 - pow_rat(y, static_cast<unsigned long>(t.step)));
  return total;
}

}  // namespace

PowerBasis power_basis(const Scheme& s, mpfr_prec_t prec) {
  RankReport rank = rank_report(s);
  if (rank.rank != 1) throw not_rank_one_error("scheme is not rank one");
  mpfr_prec_t p = pick(prec);
  PowerBasis pb;
  for (std::size_t i = 0; i < s.blocks().size(); ++i) {
    const auto& e = rank.block_exponents[i];
    if (std::holds_alternative<AtomSpec>(s.blocks()[i]))
      pb.atom_exponents.push_back(e.start);
    else
      pb.tails.push_back(e);
  }
  pb.exact_base = *rank.minimal_base;
  pb.base = Real::of(*rank.minimal_base, p);
  pb.base_radius = Real::of(0L, p);
  return pb;
}

PowerBasis power_basis_from_exponents(std::vector<long> atom_exponents,
                                      std::vector<ExpProgression> tails, mpfr_prec_t prec) {
  mpfr_prec_t p = pick(prec);
  PowerBasis pb;
  pb.atom_exponents = std::move(atom_exponents);
  pb.tails = std::move(tails);
  for (long e : pb.atom_exponents)
    if (e < 1) throw domain_error("atom exponents must be positive");
  for (const auto& t : pb.tails)
    if (t.start < 1 || t.step < 1) throw domain_error("tail progressions need start, step >= 1");
  if (pb.atom_exponents.empty() && pb.tails.empty())
    throw domain_error("power basis needs at least one exponent");
  check_gcd_one(pb);

  // S is strictly increasing on (0,1) with S(0+) = 0 and S(1-) > 1, so
  // S(x) = 1 has a unique root there. Newton at extended precision, then a
  // dyadic bracket certified by exact rational sign evaluation.
  mpfr_prec_t wp = p + 64;
  Real one = Real::of(1L, wp);
  Real x = Real::of(Rational(1, 2), wp);
  Real stop = Real::of(1L, wp);
  mpfr_mul_2si(stop.raw(), stop.raw(), -(static_cast<long>(p) + 16), MPFR_RNDN);
  for (int i = 0; i < 500; ++i) {
    Real fx = power_sum(pb, x) - one;
    Real d = Real::of(0L, wp);
    for (long e : pb.atom_exponents) d = d + pow(x, e - 1) * e;
    for (const auto& t : pb.tails) {
      Real xq = pow(x, t.step);
      d = d + (pow(x, t.start - 1) * t.start * (one - xq) + pow(x, t.start + t.step - 1) * t.step) /
                  ((one - xq) * (one - xq));
    }
    Real step = fx / d;
    x = x - step;
    if (abs(step) < stop) break;
  }

  // Exactly representable center, bracket half-width 2^-(p-4).
  Rational cx;
  {
    Real xr(p);
    mpfr_set(xr.raw(), x.raw(), MPFR_RNDN);
    mpq_t q;
    mpq_init(q);
    mpfr_get_q(q, xr.raw());
    cx = Rational(mpq_class(q));
    mpq_clear(q);
  }
  Rational half_width;
  {
    Integer two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(p > 8 ? p - 4 : 4));
    half_width = Rational(1) / Rational(two_pow);
  }
  Rational lo = cx - half_width, hi = cx + half_width;
  if (lo <= 0 || hi >= 1 || power_sum_exact(pb, lo) >= 1 || power_sum_exact(pb, hi) <= 1)
    throw certification_error("failed to certify power-basis root bracket");

  pb.base = Real::of(cx, p);
  pb.base_radius = Real::of(half_width, p);
  pb.exact_base = std::nullopt;
  return pb;
}

RationalFunction denominator_series(const PowerBasis& pb) {
  // Common denominator D = prod (1 - z^{q_t});
  // N = (sum_atoms z^{n_j} - 1) * D + sum_t z^{p_t} * prod_{s != t} (1 - z^{q_s}).
  ZPoly den{Integer(1)};
  for (const auto& t : pb.tails) {
    ZPoly f = zp_add(zp_monomial(0), zp_neg(zp_monomial(static_cast<std::size_t>(t.step))));
    den = zp_mul(den, f);
  }
  ZPoly finite = zp_monomial(0, Integer(-1));
  for (long e : pb.atom_exponents)
    finite = zp_add(finite, zp_monomial(static_cast<std::size_t>(e)));
  ZPoly num = zp_mul(finite, den);
  for (std::size_t t = 0; t < pb.tails.size(); ++t) {
    ZPoly term = zp_monomial(static_cast<std::size_t>(pb.tails[t].start));
    for (std::size_t s = 0; s < pb.tails.size(); ++s) {
      if (s == t) continue;
      ZPoly f =
          zp_add(zp_monomial(0), zp_neg(zp_monomial(static_cast<std::size_t>(pb.tails[s].step))));
      term = zp_mul(term, f);
    }
    num = zp_add(num, term);
  }
  return {zp_trim(num), zp_trim(den)};
}

std::vector<Integer> lattice_counts(const PowerBasis& pb, std::size_t n) {
  std::vector<Integer> cnt(n + 1, Integer(0));
  // Rolling prefix sums per tail: S_t(m) = cnt[m - p] + S_t(m - q).
  std::vector<std::vector<Integer>> tail_prefix(pb.tails.size(),
                                                std::vector<Integer>(n + 1, Integer(0)));
  for (std::size_t m = 0; m <= n; ++m) {
    Integer total = 1;
    for (long e : pb.atom_exponents)
      if (static_cast<long>(m) >= e) total += cnt[m - static_cast<std::size_t>(e)];
    for (std::size_t t = 0; t < pb.tails.size(); ++t) {
      long p = pb.tails[t].start, q = pb.tails[t].step;
      if (static_cast<long>(m) >= p) {
        Integer s = cnt[m - static_cast<std::size_t>(p)];
        if (static_cast<long>(m - p) >= q)
          s += tail_prefix[t][m - static_cast<std::size_t>(p) - static_cast<std::size_t>(q)];
        tail_prefix[t][m - static_cast<std::size_t>(p)] = s;
        total += s;
      }
    }
    cnt[m] = total;
  }
  return cnt;
}

SeriesCoeffs taylor_g(const PowerBasis& pb, std::size_t n_coeffs) {
  RationalFunction rf = denominator_series(pb);
  // g = (z - x) * den / ((z - 1) * num); power-series long division A/B.
  SeriesCoeffs out;
  std::size_t n = n_coeffs + 1;
  if (pb.exact_base) {
    QPoly a = qp_mul(QPoly{-*pb.exact_base, Rational(1)}, qp_from(rf.den));
    QPoly b = qp_mul(QPoly{Rational(-1), Rational(1)}, qp_from(rf.num));
    std::vector<Rational> c(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      Rational acc = i < a.size() ? a[i] : Rational(0);
      for (std::size_t k = 1; k <= i && k < b.size(); ++k) acc -= b[k] * c[i - k];
      c[i] = acc / b[0];
    }
    out.exact = true;
    out.rational = std::move(c);
    for (const auto& q : out.rational) out.values.push_back(Real::of(q));
  } else {
    mpfr_prec_t p = pb.base.prec();
    std::vector<Real> a(rf.den.size() + 1, Real::of(0L, p)), b(rf.num.size() + 1, Real::of(0L, p));
    for (std::size_t i = 0; i < rf.den.size(); ++i) {
      Real d = Real::of(Rational(rf.den[i]), p);
      a[i] = a[i] - pb.base * d;
      a[i + 1] = a[i + 1] + d;
    }
    for (std::size_t i = 0; i < rf.num.size(); ++i) {
      Real nv = Real::of(Rational(rf.num[i]), p);
      b[i] = b[i] - nv;
      b[i + 1] = b[i + 1] + nv;
    }
    std::vector<Real> c(n, Real::of(0L, p));
    for (std::size_t i = 0; i < n; ++i) {
      Real acc = i < a.size() ? a[i] : Real::of(0L, p);
      for (std::size_t k = 1; k <= i && k < b.size(); ++k) acc = acc - b[k] * c[i - k];
      c[i] = acc / b[0];
    }
    out.values = std::move(c);
  }
  return out;
}

Real radius_R_star(const PowerBasis& pb, const Rational& eps, mpfr_prec_t prec,
                   std::vector<PolyRoot>* roots_out) {
  if (eps <= 0 || eps >= 1) throw domain_error("eps must be in (0,1)");
  mpfr_prec_t p = std::max<mpfr_prec_t>(pick(prec), 256);
  RationalFunction rf = denominator_series(pb);

  // Clearing denominators introduces the roots of prod(1 - z^q); strip the
  // common factor so only genuine zeros of the series survive.
  ZPoly reduced = rf.num;
  if (zp_degree(rf.den) > 0) {
    QPoly g = qp_gcd(qp_from(rf.num), qp_from(rf.den));
    if (g.size() > 1) reduced = qp_primitive(qp_divexact(qp_from(rf.num), g));
  }

  Real base = Real::of(0L, p) + pb.base;  // at working precision
  Real disk = exp(Real::of(1 - eps, p) * log(base));  // x^(1-eps)
  Real rstar = disk;
  std::vector<PolyRoot> roots;
  if (zp_degree(reduced) >= 1) roots = find_poly_roots(reduced, p);
  for (const auto& root : roots) {
    Real dist_to_base = abs(root.center - Complex{base, Real::of(0L, p)});
    if (dist_to_base <= root.radius + pb.base_radius) continue;  // the base root itself
    Real mag_lo = abs(root.center) - root.radius;
    if (mag_lo < rstar) rstar = max(mag_lo, Real::of(0L, p));
  }
  if (roots_out) *roots_out = std::move(roots);
  return rstar;
}

std::pair<Real, Real> rho_bound(const PowerBasis& pb, const Rational& eps, mpfr_prec_t prec) {
  Real rstar = radius_R_star(pb, eps, prec);
  Real lo = (Real::of(0L, rstar.prec()) + pb.base) / rstar;
  if (lo >= Real::of(1L)) throw certification_error("x/R* >= 1; R* certification failed");
  return {lo, Real::of(1L, lo.prec())};
}

namespace {

struct TailTerm {
  Rational a, r;
};

void collect_terms(const Scheme& s, std::vector<Rational>& atoms, std::vector<TailTerm>& tails) {
  for (const auto& b : s.blocks()) {
    if (const auto* at = std::get_if<AtomSpec>(&b))
      atoms.push_back(at->length);
    else {
      const auto& t = std::get<GeoTailSpec>(b);
      tails.push_back({t.first, t.ratio});
    }
  }
}

void require_domain(const Scheme& s, const Complex& z) {
  if (!s.finite() && z.re.sign() <= 0)
    throw domain_error("f requires Re(z) > 0 for schemes with tails");
}

}  // namespace

Complex f_eval(const Scheme& s, const Complex& z) {
  require_domain(s, z);
  mpfr_prec_t p = std::max(z.re.prec(), z.im.prec());
  std::vector<Rational> atoms;
  std::vector<TailTerm> tails;
  collect_terms(s, atoms, tails);
  Complex one{Real::of(1L, p), Real::of(0L, p)};
  Complex total = -one;
  for (const auto& a : atoms) total = total + pow_rat_base(a, z);
  for (const auto& t : tails)
    total = total + pow_rat_base(t.a, z) / (one - pow_rat_base(t.r, z));
  return total;
}

Complex f_derivative(const Scheme& s, const Complex& z) {
  require_domain(s, z);
  mpfr_prec_t p = std::max(z.re.prec(), z.im.prec());
  std::vector<Rational> atoms;
  std::vector<TailTerm> tails;
  collect_terms(s, atoms, tails);
  Complex one{Real::of(1L, p), Real::of(0L, p)};
  Complex total{Real::of(0L, p), Real::of(0L, p)};
  for (const auto& a : atoms) {
    Real la = log_rat(a, p);
    total = total + la * pow_rat_base(a, z);
  }
  for (const auto& t : tails) {
    Real la = log_rat(t.a, p), lr = log_rat(t.r, p);
    Complex az = pow_rat_base(t.a, z), rz = pow_rat_base(t.r, z);
    Complex d = one - rz;
    total = total + (la * az) / d + (lr * (az * rz)) / (d * d);
  }
  return total;
}

Real f_second_derivative_bound(const Scheme& s, const Real& u_min) {
  if (!s.finite() && u_min.sign() <= 0)
    throw domain_error("second-derivative bound needs u_min > 0 with tails");
  mpfr_prec_t p = u_min.prec();
  std::vector<Rational> atoms;
  std::vector<TailTerm> tails;
  collect_terms(s, atoms, tails);
  Real total = Real::of(0L, p);
  for (const auto& a : atoms) {
    Real la = log_rat(a, p);
    total = total + exp(u_min * la) * (la * la);
  }
  Real one = Real::of(1L, p);
  for (const auto& t : tails) {
    // sum_k (a r^k)^u (ln a + k ln r)^2 in closed form.
    Real la = log_rat(t.a, p), lr = log_rat(t.r, p);
    Real au = exp(u_min * la), ru = exp(u_min * lr);
    Real s0 = one / (one - ru);
    Real s1 = ru / ((one - ru) * (one - ru));
    Real s2 = (ru * (one + ru)) / ((one - ru) * (one - ru) * (one - ru));
    total = total + au * (la * la * s0 + (la * lr * s1) * 2L + lr * lr * s2);
  }
  return total;
}

namespace {

// --- argument principle / zero isolation -----------------------------------

struct boundary_zero_suspect {};

struct WindingCtx {
  const Scheme& scheme;
  mpfr_prec_t prec;
  Real tiny;
  Real pi_v;
  int max_depth = 48;
};

Real principal_diff(const WindingCtx& ctx, const Real& ph2, const Real& ph1) {
  Real d = ph2 - ph1;
  if (d > ctx.pi_v) d = d - ctx.pi_v * 2L;
  if (d < -ctx.pi_v) d = d + ctx.pi_v * 2L;
  return d;
}

// Phase advance of f along [z1, z2], adaptively bisected until each piece
// turns by less than pi/3. Throws boundary_zero_suspect when |f| collapses
// on the path (zero on or hugging the contour).
Real segment_phase(const WindingCtx& ctx, const Complex& z1, const Complex& z2, const Complex& f1,
                   const Complex& f2, int depth) {
  if (abs(f1) < ctx.tiny || abs(f2) < ctx.tiny) throw boundary_zero_suspect{};
  Real d = principal_diff(ctx, arg(f2), arg(f1));
  if (abs(d) < ctx.pi_v / 3L) return d;
  if (depth >= ctx.max_depth)
    throw certification_error("winding phase tracking failed to converge");
  Complex zm{(z1.re + z2.re) / 2L, (z1.im + z2.im) / 2L};
  Complex fm = f_eval(ctx.scheme, zm);
  return segment_phase(ctx, z1, zm, f1, fm, depth + 1) +
         segment_phase(ctx, zm, z2, fm, f2, depth + 1);
}

struct RBox {
  Real re_lo, re_hi, im_lo, im_hi;

  Real width() const { return re_hi - re_lo; }
  Real height() const { return im_hi - im_lo; }
};

long winding_number(const WindingCtx& ctx, const RBox& box) {
  // Corner-to-corner edges with an initial split of ~5 samples per unit
  // length (the Dirichlet sums here vary on scale ~2pi/ln(1/alpha_min) > 1).
  std::vector<Complex> corners = {{box.re_lo, box.im_lo},
                                  {box.re_hi, box.im_lo},
                                  {box.re_hi, box.im_hi},
                                  {box.re_lo, box.im_hi}};
  Real total = Real::of(0L, ctx.prec);
  for (int e = 0; e < 4; ++e) {
    Complex a = corners[e], b = corners[(e + 1) % 4];
    double len = std::abs((b.re - a.re).to_double()) + std::abs((b.im - a.im).to_double());
    long pieces = std::max(2L, static_cast<long>(len * 5));
    Complex prev_z = a;
    Complex prev_f = f_eval(ctx.scheme, prev_z);
    for (long i = 1; i <= pieces; ++i) {
      Rational t(i, pieces);
      Complex z{a.re + (b.re - a.re) * Real::of(t, ctx.prec),
                a.im + (b.im - a.im) * Real::of(t, ctx.prec)};
      Complex fz = f_eval(ctx.scheme, z);
      total = total + segment_phase(ctx, prev_z, z, prev_f, fz, 0);
      prev_z = z;
      prev_f = fz;
    }
  }
  Real w = total / (ctx.pi_v * 2L);
  double wd = w.to_double();
  long rounded = std::lround(wd);
  if (std::abs(wd - static_cast<double>(rounded)) > 0.1)
    throw certification_error("winding number not close to an integer");
  return rounded;
}

struct ZeroSearch {
  const Scheme& scheme;
  WindingCtx ctx;
  std::vector<ZeroEnclosure> found;
  // Deterministic jitter ladder, documented width 1e-6.
  Rational jitter = Rational(1, 1000000);

  long counted_winding(RBox box) {
    for (int attempt = 0;; ++attempt) {
      try {
        return winding_number(ctx, box);
      } catch (const boundary_zero_suspect&) {
        if (attempt >= 5) throw boundary_zero_error("zero persists on contour after jitter");
        Real j = Real::of(jitter * (attempt + 1), ctx.prec);
        box.re_lo = box.re_lo - j;
        box.re_hi = box.re_hi + j;
        box.im_lo = box.im_lo - j;
        box.im_hi = box.im_hi + j;
      }
    }
  }

  // Newton refinement + Kantorovich ball. Returns nullopt when the iteration
  // escapes or certification fails (caller then subdivides further).
  std::optional<ZeroEnclosure> refine(const RBox& box, int multiplicity) {
    Complex z{(box.re_lo + box.re_hi) / 2L, (box.im_lo + box.im_hi) / 2L};
    Real stop = Real::of(1L, ctx.prec);
    mpfr_mul_2si(stop.raw(), stop.raw(), -(static_cast<long>(ctx.prec) / 2), MPFR_RNDN);
    for (int i = 0; i < 120; ++i) {
      Complex fz = f_eval(scheme, z);
      Complex dz = f_derivative(scheme, z);
      if (abs(dz).sign() == 0) return std::nullopt;
      Complex step = fz / dz;
      z = z - step;
      if (z.re.sign() <= 0 && !scheme.finite()) return std::nullopt;
      if (abs(step) < stop) break;
    }
    Complex fz = f_eval(scheme, z);
    Complex dz = f_derivative(scheme, z);
    Real beta = abs(fz) / abs(dz);
    Real umin = z.re - beta * 2L;
    if (!scheme.finite() && umin.sign() <= 0) return std::nullopt;
    Real m2 = f_second_derivative_bound(scheme, umin);
    Real h = beta * m2 / abs(dz);
    if (!(h < Real::of(Rational(1, 4), ctx.prec))) return std::nullopt;
    Real slack = Real::of(1L, ctx.prec);
    mpfr_mul_2si(slack.raw(), slack.raw(), -(static_cast<long>(ctx.prec) * 2 / 3), MPFR_RNDN);
    Real radius = beta * 2L + slack;
    // The certified ball must sit inside (a slightly inflated copy of) the
    // box that isolated it.
    Real pad = Real::of(jitter * 8, ctx.prec) + radius;
    if (z.re < box.re_lo - pad || z.re > box.re_hi + pad || z.im < box.im_lo - pad ||
        z.im > box.im_hi + pad)
      return std::nullopt;
    return ZeroEnclosure{z, radius, multiplicity};
  }

  void isolate(const RBox& box, long count, int depth) {
    if (count == 0) return;
    if (depth > 80) throw certification_error("zero isolation recursion too deep");
    if (count == 1) {
      if (auto z = refine(box, 1)) {
        found.push_back(*z);
        return;
      }
    }
    double w = box.width().to_double(), h = box.height().to_double();
    // A multiple zero (or unlucky cluster) in a tiny box: record the cluster.
    if (std::max(w, h) < 1e-9) {
      if (auto z = refine(box, static_cast<int>(count))) {
        found.push_back(*z);
        return;
      }
      throw certification_error("could not certify cluster of zeros");
    }
    bool split_im = h >= w;
    for (int attempt = 0; attempt < 5; ++attempt) {
      Real mid = split_im ? (box.im_lo + box.im_hi) / 2L : (box.re_lo + box.re_hi) / 2L;
      mid = mid + Real::of(jitter * attempt, ctx.prec);
      RBox a = box, b = box;
      if (split_im) {
        a.im_hi = mid;
        b.im_lo = mid;
      } else {
        a.re_hi = mid;
        b.re_lo = mid;
      }
      try {
        long ca = counted_winding(a);
        long cb = counted_winding(b);
        if (ca + cb != count) continue;  // jittered outward overlap caught a zero twice
        isolate(a, ca, depth + 1);
        isolate(b, cb, depth + 1);
        return;
      } catch (const boundary_zero_error&) {
        continue;
      }
    }
    throw boundary_zero_error("could not split box away from zeros");
  }
};

}  // namespace

ZeroList find_zeros(const Scheme& s, const Box& box, mpfr_prec_t prec) {
  mpfr_prec_t p = std::max<mpfr_prec_t>(pick(prec), 192);
  if (box.re_lo >= box.re_hi || box.im_lo >= box.im_hi)
    throw domain_error("find_zeros box is empty");
  if (!s.finite() && box.re_lo <= 0)
    throw domain_error("find_zeros box must satisfy Re(z) > 0 with tails");

  WindingCtx ctx{s, p, Real::of(0L, p), pi(p)};
  ctx.tiny = Real::of(1L, p);
  mpfr_mul_2si(ctx.tiny.raw(), ctx.tiny.raw(), -48, MPFR_RNDN);

  RBox rbox{Real::of(box.re_lo, p), Real::of(box.re_hi, p), Real::of(box.im_lo, p),
            Real::of(box.im_hi, p)};
  ZeroSearch search{s, ctx};
  long total = search.counted_winding(rbox);
  search.isolate(rbox, total, 0);

  long sum = 0;
  for (const auto& z : search.found) sum += z.multiplicity;
  if (sum != total)
    throw certification_error("isolated zero count does not match winding number");

  std::sort(search.found.begin(), search.found.end(),
            [](const ZeroEnclosure& a, const ZeroEnclosure& b) {
              if (a.center.im < b.center.im) return true;
              if (b.center.im < a.center.im) return false;
              return a.center.re < b.center.re;
            });
  return {std::move(search.found), total, box};
}

Real predicted_P_star(const Real& r) {
  if (r.sign() < 0 || !(r < Real::of(Rational(1, 2), r.prec())))
    throw domain_error("P* needs r in [0, 1/2)");
  Real one = Real::of(1L, r.prec());
  return (one - r * 2L) / ((one + r) * 8L);
}

ZeroRegionReport zero_region_check(const Scheme& s, const ZeroList& zeros, const Real& r,
                                   const Rational& beta) {
  if (rank_report(s).rank == 1)
    throw not_higher_rank_error("zero-region law presumes a higher-rank scheme");
  if (beta <= 0 || beta >= 1) throw domain_error("beta must be in (0,1)");
  mpfr_prec_t p = r.prec();
  ZeroRegionReport rep;
  rep.v_threshold = pi(p) * 2L / -log_rat(beta, p);
  Real inf = Real::of(1L, p);
  mpfr_set_inf(inf.raw(), 1);
  rep.fitted_C = inf;
  Real expo = Real::of(2L, p) + r * 2L;
  for (std::size_t i = 0; i < zeros.zeros.size(); ++i) {
    const auto& z = zeros.zeros[i];
    Real u = Real::of(1L, p) - z.center.re;
    Real v = abs(z.center.im);
    if (!(u.sign() > 0)) {
      rep.violations.push_back(i);
      continue;
    }
    if (v <= rep.v_threshold) {
      ++rep.below_threshold;
      continue;
    }
    ++rep.considered;
    Real c = u * exp(expo * log(v));
    rep.fitted_C = min(rep.fitted_C, c);
  }
  rep.vacuous = rep.considered == 0;
  return rep;
}

}  // namespace kak
