#include "kakutani/renewal.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "kakutani/errors.hpp"

namespace kak {

namespace {

Integer pollard_rho(const Integer& n) {
  // n odd composite, not a prime power guard needed by caller.
  Integer x = 2, y = 2, d = 1, c = 1;
  auto f = [&](const Integer& v) { return (v * v + c) % n; };
  while (true) {
    x = 2;
    y = 2;
    d = 1;
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      Integer diff = x > y ? x - y : y - x;
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
    ++c;
  }
}

void factor_into(Integer n, std::map<Integer, long>& out) {
  if (n <= 1) return;
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
    while (n % p == 0) {
      ++out[Integer(p)];
      n /= p;
    }
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
    ++out[n];
    return;
  }
  // Trial division up to 10^5, then rho for what remains.
  for (Integer p = 17; p * p <= n && p < 100000; p += 2) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
      ++out[n];
      return;
    }
  }
  Integer d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

// Signed prime-exponent vector of a positive rational.
std::map<Integer, long> factor_rational(const Rational& q) {
  std::map<Integer, long> num, out;
  factor_into(q.get_num(), num);
  std::map<Integer, long> den;
  factor_into(q.get_den(), den);
  out = num;
  for (auto& [p, e] : den) out[p] -= e;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// Generators of the multiplicative lattice: atom lengths, and {first, ratio}
// per tail. Returned alongside the owning block index and whether the
// generator is a tail ratio.
struct Generator {
  Rational value;
  std::uint32_t block;
  bool is_ratio;
};

std::vector<Generator> lattice_generators(const Scheme& s) {
  std::vector<Generator> gen;
  for (std::uint32_t i = 0; i < s.blocks().size(); ++i) {
    if (const auto* a = std::get_if<AtomSpec>(&s.blocks()[i])) {
      gen.push_back({a->length, i, false});
    } else {
      const auto& t = std::get<GeoTailSpec>(s.blocks()[i]);
      gen.push_back({t.first, i, false});
      gen.push_back({t.ratio, i, true});
    }
  }
  return gen;
}

Integer row_gcd(const std::vector<long>& row) {
  Integer g = 0;
  for (long v : row) mpz_gcd_ui(g.get_mpz_t(), g.get_mpz_t(), std::labs(v));
  return g;
}

}  // namespace

std::map<Integer, long> factorize(Integer n) {
  if (n <= 0) throw domain_error("factorize needs a positive integer");
  std::map<Integer, long> out;
  factor_into(std::move(n), out);
  return out;
}

unsigned integer_matrix_rank(std::vector<std::vector<Integer>> m) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size();
  unsigned rank = 0;
  std::size_t rpos = 0;
  for (std::size_t c = 0; c < cols && rpos < rows; ++c) {
    std::size_t pivot = rpos;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rpos], m[pivot]);
    for (std::size_t r = rpos + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      Integer a = m[rpos][c], b = m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] = m[r][k] * a - m[rpos][k] * b;
    }
    ++rank;
    ++rpos;
  }
  return rank;
}

EntropyValue entropy(const Scheme& s, mpfr_prec_t prec) {
  mpfr_prec_t p = prec > 0 ? prec : std::max<mpfr_prec_t>(Real::default_prec(), 200);
  Real h = Real::of(0L, p);
  std::ostringstream terms;
  bool first_term = true;
  auto sep = [&]() -> std::ostringstream& {
    if (!first_term) terms << " + ";
    first_term = false;
    return terms;
  };
  for (const auto& b : s.blocks()) {
    if (const auto* a = std::get_if<AtomSpec>(&b)) {
      h = h - Real::of(a->length, p) * log_rat(a->length, p);
      sep() << "-(" << to_pq(a->length) << ")*ln(" << to_pq(a->length) << ")";
    } else {
      const auto& t = std::get<GeoTailSpec>(b);
      Rational m = t.first / (1 - t.ratio);
      Rational k = t.first * t.ratio / ((1 - t.ratio) * (1 - t.ratio));
      h = h - Real::of(m, p) * log_rat(t.first, p) - Real::of(k, p) * log_rat(t.ratio, p);
      sep() << "-(" << to_pq(m) << ")*ln(" << to_pq(t.first) << ") - (" << to_pq(k) << ")*ln("
            << to_pq(t.ratio) << ")";
    }
  }
  return {h, terms.str()};
}

RankReport rank_report(const Scheme& s) {
  auto gens = lattice_generators(s);

  // Union of primes over all generators, sorted: the lattice coordinates.
  std::vector<Integer> primes;
  std::vector<std::map<Integer, long>> factored;
  for (const auto& g : gens) {
    factored.push_back(factor_rational(g.value));
    for (const auto& [p, e] : factored.back())
      if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
  }
  std::sort(primes.begin(), primes.end());

  RankReport rep;
  rep.prime_basis = primes;
  for (const auto& f : factored) {
    std::vector<long> row(primes.size(), 0);
    for (const auto& [p, e] : f)
      row[std::find(primes.begin(), primes.end(), p) - primes.begin()] = e;
    rep.generators.push_back(std::move(row));
  }

  std::vector<std::vector<Integer>> mat;
  for (const auto& row : rep.generators) {
    std::vector<Integer> r(row.begin(), row.end());
    mat.push_back(std::move(r));
  }
  rep.rank = integer_matrix_rank(mat);

  if (rep.rank != 1) return rep;

  // All rows are integer multiples of the primitive direction g0. The
  // generated subgroup is gcd(multipliers) * g0 * Z.
  const std::vector<long>& first = rep.generators.front();
  Integer content = row_gcd(first);
  std::vector<Integer> g0;
  for (long v : first) g0.push_back(Integer(v) / content);

  std::vector<Integer> mult;
  for (const auto& row : rep.generators) {
    // row = m * g0 for integer m (rank is 1, so rows are parallel; the
    // multiplier is integral because entries are integers and g0 primitive).
    std::size_t j = 0;
    while (g0[j] == 0) ++j;
    Integer m = Integer(row[j]) / g0[j];
    for (std::size_t k = 0; k < row.size(); ++k)
      if (Integer(row[k]) != m * g0[k])
        throw invariant_error("rank-one lattice rows are not parallel");
    mult.push_back(m);
  }
  Integer c = 0;
  for (const auto& m : mult) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  // Multipliers are all positive when g0 is oriented along the generators
  // (each generator lies in (0,1)); c > 0 then.
  if (mult.front() < 0) {
    for (auto& v : g0) v = -v;
    for (auto& m : mult) m = -m;
  }

  Rational base = 1;
  for (std::size_t k = 0; k < primes.size(); ++k) {
    Integer e = c * g0[k];
    if (e == 0) continue;
    Integer ae = abs(e);
    Integer pw;
    mpz_pow_ui(pw.get_mpz_t(), primes[k].get_mpz_t(), ae.get_ui());
    if (e > 0)
      base *= Rational(pw);
    else
      base /= Rational(pw);
  }
  if (base >= 1) throw invariant_error("minimal base not in (0,1)");
  rep.minimal_base = base;

  // Exponents per generator, then folded back into per-block progressions.
  std::vector<long> n;
  for (const auto& m : mult) n.push_back(Integer(m / c).get_si());

  std::size_t gi = 0;
  for (std::uint32_t i = 0; i < s.blocks().size(); ++i) {
    if (std::holds_alternative<AtomSpec>(s.blocks()[i])) {
      rep.block_exponents.push_back({n[gi], 0});
      gi += 1;
    } else {
      rep.block_exponents.push_back({n[gi], n[gi + 1]});
      gi += 2;
    }
  }

  // Exactness check: alpha_j == base^{n_j} for the generator set.
  for (std::size_t k = 0; k < gens.size(); ++k)
    if (pow_rat(base, static_cast<unsigned long>(n[k])) != gens[k].value)
      throw invariant_error("minimal base does not reproduce generators");
  return rep;
}

Real eps_summability(const Scheme& s, const Rational& eps, mpfr_prec_t prec) {
  if (eps <= 0 || eps >= 1) throw domain_error("eps must be in (0,1)");
  mpfr_prec_t p = prec > 0 ? prec : Real::default_prec();
  Real e = Real::of(1 - eps, p);
  Real total = Real::of(0L, p);
  for (const auto& b : s.blocks()) {
    if (const auto* a = std::get_if<AtomSpec>(&b)) {
      total = total + exp(e * log_rat(a->length, p));
    } else {
      const auto& t = std::get<GeoTailSpec>(b);
      Real af = exp(e * log_rat(t.first, p));
      Real rf = exp(e * log_rat(t.ratio, p));
      total = total + af / (Real::of(1L, p) - rf);
    }
  }
  return total;
}

PredictedLimit predicted_limit(const Scheme& s, mpfr_prec_t prec) {
  mpfr_prec_t p = prec > 0 ? prec : std::max<mpfr_prec_t>(Real::default_prec(), 200);
  EntropyValue h = entropy(s, p);
  PredictedLimit out;
  out.one_over_H = Real::of(1L, p) / h.value;
  RankReport rank = rank_report(s);
  if (rank.rank == 1) {
    out.lattice = true;
    out.base = rank.minimal_base;
    out.span = -log_rat(*rank.minimal_base, p);
    out.constant = out.span / (h.value * Real::of(1 - *rank.minimal_base, p));
  } else {
    out.span = Real::of(0L, p);
    out.constant = out.one_over_H;
  }
  return out;
}

namespace {

// s with zeta(s) = 2, bracketed then bisected at working precision.
Real zeta_eq_two(mpfr_prec_t p) {
  Real lo = Real::of_str("1.7", p), hi = Real::of_str("1.8", p);
  for (int i = 0; i < static_cast<int>(p) + 8; ++i) {
    Real mid = (lo + hi) / 2L;
    if (zeta(mid) > Real::of(2L, p))
      lo = mid;  // zeta decreasing on (1, inf)
    else
      hi = mid;
  }
  return (lo + hi) / 2L;
}

std::optional<Real> zeta_family_summability(const Rational& eps, mpfr_prec_t prec) {
  mpfr_prec_t p = prec > 0 ? prec : Real::default_prec();
  Real s = zeta_eq_two(p);
  Real a = s * Real::of(1 - eps, p);
  if (a <= Real::of(1L, p)) return std::nullopt;
  return zeta(a) - Real::of(1L, p);
}

Real zeta_family_entropy(mpfr_prec_t prec) {
  mpfr_prec_t p = prec > 0 ? prec : Real::default_prec();
  Real s = zeta_eq_two(p + 64);
  // H = -s * zeta'(s); central difference at a step far below the target
  // precision keeps the truncation error negligible.
  Real h(p + 64);
  mpfr_set_ui_2exp(h.raw(), 1, -static_cast<long>(p / 3 + 16), MPFR_RNDN);
  Real der = (zeta(s + h) - zeta(s - h)) / (h * 2L);
  return -(s * der);
}

std::optional<Real> cantor_family_summability(const Rational& eps, mpfr_prec_t prec) {
  mpfr_prec_t p = prec > 0 ? prec : Real::default_prec();
  // sum over k of 2^k * 3^{-(k+1)(1-eps)}; geometric with ratio 2*3^{eps-1}.
  Real t = exp(Real::of(eps - 1, p) * log_rat(Rational(3), p));
  Real ratio = t * 2L;
  if (ratio >= Real::of(1L, p)) return std::nullopt;
  return t / (Real::of(1L, p) - ratio);
}

Real cantor_family_entropy(mpfr_prec_t prec) {
  mpfr_prec_t p = prec > 0 ? prec : Real::default_prec();
  return log_rat(Rational(3), p) * 3L;
}

}  // namespace

const std::vector<SymbolicFamily>& symbolic_catalog() {
  static const std::vector<SymbolicFamily> catalog = {
      {"zeta-normalized",
       "lengths 1/n^s for n >= 2 with s chosen so that zeta(s) = 2 (s ~ 1.7286)",
       true, 0, std::nullopt, &zeta_family_summability, &zeta_family_entropy},
      {"cantor-complement",
       "gap lengths of the middle-third Cantor set: 3^-(k+1) with multiplicity 2^k",
       false, 1, Rational(1, 3), &cantor_family_summability, &cantor_family_entropy},
  };
  return catalog;
}

}  // namespace kak
