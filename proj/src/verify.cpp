#include "kakutani/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "kakutani/contfrac.hpp"
#include "kakutani/discrepancy.hpp"
#include "kakutani/errors.hpp"
#include "kakutani/experiments.hpp"
#include "kakutani/report.hpp"
#include "kakutani/spectral.hpp"

namespace kak {

Rational brute_force_extreme(const std::vector<Rational>& pts) {
  if (pts.empty()) throw empty_point_set_error("brute_force_extreme on empty set");
  long n = static_cast<long>(pts.size());
  std::vector<Rational> cand = pts;
  cand.push_back(0);
  cand.push_back(1);
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  // Index arithmetic for O(1) counts per candidate pair.
  std::vector<long> lt, le;
  for (const auto& c : cand) {
    lt.push_back(std::lower_bound(pts.begin(), pts.end(), c) - pts.begin());
    le.push_back(std::upper_bound(pts.begin(), pts.end(), c) - pts.begin());
  }
  Rational best = 0;
  for (std::size_t i = 0; i < cand.size(); ++i)
    for (std::size_t j = i + 1; j < cand.size(); ++j) {
      Rational len = cand[j] - cand[i];
      Rational closed(le[j] - lt[i], n);
      Rational open(lt[j] - le[i], n);
      if (closed - len > best) best = closed - len;
      if (len - open > best) best = len - open;
    }
  return best;
}

Rational brute_force_star(const std::vector<Rational>& pts) {
  if (pts.empty()) throw empty_point_set_error("brute_force_star on empty set");
  long n = static_cast<long>(pts.size());
  std::vector<Rational> cand = pts;
  cand.push_back(1);
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  Rational best = 0;
  for (const auto& c : cand) {
    if (c <= 0) continue;
    long lt = std::lower_bound(pts.begin(), pts.end(), c) - pts.begin();
    long le = std::upper_bound(pts.begin(), pts.end(), c) - pts.begin();
    if (Rational(le, n) - c > best) best = Rational(le, n) - c;
    if (c - Rational(lt, n) > best) best = c - Rational(lt, n);
  }
  return best;
}

namespace {

struct Battery {
  VerifySummary summary;
  Budget budget;
  mpfr_prec_t prec;
  std::mt19937_64 rng{0x5eed5eedULL};

  void record(const std::string& module, const std::string& instance,
              const std::string& invariant, bool pass, const std::string& detail = "") {
    summary.results.push_back({module, instance, invariant, pass, detail});
    if (!pass) summary.all_pass = false;
  }

  Rational random_rational(long max_den) {
    std::uniform_int_distribution<long> dd(1, max_den);
    long d = dd(rng);
    std::uniform_int_distribution<long> nd(0, d - 1);
    return rat(nd(rng), d);
  }

  Word random_word(const Scheme& s, const Rational& min_alpha) {
    Word w;
    Rational a = 1;
    while (true) {
      auto syms = s.truncated_alphabet(min_alpha / a);
      if (syms.empty()) break;
      std::uniform_int_distribution<std::size_t> pick(0, syms.size());
      std::size_t i = pick(rng);
      if (i == syms.size()) break;  // stop early sometimes
      w.symbols.push_back(syms[i].sym);
      a *= syms[i].alpha;
    }
    return w;
  }

  // ---- scheme module ----
  void scheme_checks() {
    for (const auto& [name, s] : bundled_schemes()) {
      record("scheme", name, "serialize/parse round-trip",
             Scheme::parse(s.serialize()) == s);

      // Mass coverage of the truncated alphabet: for lambda at most the
      // smallest atom, only tail mass below lambda is lost, and each tail
      // loses less than lambda/(1 - max ratio).
      Rational lam(1, 1000);
      for (const auto& b : s.blocks())
        if (const auto* a = std::get_if<AtomSpec>(&b)) lam = std::min(lam, a->length);
      Rational covered = 0;
      for (const auto& si : s.truncated_alphabet(lam)) covered += si.alpha;
      Rational bound = 1;
      if (s.tail_count() > 0)
        bound = 1 - Rational(static_cast<long>(s.tail_count())) * lam / (1 - s.max_tail_ratio());
      record("scheme", name, "truncated alphabet mass coverage", covered >= bound,
             "covered " + to_pq(covered) + " >= " + to_pq(bound));

      bool affine_ok = true;
      for (int i = 0; i < 20 && affine_ok; ++i) {
        Word v = random_word(s, rat(1, 40)), w = random_word(s, rat(1, 40));
        Word vw = v;
        vw.symbols.insert(vw.symbols.end(), w.symbols.begin(), w.symbols.end());
        affine_ok = word_left_endpoint(s, vw) ==
                    word_left_endpoint(s, v) + word_alpha(s, v) * word_left_endpoint(s, w);
      }
      record("scheme", name, "affine composition law", affine_ok);

      // Word intervals are nested or disjoint, never partially overlapping.
      bool dichotomy_ok = true;
      for (int i = 0; i < 30 && dichotomy_ok; ++i) {
        Word v = random_word(s, rat(1, 60)), w = random_word(s, rat(1, 60));
        Rational lv = word_left_endpoint(s, v), av = word_alpha(s, v);
        Rational lw = word_left_endpoint(s, w), aw = word_alpha(s, w);
        bool disjoint = lv + av <= lw || lw + aw <= lv;
        bool nested = (lv <= lw && lw + aw <= lv + av) || (lw <= lv && lv + av <= lw + aw);
        dichotomy_ok = disjoint || nested;
      }
      record("scheme", name, "word intervals nested or disjoint", dichotomy_ok);
    }
  }

  // ---- enumerate module ----
  void enumerate_checks() {
    for (const auto& [name, s] : bundled_schemes()) {
      Rational lam(1, 50);
      auto words = enumerate_A_words(s, lam, budget);
      record("enumerate", name, "enumerate/count agreement",
             Integer(static_cast<long>(words.size())) == count_A(s, lam, budget));

      bool lemma1_ok = true;
      std::string detail;
      for (long den : {10L, 100L, 1000L}) {
        Rational l(1, den);
        Integer a = count_A(s, l, budget);
        Integer expect = a;
        if (auto z = s.zero_symbol()) expect = a - count_A(s, l / s.alpha(*z), budget);
        std::size_t got = point_set(s, l, budget).size();
        if (Integer(static_cast<long>(got)) != expect) {
          lemma1_ok = false;
          detail = "lambda=1/" + std::to_string(den);
        }
      }
      record("enumerate", name, "point count identity (fixed-zero correction)", lemma1_ok, detail);

      bool lemma2_ok = true;
      for (int i = 0; i < 12 && lemma2_ok; ++i) {
        Word v = random_word(s, rat(1, 12));
        Rational av = word_alpha(s, v), lv = word_left_endpoint(s, v);
        Rational lam2 = random_rational(200);
        if (lam2 == 0) lam2 = rat(1, 7);
        if (lam2 * av < rat(1, 4000)) continue;
        PointSet big = point_set(s, lam2 * av, budget);
        PointSet small = point_set(s, lam2, budget);
        auto lo = std::lower_bound(big.points.begin(), big.points.end(), lv);
        auto hi = std::lower_bound(big.points.begin(), big.points.end(), Rational(lv + av));
        lemma2_ok = static_cast<std::size_t>(hi - lo) == small.size();
      }
      record("enumerate", name, "subinterval point count identity", lemma2_ok);

      auto ladder = length_ladder(s, 6, budget);
      bool mono_ok = true;
      PointSet prev = point_set(s, ladder.values[2], budget);
      for (std::size_t k = 3; k < ladder.values.size() && mono_ok; ++k) {
        PointSet cur = point_set(s, ladder.values[k], budget);
        mono_ok = std::includes(cur.points.begin(), cur.points.end(), prev.points.begin(),
                                prev.points.end());
        prev = std::move(cur);
      }
      record("enumerate", name, "point sets grow as lambda shrinks", mono_ok);

      auto level = partition_level(s, 4, rat(1, 10000), budget);
      bool disjoint_ok = true;
      Rational mass = level.truncated_mass;
      Rational edge = 0;
      for (const auto& e : level.entries) {
        if (e.left < edge) disjoint_ok = false;
        edge = e.left + e.length;
        mass += e.length;
      }
      record("enumerate", name, "partition level disjoint", disjoint_ok);
      record("enumerate", name, "partition level mass accounted", mass == 1,
             "mass " + to_pq(mass));

      Rational lam3 = random_rational(500);
      if (lam3 == 0) lam3 = rat(1, 3);
      std::size_t nol = n_of_lambda(s, lam3, budget);
      auto lad2 = length_ladder(s, nol + 1, budget);
      record("enumerate", name, "ladder index brackets lambda",
             lad2.values[nol] >= lam3 && lam3 > lad2.values[nol + 1],
             "lambda " + to_pq(lam3));
    }
  }

  // ---- renewal module ----
  void renewal_checks() {
    {
      Scheme a = Scheme::build({AtomSpec{rat(1, 2)}, AtomSpec{rat(1, 3)}, AtomSpec{rat(1, 6)}});
      Scheme b = Scheme::build({AtomSpec{rat(1, 6)}, AtomSpec{rat(1, 2)}, AtomSpec{rat(1, 3)}});
      record("renewal", "half-third-sixth", "rank invariant under block permutation",
             rank_report(a).rank == rank_report(b).rank);
      Scheme c = Scheme::build(
          {AtomSpec{rat(1, 2)}, AtomSpec{rat(1, 4)}, AtomSpec{rat(1, 8)}, AtomSpec{rat(1, 8)}});
      Scheme d = Scheme::build({AtomSpec{rat(1, 8)}, AtomSpec{rat(1, 2)}, AtomSpec{rat(1, 8)},
                                AtomSpec{rat(1, 4)}});
      auto rc = rank_report(c), rd = rank_report(d);
      record("renewal", "half-quarter-eighths", "rank and base invariant under permutation",
             rc.rank == rd.rank && rc.minimal_base && rd.minimal_base &&
                 *rc.minimal_base == *rd.minimal_base);
    }
    for (const auto& [name, s] : bundled_schemes()) {
      auto rep = rank_report(s);
      if (rep.rank == 1) {
        bool exact_ok = true;
        for (std::uint32_t i = 0; i < s.blocks().size(); ++i) {
          const auto& e = rep.block_exponents[i];
          exact_ok = exact_ok && pow_rat(*rep.minimal_base, static_cast<unsigned long>(e.start)) ==
                                     s.alpha(Symbol{i, 0});
          if (std::holds_alternative<GeoTailSpec>(s.blocks()[i]))
            exact_ok = exact_ok &&
                       pow_rat(*rep.minimal_base, static_cast<unsigned long>(e.start + e.step)) ==
                           s.alpha(Symbol{i, 1});
        }
        record("renewal", name, "minimal base reproduces lengths exactly", exact_ok);
      }
      ConvergenceExperiment conv = renewal_convergence(s, rep.rank == 1 ? 20 : 6, budget);
      std::ostringstream det;
      det << "final " << conv.final_value << " vs " << conv.predicted;
      record("renewal", name, "lambda|A| converges to predicted constant (2%)",
             conv.relative_error < 0.02, det.str());
    }
    {
      const Scheme& h236 = bundled_schemes()[6].scheme;
      auto err = renewal_error_experiment(h236, dense_decade_grid(9), budget);
      std::ostringstream det;
      det << "slope " << err.slope;
      record("renewal", "half-third-sixth", "renewal error shows no power decay (|slope|<0.05)",
             std::abs(err.slope) < 0.05, det.str());
      const Scheme& dy = bundled_schemes()[0].scheme;
      auto err2 = renewal_error_experiment(dy, lattice_grid(rat(1, 2), 1, 20), budget);
      std::ostringstream det2;
      det2 << "slope " << err2.slope;
      record("renewal", "dyadic", "rank-one control error decays (slope>0.5)", err2.slope > 0.5,
             det2.str());
    }
  }

  // ---- spectral module ----
  void spectral_checks() {
    for (const auto& idx : {0, 4, 5}) {  // dyadic, powers-of-two, half-quarter-eighths
      const auto& [name, s] = bundled_schemes()[static_cast<std::size_t>(idx)];
      PowerBasis pb = power_basis(s, prec);
      SeriesCoeffs b = taylor_g(pb, 30);
      auto counts = lattice_counts(pb, 31);
      bool ident_ok = b.exact;
      const Rational& x = *pb.exact_base;
      for (std::size_t n = 0; n <= 30 && ident_ok; ++n) {
        Rational expect = (n == 0 ? Rational(0) : Rational(counts[n - 1])) - x * Rational(counts[n]);
        ident_ok = b.rational[n] == expect;
      }
      record("spectral", name, "taylor coefficients match counting identity", ident_ok);

      bool cross_ok = true;
      for (std::size_t n : {0UL, 3UL, 7UL}) {
        cross_ok = cross_ok &&
                   counts[n] == count_A(s, pow_rat(x, static_cast<unsigned long>(n)), budget);
      }
      record("spectral", name, "lattice counts agree with generic counts", cross_ok);

      SeriesCoeffs b50 = taylor_g(pb, 50);
      Real rstar = radius_R_star(pb, rat(1, 4), prec);
      Real mid = (Real::of(x) + rstar) / 2L;
      Real cap = max(abs(b50.values[0]), Real::of(1L)) * 4L;
      bool growth_ok = true;
      Real pw = Real::of(1L);
      for (std::size_t n = 0; n <= 50; ++n, pw = pw * mid)
        growth_ok = growth_ok && abs(b50.values[n]) * pw <= cap;
      record("spectral", name, "taylor coefficients bounded by R^-n", growth_ok);
    }
    {
      const Scheme& dy = bundled_schemes()[0].scheme;
      ZeroList zl = find_zeros(dy, Box{rat(9, 10), rat(11, 10), rat(-1), rat(1)}, prec);
      bool ok = zl.zeros.size() == 1 && zl.total_count == 1;
      if (ok) {
        Real d = abs(zl.zeros[0].center - Complex{Real::of(1L), Real::of(0L)});
        ok = d < Real::of(rat(1, 1000000000)) / 1000L;  // 1e-12
      }
      record("spectral", "dyadic", "zero of f at z=1 recovered", ok);

      bool conj_ok = true;
      const Scheme& h236 = bundled_schemes()[6].scheme;
      for (int i = 0; i < 5; ++i) {
        Complex z = Complex::of(0.9 + 0.05 * i, 3.0 + 2.7 * i);
        Complex a = f_eval(h236, conj(z)), b = conj(f_eval(h236, z));
        conj_ok = conj_ok && abs(a - b) < Real::of(rat(1, 1000000000000L));
      }
      record("spectral", "half-third-sixth", "f commutes with conjugation", conj_ok);
    }
    {
      // Golden ratio: all partial quotients are 1.
      RealInterval root5 = sqrt_interval(Rational(5), 512);
      Real glo(512), ghi(512);
      mpfr_add_ui(glo.raw(), root5.lo.raw(), 1, MPFR_RNDD);
      mpfr_div_ui(glo.raw(), glo.raw(), 2, MPFR_RNDD);
      mpfr_add_ui(ghi.raw(), root5.hi.raw(), 1, MPFR_RNDU);
      mpfr_div_ui(ghi.raw(), ghi.raw(), 2, MPFR_RNDU);
      RealInterval golden{glo, ghi};
      CFResult cf = continued_fraction(golden, 50, Integer("1000000000000000000"));
      bool all_ones = cf.quotients.size() == 50;
      for (const auto& q : cf.quotients) all_ones = all_ones && q == 1;
      record("spectral", "golden-ratio", "continued fraction is all ones", all_ones);

      // Reconstruction: the last convergent approximates within 1/q^2.
      RealInterval l23 = RealInterval::log_of(rat(1, 2), 512).neg();
      RealInterval l33 = RealInterval::log_of(rat(1, 3), 512).neg();
      CFResult cf2 = continued_fraction(l23.div_pos(l33), 30, Integer("1000000000000000000"));
      Integer p0 = 1, p1 = cf2.quotients[0], q0 = 0, q1 = 1;
      for (std::size_t i = 1; i < cf2.quotients.size(); ++i) {
        Integer p2 = cf2.quotients[i] * p1 + p0, q2 = cf2.quotients[i] * q1 + q0;
        p0 = p1;
        p1 = p2;
        q0 = q1;
        q1 = q2;
      }
      Real gamma = log_rat(rat(1, 2), 512) / log_rat(rat(1, 3), 512);
      Real diff = abs(gamma - Real::of(rat(p1, q1), 512));
      record("spectral", "log2/log3", "convergent within 1/q^2",
             diff < Real::of(Rational(1), 512) / Real::of(Rational(q1 * q1), 512));
    }
    {
      bool dec_ok = true;
      Real prev = predicted_P_star(Real::of(0L));
      for (int i = 1; i <= 9; ++i) {
        Real r = Real::of(rat(i, 20));
        Real v = predicted_P_star(r);
        dec_ok = dec_ok && v < prev;
        prev = v;
      }
      record("spectral", "P*", "strictly decreasing on [0, 1/2)", dec_ok);
    }
  }

  // ---- discrepancy module ----
  void discrepancy_checks() {
    bool rand_ok = true;
    for (int t = 0; t < 50 && rand_ok; ++t) {
      std::uniform_int_distribution<int> nd(1, 64);
      int n = nd(rng);
      std::vector<Rational> pts;
      for (int i = 0; i < n; ++i) pts.push_back(random_rational(97));
      std::sort(pts.begin(), pts.end());
      pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
      PointSet ps{rat(1, 2), pts};
      auto d = extreme_discrepancy(ps);
      rand_ok = d.extreme == brute_force_extreme(pts) && d.star == brute_force_star(pts);
    }
    record("discrepancy", "random-sets", "fast formulas equal quadratic oracle", rand_ok);

    {
      PointSet single{rat(1, 2), {Rational(0)}};
      auto d = extreme_discrepancy(single);
      record("discrepancy", "singleton", "extreme of {0} is 1", d.extreme == 1);
      std::vector<Rational> grid;
      for (int k = 0; k < 16; ++k) grid.push_back(rat(k, 16));
      auto dg = extreme_discrepancy(PointSet{rat(1, 16), grid});
      record("discrepancy", "uniform-grid", "extreme of {k/N} is 1/N", dg.extreme == rat(1, 16));
    }

    for (const auto& [name, s] : bundled_schemes()) {
      PointSet ps = point_set(s, rat(1, 300), budget);
      auto d = extreme_discrepancy(ps);
      record("discrepancy", name, "scheme point set matches quadratic oracle",
             d.extreme == brute_force_extreme(ps.points) && d.star == brute_force_star(ps.points));

      std::vector<Rational> grid;
      auto ladder = length_ladder(s, 14, budget);
      for (std::size_t k = 1; k < ladder.values.size(); ++k) grid.push_back(ladder.values[k]);
      auto curve = discrepancy_curve(s, grid, budget);
      double head = 0, tail = 0;
      for (std::size_t i = 0; i < 5; ++i) head = std::max(head, curve[i].extreme.get_d());
      for (std::size_t i = curve.size() - 5; i < curve.size(); ++i)
        tail = std::max(tail, curve[i].extreme.get_d());
      record("discrepancy", name, "refinement trend along the ladder", tail <= head,
             "head " + std::to_string(head) + " tail " + std::to_string(tail));
    }
  }
};

}  // namespace

VerifySummary run_verify(const Budget& budget, mpfr_prec_t prec) {
  Battery b;
  b.budget = budget;
  b.prec = prec > 0 ? prec : Real::default_prec();
  b.scheme_checks();
  b.enumerate_checks();
  b.renewal_checks();
  b.spectral_checks();
  b.discrepancy_checks();
  return b.summary;
}

}  // namespace kak
