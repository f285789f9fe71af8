// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are pinned in code next to each check.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "kakutani/contfrac.hpp"
#include "kakutani/discrepancy.hpp"
#include "kakutani/enumerate.hpp"
#include "kakutani/experiments.hpp"
#include "kakutani/renewal.hpp"
#include "kakutani/report.hpp"
#include "kakutani/spectral.hpp"
#include "kakutani/verify.hpp"
#include "oracles.hpp"

using namespace kak;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, const std::function<bool(std::string&)>& fn) {
  std::string detail;
  bool pass = false;
  auto t0 = std::chrono::steady_clock::now();
  try {
    pass = fn(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  std::printf("%s  criterion %2d: %s (%lld ms)%s%s\n", pass ? "PASS" : "FAIL", number,
              name.c_str(), static_cast<long long>(ms), detail.empty() ? "" : " -- ",
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

const Scheme& bundle(const char* name) {
  for (const auto& [n, s] : bundled_schemes())
    if (n == std::string(name)) return s;
  throw std::runtime_error("no such bundle");
}

bool has_left_endpoint(const PartitionLevel& level, const Rational& v) {
  for (const auto& e : level.entries)
    if (e.left == v) return true;
  return false;
}

bool row_equals(const PartitionLevel& level, const std::vector<std::pair<Rational, Rational>>& iv) {
  if (level.entries.size() != iv.size()) return false;
  for (std::size_t i = 0; i < iv.size(); ++i)
    if (level.entries[i].left != iv[i].first || level.entries[i].length != iv[i].second)
      return false;
  return true;
}

}  // namespace

int main() {
  Real::set_default_prec(200);
  Budget budget{8'000'000, 2'000'000};

  criterion(1, "figure reproduction: refinement rows and labeled endpoints, exact", [&](std::string& d) {
    auto t0 = std::chrono::steady_clock::now();
    const Scheme& kak13 = bundle("kakutani-third");
    std::vector<PartitionLevel> fig1;
    for (std::size_t n = 0; n <= 7; ++n) fig1.push_back(partition_level(kak13, n, rat(1, 1000), budget));
    bool ok = row_equals(fig1[2], {{rat(0), rat(1, 3)}, {rat(1, 3), rat(2, 9)}, {rat(5, 9), rat(4, 9)}});
    ok = ok && has_left_endpoint(fig1[1], rat(1, 3));
    ok = ok && has_left_endpoint(fig1[2], rat(5, 9));
    ok = ok && has_left_endpoint(fig1[3], rat(19, 27));
    ok = ok && has_left_endpoint(fig1[4], rat(1, 9));
    ok = ok && has_left_endpoint(fig1[6], rat(11, 27)) && has_left_endpoint(fig1[6], rat(5, 27));
    ok = ok && has_left_endpoint(fig1[5], rat(65, 81));
    ok = ok && has_left_endpoint(fig1[7], rat(211, 243));

    const Scheme& f2 = bundle("half-sixth-third");
    std::vector<PartitionLevel> fig2;
    for (std::size_t n = 0; n <= 7; ++n) fig2.push_back(partition_level(f2, n, rat(1, 1000), budget));
    ok = ok && row_equals(fig2[1], {{rat(0), rat(1, 2)}, {rat(1, 2), rat(1, 6)}, {rat(2, 3), rat(1, 3)}});
    ok = ok && has_left_endpoint(fig2[2], rat(1, 4)) && has_left_endpoint(fig2[2], rat(1, 3));
    ok = ok && has_left_endpoint(fig2[3], rat(5, 6)) && has_left_endpoint(fig2[3], rat(8, 9));
    ok = ok && has_left_endpoint(fig2[4], rat(1, 8)) && has_left_endpoint(fig2[4], rat(1, 6));

    const Scheme& f3 = bundle("half-geometric");
    std::vector<PartitionLevel> fig3;
    for (std::size_t n = 0; n <= 3; ++n) fig3.push_back(partition_level(f3, n, rat(1, 100), budget));
    ok = ok && has_left_endpoint(fig3[1], rat(1, 2)) && has_left_endpoint(fig3[1], rat(5, 6)) &&
         has_left_endpoint(fig3[1], rat(17, 18));
    ok = ok && has_left_endpoint(fig3[2], rat(1, 4)) && has_left_endpoint(fig3[2], rat(5, 12));
    ok = ok && has_left_endpoint(fig3[3], rat(2, 3)) && has_left_endpoint(fig3[3], rat(7, 9));

    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    d = "runtime " + std::to_string(ms) + " ms";
    return ok && ms < 1000;
  });

  criterion(2, "counting oracles to n=20 plus 50 random enumerate/count agreements", [&](std::string& d) {
    bool ok = true;
    Rational lam = 1;
    for (int n = 1; n <= 20; ++n) {
      lam /= 2;
      Integer expect;
      mpz_ui_pow_ui(expect.get_mpz_t(), 2, static_cast<unsigned long>(n + 1));
      expect -= 1;
      ok = ok && count_A(bundle("dyadic"), lam, budget) == expect;
      Integer expect2;
      mpz_ui_pow_ui(expect2.get_mpz_t(), 2, static_cast<unsigned long>(n));
      ok = ok && count_A(bundle("powers-of-two"), lam, budget) == expect2;
    }
    std::mt19937_64 rng(41);
    int agreements = 0;
    while (agreements < 50) {
      Scheme s = kak::testing::random_scheme(rng);
      Rational l = kak::testing::random_lambda(rng, 30, 400);
      if (count_A(s, l, budget) != Integer(static_cast<long>(enumerate_A_words(s, l, budget).size())))
        return false;
      ++agreements;
    }
    d = "50 random pairs agreed";
    return ok;
  });

  criterion(3, "endpoint/word identities on 100+ randomized instances, exact", [&](std::string& d) {
    std::mt19937_64 rng(43);
    int instances = 0;
    for (const auto& [name, s] : bundled_schemes()) {
      for (int rep = 0; rep < 9; ++rep) {
        Rational lam = kak::testing::random_lambda(rng, 50, 2000);
        Integer expect = count_A(s, lam, budget);
        if (auto z = s.zero_symbol()) expect -= count_A(s, lam / s.alpha(*z), budget);
        if (Integer(static_cast<long>(point_set(s, lam, budget).size())) != expect) return false;
        ++instances;
      }
      for (int rep = 0; rep < 9; ++rep) {
        Word v;
        Rational a = 1;
        while (true) {
          auto syms = s.truncated_alphabet(rat(1, 15) / a);
          if (syms.empty()) break;
          std::uniform_int_distribution<std::size_t> pick(0, syms.size());
          std::size_t i = pick(rng);
          if (i == syms.size()) break;
          v.symbols.push_back(syms[i].sym);
          a *= syms[i].alpha;
        }
        Rational lam = kak::testing::random_lambda(rng, 10, 300);
        PointSet inner = point_set(s, lam, budget);
        PointSet outer = point_set(s, lam * a, budget);
        Rational lv = word_left_endpoint(s, v);
        auto lo = std::lower_bound(outer.points.begin(), outer.points.end(), lv);
        auto hi = std::lower_bound(outer.points.begin(), outer.points.end(), Rational(lv + a));
        if (static_cast<std::size_t>(hi - lo) != inner.size()) return false;
        ++instances;
      }
    }
    d = std::to_string(instances) + " instances";
    return instances >= 100;
  });

  criterion(4, "renewal constants: dyadic 2 (1%), tail exactly 1, 1/H within 2%", [&](std::string& d) {
    Rational lam = pow_rat(rat(1, 2), 20);
    double dy = (lam * Rational(count_A(bundle("dyadic"), lam, budget))).get_d();
    bool ok = std::abs(dy - 2.0) / 2.0 < 0.01;

    Rational l2 = 1;
    for (int n = 1; n <= 20; ++n) {
      l2 /= 2;
      Integer expect;
      mpz_ui_pow_ui(expect.get_mpz_t(), 2, static_cast<unsigned long>(n));
      ok = ok && count_A(bundle("powers-of-two"), l2, budget) == expect;
    }

    PredictedLimit lim = predicted_limit(bundle("half-third-sixth"));
    Rational l6 = pow_rat(rat(1, 10), 6);
    double v = (l6 * Rational(count_A(bundle("half-third-sixth"), l6, budget))).get_d();
    double c = lim.constant.to_double();
    ok = ok && std::abs(v - c) / c < 0.02;

    nlohmann::json rep = analysis_report(bundle("dyadic"), {rat(1, 4)}, budget);
    ok = ok && rep["renewal"]["note"] == kLatticeConstantNote;
    ok = ok && rep["renewal"].contains("one_over_H") && rep["renewal"].contains("constant");
    std::ostringstream os;
    os << "dyadic " << dy << ", h236 " << v << " vs " << c;
    d = os.str();
    return ok;
  });

  criterion(5, "generating function coefficients equal the counting identity for n<=50", [&](std::string& d) {
    for (const char* name : {"dyadic", "powers-of-two", "half-quarter-eighths"}) {
      PowerBasis pb = power_basis(bundle(name));
      const Rational& x = *pb.exact_base;
      SeriesCoeffs c = taylor_g(pb, 50);
      if (!c.exact) return false;
      auto counts = lattice_counts(pb, 50);
      for (std::size_t n = 0; n <= 50; ++n) {
        Rational expect = (n == 0 ? Rational(0) : Rational(counts[n - 1])) - x * Rational(counts[n]);
        if (c.rational[n] != expect) return false;
      }
    }
    SeriesCoeffs p2 = taylor_g(power_basis(bundle("powers-of-two")), 50);
    if (abs(p2.rational[0]) != rat(1, 2)) return false;
    for (std::size_t n = 1; n <= 50; ++n)
      if (p2.rational[n] != 0) return false;
    SeriesCoeffs dy = taylor_g(power_basis(bundle("dyadic")), 50);
    for (std::size_t n = 0; n <= 50; ++n)
      if (dy.rational[n] != rat(-1, 2)) return false;
    d = "three schemes, n <= 50, exact";
    return true;
  });

  criterion(6, "R* certification: unit-circle roots within 1e-20, R*(1/4) within 1e-15", [&](std::string& d) {
    PowerBasis pb = power_basis(bundle("half-quarter-eighths"));
    std::vector<PolyRoot> roots;
    Real rstar = radius_R_star(pb, rat(1, 4), 256, &roots);
    Real expect = exp(log_rat(rat(1, 2), 256) * Real::of(rat(3, 4), 256));
    Real tol15 = Real::of_str("1e-15", 256), tol20 = Real::of_str("1e-20", 256);
    if (!(abs(rstar - expect) < tol15)) return false;
    int off_base = 0;
    for (const auto& r : roots) {
      if (abs(r.center - Complex{Real::of(rat(1, 2), 256), Real::of(0L, 256)}) < tol20) continue;
      ++off_base;
      if (!(r.radius * 2L < tol20)) return false;  // enclosure width
      if (!(abs(abs(r.center) - Real::of(1L, 256)) < tol20)) return false;
    }
    d = "R* = " + rstar.str(20);
    return off_base == 2;
  });

  criterion(7, "discrepancy engine equals the quadratic oracle, exact", [&](std::string& d) {
    std::mt19937_64 rng(47);
    for (int t = 0; t < 200; ++t) {
      std::uniform_int_distribution<int> nd(1, 64);
      int n = nd(rng);
      std::vector<Rational> pts;
      std::uniform_int_distribution<long> dd(1, 101);
      for (int i = 0; i < n; ++i) {
        long den = dd(rng);
        std::uniform_int_distribution<long> nn(0, den - 1);
        pts.push_back(rat(nn(rng), den));
      }
      std::sort(pts.begin(), pts.end());
      pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
      auto dv = extreme_discrepancy(PointSet{rat(1, 2), pts});
      if (dv.extreme != brute_force_extreme(pts) || dv.star != brute_force_star(pts)) return false;
    }

    // Bundled scheme point sets up to N = 4096.
    std::vector<std::pair<const char*, Rational>> picks = {
        {"dyadic", pow_rat(rat(1, 2), 12)},      {"kakutani-third", rat(1, 3800)},
        {"half-sixth-third", rat(1, 8000)},      {"half-geometric", rat(1, 8000)},
        {"powers-of-two", pow_rat(rat(1, 2), 12)}, {"half-quarter-eighths", pow_rat(rat(1, 2), 13)},
        {"half-third-sixth", rat(1, 8000)}};
    std::size_t biggest = 0;
    for (const auto& [name, lam] : picks) {
      PointSet ps = point_set(bundle(name), lam, budget);
      if (ps.size() > 4096) return false;
      biggest = std::max(biggest, ps.size());
      auto dv = extreme_discrepancy(ps);
      if (dv.extreme != brute_force_extreme(ps.points) || dv.star != brute_force_star(ps.points))
        return false;
    }

    Rational lam = 1;
    for (int n = 1; n <= 12; ++n) {
      lam /= 2;
      if (extreme_discrepancy(point_set(bundle("dyadic"), lam, budget)).extreme != lam)
        return false;
    }
    d = "200 random sets + 7 scheme sets (largest N = " + std::to_string(biggest) + ")";
    return true;
  });

  criterion(8, "equidistribution: D < 0.05 at >=10^4 points and halves over two decades", [&](std::string& d) {
    struct Pick {
      const char* name;
      Rational lam_min, lam_cmp;
    };
    std::vector<Pick> picks = {
        {"dyadic", pow_rat(rat(1, 2), 14), pow_rat(rat(1, 2), 7)},
        {"kakutani-third", rat(1, 10000), rat(1, 100)},
        {"half-sixth-third", rat(1, 30000), rat(1, 300)},
        {"half-geometric", rat(1, 30000), rat(1, 300)},
        {"powers-of-two", pow_rat(rat(1, 2), 15), pow_rat(rat(1, 2), 8)},
        {"half-quarter-eighths", pow_rat(rat(1, 2), 15), pow_rat(rat(1, 2), 8)},
        {"half-third-sixth", rat(1, 30000), rat(1, 300)}};
    std::ostringstream os;
    for (const auto& p : picks) {
      PointSet fine = point_set(bundle(p.name), p.lam_min, budget);
      if (fine.size() < 10000) {
        d = std::string(p.name) + " too few points: " + std::to_string(fine.size());
        return false;
      }
      double dmin = extreme_discrepancy(fine).extreme.get_d();
      double dcmp = extreme_discrepancy(point_set(bundle(p.name), p.lam_cmp, budget)).extreme.get_d();
      if (!(dmin < 0.05 && dmin < dcmp / 2)) {
        d = std::string(p.name) + " D=" + std::to_string(dmin) + " vs " + std::to_string(dcmp);
        return false;
      }
      os << p.name << " " << dmin << "; ";
    }
    d = os.str();
    return true;
  });

  criterion(9, "geometric rate: dyadic rho=1/2 (1e-6), rank dispatch, residuals", [&](std::string& d) {
    auto dy = theorem_check(bundle("dyadic"), rat(1, 4), budget);
    if (!dy.lattice || !dy.rho_hat) return false;
    if (std::abs(*dy.rho_hat - 0.5) > 1e-6) return false;
    auto hqe = theorem_check(bundle("half-quarter-eighths"), rat(1, 4), budget);
    if (!hqe.lattice || !hqe.rho_hat || !(*hqe.rho_hat < 1.0)) return false;
    if (!std::isfinite(hqe.fit.residual)) return false;
    auto control = theorem_check(bundle("kakutani-third"), rat(1, 4), budget);
    if (control.lattice || control.rank != 2) return false;
    std::ostringstream os;
    os << "rho dyadic " << *dy.rho_hat << ", hqe " << *hqe.rho_hat << " residual "
       << hqe.fit.residual;
    d = os.str();
    return true;
  });

  criterion(10, "log-power law and non-power renewal error in higher rank", [&](std::string& d) {
    auto h = theorem_check(bundle("half-third-sixth"), rat(1, 4), budget);
    if (h.lattice || !h.p_hat || !(*h.p_hat > 0)) return false;
    if (!h.p_star || !(*h.p_star > 0)) return false;  // predicted_P_star(r_hat) reported
    auto err = renewal_error_experiment(bundle("half-third-sixth"), dense_decade_grid(9), budget);
    if (!(std::abs(err.slope) < 0.05)) return false;
    auto control = renewal_error_experiment(bundle("dyadic"), lattice_grid(rat(1, 2), 1, 20), budget);
    if (!(control.slope > 0.5)) return false;
    std::ostringstream os;
    os << "P_hat " << *h.p_hat << ", P* " << *h.p_star << ", slopes " << err.slope << " / "
       << control.slope;
    d = os.str();
    return true;
  });

  criterion(11, "zeros: dyadic lattice zero to 1e-12; strip zeros obey the region law", [&](std::string& d) {
    ZeroList dy = find_zeros(bundle("dyadic"), Box{rat(9, 10), rat(11, 10), rat(8), rat(10)}, 256);
    if (dy.zeros.size() != 1) return false;
    Complex expect{Real::of(1L, 256), pi(256) * 2L / log_rat(rat(2), 256)};
    if (!(abs(dy.zeros[0].center - expect) < Real::of_str("1e-12", 256))) return false;

    const Scheme& h = bundle("half-third-sixth");
    ZeroList zl = find_zeros(h, Box{rat(4, 5), rat(1), rat(1), rat(60)}, 192);
    for (const auto& z : zl.zeros)
      if (!(z.center.re < Real::of(1L))) return false;
    BadApproxEstimate est =
        estimate_bad_approx_r(h, Symbol{0, 0}, Symbol{1, 0}, Integer(1000000000L));
    ZeroRegionReport rep = zero_region_check(h, zl, est.r_hat, rat(1, 3));
    if (!rep.violations.empty()) return false;
    if (!(rep.fitted_C.to_double() > 0)) return false;
    std::ostringstream os;
    os << zl.zeros.size() << " strip zeros, fitted C " << rep.fitted_C.to_double();
    d = os.str();
    return true;
  });

  criterion(12, "continued fractions against the 160-digit oracle", [&](std::string& d) {
    const std::vector<long> oracle = {0, 1, 1, 1, 2, 2,  3, 1, 5, 2, 23, 2, 2, 1, 1,
                                      55, 1, 4, 3, 1, 1, 15, 1, 9, 2, 5,  7, 1, 1, 4};
    RealInterval l2 = RealInterval::log_of(rat(1, 2), 512).neg();
    RealInterval l3 = RealInterval::log_of(rat(1, 3), 512).neg();
    CFResult cf = continued_fraction(l2.div_pos(l3), oracle.size(), Integer("1000000000000000000000000000"));
    if (cf.quotients.size() != oracle.size()) return false;
    for (std::size_t i = 0; i < oracle.size(); ++i)
      if (cf.quotients[i] != oracle[i]) return false;

    RealInterval root5 = sqrt_interval(Rational(5), 512);
    Real glo(512), ghi(512);
    mpfr_add_ui(glo.raw(), root5.lo.raw(), 1, MPFR_RNDD);
    mpfr_div_ui(glo.raw(), glo.raw(), 2, MPFR_RNDD);
    mpfr_add_ui(ghi.raw(), root5.hi.raw(), 1, MPFR_RNDU);
    mpfr_div_ui(ghi.raw(), ghi.raw(), 2, MPFR_RNDU);
    CFResult golden = continued_fraction(RealInterval{glo, ghi}, 50, Integer("1000000000000000000000"));
    if (golden.quotients.size() != 50) return false;
    for (const auto& q : golden.quotients)
      if (q != 1) return false;
    d = "30 quotients of log2/log3 + 50 golden-ratio quotients";
    return true;
  });

  if (failures) {
    std::printf("%d acceptance criterion(s) FAILED\n", failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
