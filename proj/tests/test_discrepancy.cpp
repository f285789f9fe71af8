#include "doctest.h"

#include <random>

#include "kakutani/discrepancy.hpp"
#include "kakutani/errors.hpp"
#include "kakutani/report.hpp"
#include "kakutani/verify.hpp"

using namespace kak;

namespace {

const Scheme& bundle(const char* name) {
  for (const auto& [n, s] : bundled_schemes())
    if (n == std::string(name)) return s;
  throw std::runtime_error("no such bundle");
}

PointSet make_ps(std::vector<Rational> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return PointSet{rat(1, 2), std::move(pts)};
}

}  // namespace

TEST_CASE("mu_measure counts half-open intervals") {
  PointSet ps = make_ps({rat(0), rat(1, 3), rat(5, 9)});
  CHECK(mu_measure(ps, rat(0), rat(1, 3)) == rat(1, 3));
  CHECK(mu_measure(ps, rat(0), rat(1)) == 1);
  PointSet grid = make_ps({rat(0), rat(1, 8), rat(2, 8), rat(3, 8), rat(4, 8), rat(5, 8),
                           rat(6, 8), rat(7, 8)});
  CHECK(mu_measure(grid, rat(1, 4), rat(1, 2)) == rat(1, 4));
  CHECK_THROWS_AS(mu_measure(PointSet{rat(1), {}}, rat(0), rat(1, 2)), empty_point_set_error);
  CHECK_THROWS_AS(mu_measure(ps, rat(1, 2), rat(1, 3)), domain_error);
}

TEST_CASE("extreme discrepancy specials") {
  PointSet grid = make_ps({rat(0), rat(1, 4), rat(1, 2), rat(3, 4)});
  auto d = extreme_discrepancy(grid);
  CHECK(d.extreme == rat(1, 4));
  CHECK(d.star == rat(1, 4));

  auto single = extreme_discrepancy(make_ps({rat(0)}));
  CHECK(single.extreme == 1);
  CHECK(single.star == 1);

  auto fig = extreme_discrepancy(make_ps({rat(0), rat(1, 3), rat(5, 9)}));
  CHECK(fig.extreme == brute_force_extreme({rat(0), rat(1, 3), rat(5, 9)}));
  CHECK(fig.star == brute_force_star({rat(0), rat(1, 3), rat(5, 9)}));

  CHECK_THROWS_AS(extreme_discrepancy(PointSet{rat(1), {}}), empty_point_set_error);
}

TEST_CASE("fast formulas equal the quadratic oracle on random sets") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 100; ++t) {
    std::uniform_int_distribution<int> nd(1, 64);
    int n = nd(rng);
    std::vector<Rational> pts;
    std::uniform_int_distribution<long> dd(1, 97);
    for (int i = 0; i < n; ++i) {
      long d = dd(rng);
      std::uniform_int_distribution<long> nn(0, d - 1);
      pts.push_back(rat(nn(rng), d));
    }
    PointSet ps = make_ps(pts);
    auto d = extreme_discrepancy(ps);
    CHECK(d.extreme == brute_force_extreme(ps.points));
    CHECK(d.star == brute_force_star(ps.points));
    CHECK(d.star <= d.extreme);
    CHECK(d.extreme <= 1);
    CHECK(d.extreme >= rat(1, 2 * static_cast<long>(ps.points.size())));
  }
}

TEST_CASE("dyadic curve is exactly 2^-n and deterministic across threads") {
  const Scheme& dy = bundle("dyadic");
  std::vector<Rational> grid;
  Rational lam = 1;
  for (int n = 1; n <= 10; ++n) grid.push_back(lam /= 2);
  auto curve1 = discrepancy_curve(dy, grid, {}, 1);
  auto curve4 = discrepancy_curve(dy, grid, {}, 4);
  REQUIRE(curve1.size() == 10);
  for (int n = 1; n <= 10; ++n) {
    CHECK(curve1[static_cast<std::size_t>(n - 1)].extreme ==
          pow_rat(rat(1, 2), static_cast<unsigned long>(n)));
  }
  CHECK(discrepancy_csv(curve1) == discrepancy_csv(curve4));
}

TEST_CASE("curves of the bundled schemes trend to zero along the ladder") {
  for (const char* name : {"kakutani-third", "half-geometric"}) {
    CAPTURE(name);
    const Scheme& s = bundle(name);
    auto ladder = length_ladder(s, 12);
    std::vector<Rational> grid(ladder.values.begin() + 1, ladder.values.end());
    auto curve = discrepancy_curve(s, grid);
    for (const auto& d : curve) CHECK(d.extreme > 0);
    CHECK(curve.back().extreme.get_d() < curve.front().extreme.get_d());
  }
}

TEST_CASE("fit_decay recovers synthetic rates") {
  std::vector<DiscrepancyValue> geo;
  Rational lam = 1, v = 1;
  for (int n = 0; n < 12; ++n) {
    lam /= 2;
    v *= rat(7, 10);
    geo.push_back({lam, 100, v, v});
  }
  DecayFit fit = fit_decay(geo, DecayModel::geometric);
  CHECK(std::abs(fit.rate - 0.7) < 1e-10);
  CHECK(fit.residual < 1e-12);
  CHECK(fit.points_used == 9);

  // D(lambda) = (-ln lambda)^(-1/8) at lambda = 10^-k, rationalized at high
  // precision so the fit sees exact log-log-linear data.
  std::vector<DiscrepancyValue> lp;
  for (int k = 1; k <= 12; ++k) {
    Rational l = pow_rat(rat(1, 10), static_cast<unsigned long>(k));
    Real d = exp(log(-log(Real::of(l, 256))) * Real::of(rat(-1, 8), 256));
    mpq_t q;
    mpq_init(q);
    mpfr_get_q(q, d.raw());
    lp.push_back({l, 100, Rational(mpq_class(q)), Rational(mpq_class(q))});
    mpq_clear(q);
  }
  DecayFit lfit = fit_decay(lp, DecayModel::log_power);
  CHECK(std::abs(lfit.rate - 0.125) < 1e-10);

  CHECK_THROWS_AS(fit_decay({geo[0], geo[1]}, DecayModel::geometric), degenerate_data_error);
  std::vector<DiscrepancyValue> zero = geo;
  zero[5].extreme = 0;
  CHECK_THROWS_AS(fit_decay(zero, DecayModel::geometric), degenerate_data_error);
}

TEST_CASE("theorem check dispatches on rank") {
  Budget budget{400000, 400000};
  auto dy = theorem_check(bundle("dyadic"), rat(1, 4), budget);
  CHECK(dy.lattice);
  CHECK(dy.rank == 1);
  REQUIRE(dy.rho_hat.has_value());
  CHECK(std::abs(*dy.rho_hat - 0.5) < 1e-6);
  CHECK(dy.consistent);
  REQUIRE(dy.rho_admissible_lo.has_value());

  auto hqe = theorem_check(bundle("half-quarter-eighths"), rat(1, 4), budget);
  CHECK(hqe.lattice);
  REQUIRE(hqe.rho_hat.has_value());
  CHECK(*hqe.rho_hat < 1.0);
  CHECK(std::isfinite(hqe.fit.residual));

  auto h = theorem_check(bundle("half-third-sixth"), rat(1, 4), budget);
  CHECK_FALSE(h.lattice);
  CHECK(h.rank == 2);
  REQUIRE(h.p_hat.has_value());
  CHECK(*h.p_hat > 0);
  REQUIRE(h.r_hat.has_value());
  REQUIRE(h.p_star.has_value());
  CHECK(*h.p_star > 0);
  CHECK(h.note.find("upper bound") != std::string::npos);
}
