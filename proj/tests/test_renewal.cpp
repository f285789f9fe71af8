#include "doctest.h"

#include "kakutani/enumerate.hpp"
#include "kakutani/errors.hpp"
#include "kakutani/experiments.hpp"
#include "kakutani/renewal.hpp"
#include "kakutani/report.hpp"

using namespace kak;

namespace {

const Scheme& bundle(const char* name) {
  for (const auto& [n, s] : bundled_schemes())
    if (n == std::string(name)) return s;
  throw std::runtime_error("no such bundle");
}

Real tol(long bits) {
  Real t = Real::of(1L, 256);
  mpfr_mul_2si(t.raw(), t.raw(), -bits, MPFR_RNDN);
  return t;
}

}  // namespace

TEST_CASE("entropy closed forms") {
  // Dyadic: ln 2.
  EntropyValue dy = entropy(bundle("dyadic"));
  CHECK(abs(dy.value - log_rat(rat(2), 256)) < tol(150));

  // Atoms {1/2,1/3,1/6}: algebraically (2/3)ln2 + (1/2)ln3, a different
  // grouping than the per-atom sum the implementation uses.
  EntropyValue h = entropy(bundle("half-third-sixth"));
  Real expect = log_rat(rat(2), 256) * 2L / 3L + log_rat(rat(3), 256) / 2L;
  CHECK(abs(h.value - expect) < tol(150));
  CHECK(h.value.str(6).substr(0, 6) == "1.0114");

  // Tail 2^-k: 2 ln 2, cross-checked against partial sums.
  EntropyValue p2 = entropy(bundle("powers-of-two"));
  CHECK(abs(p2.value - log_rat(rat(2), 256) * 2L) < tol(150));
  Real partial = Real::of(0L, 256);
  Rational a(1, 2);
  for (long k = 1; k <= 120; ++k, a /= 2)
    partial = partial - Real::of(a, 256) * log_rat(a, 256);
  CHECK(abs(p2.value - partial) < Real::of_str("1e-30", 256));
}

TEST_CASE("rank classification matches the example list") {
  auto r1 = rank_report(bundle("powers-of-two"));
  CHECK(r1.rank == 1);
  REQUIRE(r1.minimal_base.has_value());
  CHECK(*r1.minimal_base == rat(1, 2));
  REQUIRE(r1.block_exponents.size() == 1);
  CHECK(r1.block_exponents[0].start == 1);
  CHECK(r1.block_exponents[0].step == 1);

  CHECK(rank_report(bundle("half-geometric")).rank == 2);

  // {1/2} u {1/3} u {1/7^k}: tail mass (1/7)/(6/7) = 1/6, atoms 1/2 + 1/3.
  Scheme r3 = Scheme::build({AtomSpec{rat(1, 2)}, AtomSpec{rat(1, 3)},
                             GeoTailSpec{rat(1, 7), rat(1, 7), TailDirection::ascending}});
  CHECK(rank_report(r3).rank == 3);

  auto hqe = rank_report(bundle("half-quarter-eighths"));
  CHECK(hqe.rank == 1);
  CHECK(*hqe.minimal_base == rat(1, 2));
  REQUIRE(hqe.block_exponents.size() == 4);
  CHECK(hqe.block_exponents[0].start == 1);
  CHECK(hqe.block_exponents[1].start == 2);
  CHECK(hqe.block_exponents[2].start == 3);
  CHECK(hqe.block_exponents[3].start == 3);

  CHECK(rank_report(bundle("kakutani-third")).rank == 2);
  CHECK(rank_report(bundle("half-third-sixth")).rank == 2);
}

TEST_CASE("rank-one base exponents have gcd one even for shifted lattices") {
  // {1/4, 1/4, 1/2}: exponents [2,2,1] over base 1/2.
  Scheme s = Scheme::build({AtomSpec{rat(1, 4)}, AtomSpec{rat(1, 4)}, AtomSpec{rat(1, 2)}});
  auto r = rank_report(s);
  CHECK(r.rank == 1);
  CHECK(*r.minimal_base == rat(1, 2));
  // {1/4, 1/4, 1/4, 1/4}: all exponents even, base collapses to 1/4.
  Scheme s2 = Scheme::build(
      {AtomSpec{rat(1, 4)}, AtomSpec{rat(1, 4)}, AtomSpec{rat(1, 4)}, AtomSpec{rat(1, 4)}});
  auto r2 = rank_report(s2);
  CHECK(r2.rank == 1);
  CHECK(*r2.minimal_base == rat(1, 4));
  CHECK(r2.block_exponents[0].start == 1);
}

TEST_CASE("factorize and integer rank helpers") {
  auto f = factorize(Integer(360));
  CHECK(f.at(Integer(2)) == 3);
  CHECK(f.at(Integer(3)) == 2);
  CHECK(f.at(Integer(5)) == 1);
  CHECK(factorize(Integer(1)).empty());

  CHECK(integer_matrix_rank({{Integer(1), Integer(0)}, {Integer(0), Integer(1)}}) == 2);
  CHECK(integer_matrix_rank({{Integer(2), Integer(4)}, {Integer(3), Integer(6)}}) == 1);
  CHECK(integer_matrix_rank({{Integer(0), Integer(0)}}) == 0);
}

TEST_CASE("eps summability closed forms") {
  // Tail 2^-k at eps = 1/2: sum 2^(-k/2) = 1/(sqrt 2 - 1).
  Real v = eps_summability(bundle("powers-of-two"), rat(1, 2), 256);
  Real expect = Real::of(1L, 256) / (sqrt(Real::of(2L, 256)) - Real::of(1L, 256));
  CHECK(abs(v - expect) < tol(150));

  // Finite scheme: plain power sum.
  Real w = eps_summability(bundle("half-third-sixth"), rat(1, 4), 256);
  Real direct = Real::of(0L, 256);
  for (const auto& a : {rat(1, 2), rat(1, 3), rat(1, 6)})
    direct = direct + exp(log_rat(a, 256) * Real::of(rat(3, 4), 256));
  CHECK(abs(w - direct) < tol(150));

  CHECK_THROWS_AS(eps_summability(bundle("dyadic"), rat(0)), domain_error);
  CHECK_THROWS_AS(eps_summability(bundle("dyadic"), rat(1)), domain_error);
}

TEST_CASE("predicted limits and corrected lattice constants") {
  auto dy = predicted_limit(bundle("dyadic"));
  CHECK(dy.lattice);
  CHECK(*dy.base == rat(1, 2));
  CHECK(abs(dy.constant - Real::of(2L)) < tol(150));

  auto p2 = predicted_limit(bundle("powers-of-two"));
  CHECK(p2.lattice);
  CHECK(abs(p2.constant - Real::of(1L)) < tol(150));

  auto h = predicted_limit(bundle("half-third-sixth"));
  CHECK_FALSE(h.lattice);
  CHECK(h.constant.str(7).substr(0, 7) == "0.98872");
  CHECK(h.constant == h.one_over_H);
  // The corrected lattice constant differs from 1/H when x != span-free value.
  CHECK(abs(dy.constant - dy.one_over_H) > Real::of_str("0.5"));
}

TEST_CASE("lambda |A_lambda| converges to the predicted constant") {
  auto dyconv = renewal_convergence(bundle("dyadic"), 20);
  CHECK(dyconv.relative_error < 0.01);
  // Successive differences shrink beyond the documented index.
  for (std::size_t i = 3; i + 1 < dyconv.points.size(); ++i) {
    double d1 = std::abs(dyconv.points[i].lambda_count - dyconv.points[i - 1].lambda_count);
    double d2 = std::abs(dyconv.points[i + 1].lambda_count - dyconv.points[i].lambda_count);
    CHECK(d2 <= d1);
  }

  auto p2conv = renewal_convergence(bundle("powers-of-two"), 20);
  for (const auto& pt : p2conv.points) CHECK(pt.lambda_count == 1.0);

  auto hconv = renewal_convergence(bundle("half-third-sixth"), 6);
  CHECK(hconv.relative_error < 0.02);
}

TEST_CASE("renewal error decays as a power only in the rank-one control") {
  auto h = renewal_error_experiment(bundle("half-third-sixth"), dense_decade_grid(9));
  CHECK(std::abs(h.slope) < 0.05);
  auto dy = renewal_error_experiment(bundle("dyadic"), lattice_grid(rat(1, 2), 1, 20));
  CHECK(dy.slope > 0.5);
}

TEST_CASE("symbolic catalog covers the analysis-only families") {
  const auto& cat = symbolic_catalog();
  REQUIRE(cat.size() == 2);

  const auto& zeta_fam = cat[0];
  CHECK(zeta_fam.infinite_rank);
  // s(1 - eps) <= 1 diverges: eps = 1/2 gives s/2 < 1.
  CHECK_FALSE(zeta_fam.summability(rat(1, 2), 256).has_value());
  auto fin = zeta_fam.summability(rat(1, 10), 256);
  REQUIRE(fin.has_value());
  CHECK(fin->sign() > 0);
  // H = -s zeta'(s) at zeta(s) = 2, s = 1.72864723...; reference value from
  // an independent high-precision computation.
  Real hz = zeta_fam.entropy(256);
  CHECK(std::abs(hz.to_double() - 3.1429378047398697) < 1e-10);

  const auto& cantor = cat[1];
  CHECK_FALSE(cantor.infinite_rank);
  CHECK(cantor.rank == 1);
  REQUIRE(cantor.minimal_base.has_value());
  CHECK(*cantor.minimal_base == rat(1, 3));
  CHECK(abs(cantor.entropy(256) - log_rat(rat(3), 256) * 3L) < tol(150));
  CHECK_FALSE(cantor.summability(rat(1, 2), 256).has_value());
  auto cfin = cantor.summability(rat(1, 4), 256);
  REQUIRE(cfin.has_value());
  // sum 2^k 3^-(k+1)(3/4) = t/(1-2t), t = 3^(-3/4).
  Real t = exp(log_rat(rat(3), 256) * Real::of(rat(-3, 4), 256));
  CHECK(abs(*cfin - t / (Real::of(1L, 256) - t * 2L)) < tol(120));
}
