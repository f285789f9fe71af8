#include "kakutani/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <future>

#include "kakutani/contfrac.hpp"
#include "kakutani/errors.hpp"
#include "kakutani/spectral.hpp"

namespace kak {

Rational mu_measure(const PointSet& ps, const Rational& a, const Rational& b) {
  if (ps.points.empty()) throw empty_point_set_error("mu_measure on empty point set");
  if (!(0 <= a && a < b && b <= 1)) throw domain_error("mu_measure needs 0 <= a < b <= 1");
  auto lo = std::lower_bound(ps.points.begin(), ps.points.end(), a);
  auto hi = std::lower_bound(ps.points.begin(), ps.points.end(), b);
  return Rational(static_cast<long>(hi - lo), static_cast<long>(ps.points.size()));
}

DiscrepancyValue extreme_discrepancy(const PointSet& ps) {
  const auto& x = ps.points;
  if (x.empty()) throw empty_point_set_error("extreme_discrepancy on empty point set");
  long n = static_cast<long>(x.size());
  Rational inv_n(1, n);
  Rational max_up = Rational(1, n) - x[0];  // i/N - x_i starts at i=1
  Rational min_up = max_up;
  Rational star = 0;
  for (long i = 1; i <= n; ++i) {
    Rational up = Rational(i, n) - x[i - 1];
    if (up > max_up) max_up = up;
    if (up < min_up) min_up = up;
    Rational down = x[i - 1] - Rational(i - 1, n);
    Rational cand = up > down ? up : down;
    if (cand > star) star = cand;
  }
  DiscrepancyValue out;
  out.lambda = ps.lambda;
  out.n_points = x.size();
  out.extreme = inv_n + max_up - min_up;
  out.star = star;
  return out;
}

std::vector<DiscrepancyValue> discrepancy_curve(const Scheme& s, const std::vector<Rational>& grid,
                                                const Budget& budget, unsigned threads) {
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] < grid[i - 1])) throw domain_error("grid must be strictly decreasing");
  std::vector<DiscrepancyValue> out(grid.size());
  auto work = [&](std::size_t i) { out[i] = extreme_discrepancy(point_set(s, grid[i], budget)); };
  if (threads <= 1) {
    for (std::size_t i = 0; i < grid.size(); ++i) work(i);
    return out;
  }
  std::size_t next = 0;
  while (next < grid.size()) {
    std::vector<std::future<void>> batch;
    for (unsigned t = 0; t < threads && next < grid.size(); ++t, ++next)
      batch.push_back(std::async(std::launch::async, work, next));
    for (auto& f : batch) f.get();
  }
  return out;
}

DecayFit fit_decay(const std::vector<DiscrepancyValue>& curve, DecayModel model) {
  if (curve.size() < 5) throw degenerate_data_error("fit needs at least 5 curve points");
  constexpr std::size_t kSkip = 3;  // fixed transient window
  DecayFit fit;
  fit.model = model;
  std::vector<double> xs, ys;
  for (std::size_t i = kSkip; i < curve.size(); ++i) {
    double v = curve[i].extreme.get_d();
    if (!(v > 0) || !std::isfinite(v))
      throw degenerate_data_error("fit needs positive finite values");
    double x;
    if (model == DecayModel::geometric) {
      x = static_cast<double>(i);
    } else {
      double lam = curve[i].lambda.get_d();
      if (!(lam > 0) || lam >= 1) throw degenerate_data_error("log-power fit needs lambda in (0,1)");
      x = std::log(-std::log(lam));
    }
    xs.push_back(x);
    ys.push_back(std::log(v));
    fit.grid.emplace_back(curve[i].lambda, curve[i].extreme);
  }
  std::size_t n = xs.size();
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0) throw degenerate_data_error("fit abscissae are degenerate");
  double slope = sxy / sxx;
  double icpt = my - slope * mx;
  double ss = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double r = ys[i] - (slope * xs[i] + icpt);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / static_cast<double>(n));
  fit.points_used = n;
  fit.rate = model == DecayModel::geometric ? std::exp(slope) : -slope;
  return fit;
}

namespace {

// First multiplicatively independent pair of depth-0 symbols, canonical order.
std::optional<std::pair<Symbol, Symbol>> independent_pair(const Scheme& s) {
  std::vector<Symbol> heads;
  for (std::uint32_t i = 0; i < s.blocks().size(); ++i) heads.push_back(Symbol{i, 0});
  // Tail depth-1 symbols extend the candidates (ratio enters through them).
  for (std::uint32_t i = 0; i < s.blocks().size(); ++i)
    if (std::holds_alternative<GeoTailSpec>(s.blocks()[i])) heads.push_back(Symbol{i, 1});
  for (std::size_t a = 0; a < heads.size(); ++a)
    for (std::size_t b = a + 1; b < heads.size(); ++b) {
      Rational va = s.alpha(heads[a]), vb = s.alpha(heads[b]);
      if (va == vb) continue;
      if (!multiplicatively_dependent(va, vb)) return std::make_pair(heads[a], heads[b]);
    }
  return std::nullopt;
}

}  // namespace

TheoremCheckReport theorem_check(const Scheme& s, const Rational& eps, const Budget& budget,
                                 mpfr_prec_t prec) {
  TheoremCheckReport rep;
  RankReport rank = rank_report(s);
  rep.rank = rank.rank;
  rep.lattice = rank.rank == 1;

  if (rep.lattice) {
    PowerBasis pb = power_basis(s, prec);
    const Rational& x = *pb.exact_base;
    // Grid x^1 .. x^M, M capped so point counts stay within budget.
    std::vector<Rational> grid;
    Rational lam = x;
    for (int m = 1; m <= 48; ++m, lam *= x) {
      if (count_A(s, lam, budget) > Integer(static_cast<long>(budget.max_words / 2))) break;
      grid.push_back(lam);
      if (grid.size() >= 16) break;
    }
    if (grid.size() < 8) throw budget_exceeded_error("budget too small for a rank-one curve");
    rep.curve = discrepancy_curve(s, grid, budget);
    rep.fit = fit_decay(rep.curve, DecayModel::geometric);
    rep.rho_hat = rep.fit.rate;
    auto interval = rho_bound(pb, eps, prec);
    rep.rho_admissible_lo = interval.first.to_double();
    // The theorem promises some geometric rate inside (x/R*, 1); a finite-
    // scale fit can only confirm decay at a rate below the interval's top.
    rep.consistent = *rep.rho_hat < 1.0 && *rep.rho_hat <= 1.0 + 0.05;
    rep.note = "geometric-rate bound holds for every rho in the admissible interval; "
               "observed decay may be faster than its lower endpoint";
    return rep;
  }

  auto pair = independent_pair(s);
  if (!pair) throw invariant_error("higher-rank scheme without an independent pair");
  BadApproxEstimate est =
      estimate_bad_approx_r(s, pair->first, pair->second, Integer(1000000000L), prec);
  rep.r_hat = est.r_hat.to_double();
  if (*rep.r_hat < 0.5) {
    rep.p_star = predicted_P_star(est.r_hat).to_double();
  }

  std::vector<Rational> grid;
  Rational lam(1, 10);
  for (int k = 1; k <= 9; ++k, lam /= 10) {
    if (count_A(s, lam, budget) > Integer(static_cast<long>(budget.max_words / 2))) break;
    grid.push_back(lam);
  }
  if (grid.size() < 5) throw budget_exceeded_error("budget too small for a decade curve");
  rep.curve = discrepancy_curve(s, grid, budget);
  rep.fit = fit_decay(rep.curve, DecayModel::log_power);
  rep.p_hat = rep.fit.rate;
  rep.consistent = *rep.p_hat > 0;
  rep.note = "the log-power law is an upper bound: observed decay may be faster than P*";
  return rep;
}

}  // namespace kak
