#include "kakutani/experiments.hpp"

#include <cmath>

#include "kakutani/errors.hpp"

namespace kak {

std::vector<Rational> decade_grid(int decades) {
  std::vector<Rational> grid;
  Rational lam(1, 10);
  for (int k = 1; k <= decades; ++k, lam /= 10) grid.push_back(lam);
  return grid;
}

std::vector<Rational> dense_decade_grid(int decades) {
  std::vector<Rational> grid;
  Rational lam(1, 10);
  for (int k = 1; k <= decades; ++k, lam /= 10) {
    grid.push_back(lam);
    grid.push_back(lam / 3);
  }
  return grid;
}

std::vector<Rational> lattice_grid(const Rational& x, int m_lo, int m_hi) {
  std::vector<Rational> grid;
  Rational lam = pow_rat(x, static_cast<unsigned long>(m_lo));
  for (int m = m_lo; m <= m_hi; ++m, lam *= x) grid.push_back(lam);
  return grid;
}

ConvergenceExperiment renewal_convergence(const Scheme& s, int depth, const Budget& budget) {
  PredictedLimit limit = predicted_limit(s);
  ConvergenceExperiment out;
  out.lattice = limit.lattice;
  out.predicted = limit.constant.to_double();
  out.one_over_H = limit.one_over_H.to_double();
  std::vector<Rational> grid =
      limit.lattice ? lattice_grid(*limit.base, 1, depth) : decade_grid(depth);
  for (const auto& lam : grid) {
    Integer c = count_A(s, lam, budget);
    double v = lam.get_d() * c.get_d();
    out.points.push_back({lam, c, v});
  }
  out.final_value = out.points.back().lambda_count;
  out.relative_error = std::abs(out.final_value - out.predicted) / out.predicted;
  return out;
}

RenewalErrorExperiment renewal_error_experiment(const Scheme& s, const std::vector<Rational>& grid,
                                                const Budget& budget) {
  if (grid.size() < 4) throw degenerate_data_error("error experiment needs >= 4 grid points");
  PredictedLimit limit = predicted_limit(s);
  RenewalErrorExperiment out;
  out.constant = limit.constant.to_double();
  std::vector<double> xs, ys;
  for (const auto& lam : grid) {
    Integer c = count_A(s, lam, budget);
    double e = std::abs(lam.get_d() * c.get_d() - out.constant);
    out.errors.emplace_back(lam, e);
    if (e > 0) {
      xs.push_back(std::log(lam.get_d()));
      ys.push_back(std::log(e));
    }
  }
  if (xs.size() < 2) throw degenerate_data_error("error experiment has too few nonzero errors");
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(xs.size());
  my /= static_cast<double>(xs.size());
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  out.slope = sxy / sxx;
  return out;
}

}  // namespace kak
