#pragma once

#include <utility>
#include <vector>

#include "kakutani/enumerate.hpp"
#include "kakutani/renewal.hpp"
#include "kakutani/scheme.hpp"

namespace kak {

// Grids for the counting experiments.
std::vector<Rational> decade_grid(int decades);                       // 10^-1 .. 10^-k
std::vector<Rational> dense_decade_grid(int decades);                 // 10^-k and 10^-k/3
std::vector<Rational> lattice_grid(const Rational& x, int m_lo, int m_hi);

struct ConvergencePoint {
  Rational lambda;
  Integer count;
  double lambda_count;  // lambda * |A_lambda|
};

struct ConvergenceExperiment {
  std::vector<ConvergencePoint> points;
  double predicted = 0;      // the operative constant for this scheme
  double one_over_H = 0;     // continuous-limit value, for comparison
  double final_value = 0;
  double relative_error = 0;  // |final - predicted| / predicted
  bool lattice = false;
};

// lambda |A_lambda| along the scheme's natural grid (x^m when rank one,
// decades otherwise) against the predicted constant.
ConvergenceExperiment renewal_convergence(const Scheme& s, int depth, const Budget& budget = {});

struct RenewalErrorExperiment {
  std::vector<std::pair<Rational, double>> errors;  // (lambda, |lambda|A| - c|)
  double slope = 0;       // least-squares slope of log e vs log lambda
  double constant = 0;    // the limit the error is measured against
};

// The non-power-decay experiment: e(lambda) = |lambda |A_lambda| - c| over a
// fixed grid, fitted log-log. Higher-rank schemes show slope ~ 0, rank-one
// controls a clearly positive slope.
RenewalErrorExperiment renewal_error_experiment(const Scheme& s, const std::vector<Rational>& grid,
                                                const Budget& budget = {});

}  // namespace kak
