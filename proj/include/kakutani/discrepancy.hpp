#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kakutani/enumerate.hpp"
#include "kakutani/real.hpp"
#include "kakutani/scheme.hpp"

namespace kak {

struct DiscrepancyValue {
  Rational lambda;
  std::size_t n_points = 0;
  Rational extreme;  // sup over subintervals of |mu(I) - |I||, exact
  Rational star;     // anchored at 0, exact
};

// Empirical measure of [a,b): (points in [a,b)) / n.
Rational mu_measure(const PointSet& ps, const Rational& a, const Rational& b);

// Exact extreme and star discrepancy by the sorted-points formulas
//   extreme = 1/N + max_i(i/N - x_i) - min_i(i/N - x_i)
//   star    = max_i max(i/N - x_i, x_i - (i-1)/N).
DiscrepancyValue extreme_discrepancy(const PointSet& ps);

// point_set + extreme_discrepancy per grid value; grid strictly decreasing.
// threads > 1 computes grid entries concurrently, assembled in grid order.
std::vector<DiscrepancyValue> discrepancy_curve(const Scheme& s, const std::vector<Rational>& grid,
                                                const Budget& budget = {}, unsigned threads = 1);

enum class DecayModel { geometric, log_power };

struct DecayFit {
  DecayModel model = DecayModel::geometric;
  double rate = 0;      // rho_hat (geometric) or P_hat (log_power)
  double residual = 0;  // rms residual of the transformed least squares
  std::size_t points_used = 0;
  std::vector<std::pair<Rational, Rational>> grid;  // (lambda, value) actually fitted
};

// Least squares on the stated transform; the first 3 grid points are always
// excluded as transient (fixed window policy).
DecayFit fit_decay(const std::vector<DiscrepancyValue>& curve, DecayModel model);

struct TheoremCheckReport {
  unsigned rank = 0;
  bool lattice = false;
  std::vector<DiscrepancyValue> curve;
  DecayFit fit;
  // Rank one.
  std::optional<double> rho_hat;
  std::optional<double> rho_admissible_lo;  // x / R*
  // Higher rank.
  std::optional<double> r_hat;
  std::optional<double> p_star;
  std::optional<double> p_hat;
  bool consistent = false;
  std::string note;
};

// Dispatches on rank: geometric fit against the admissible interval from the
// generating function for rank one, log-power fit plus the Diophantine
// exponent pipeline otherwise.
TheoremCheckReport theorem_check(const Scheme& s, const Rational& eps, const Budget& budget = {},
                                 mpfr_prec_t prec = 0);

}  // namespace kak
