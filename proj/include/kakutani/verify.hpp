#pragma once

#include <string>
#include <vector>

#include "kakutani/enumerate.hpp"
#include "kakutani/rational.hpp"
#include "kakutani/real.hpp"

namespace kak {

struct VerifyResult {
  std::string module;
  std::string instance;
  std::string invariant;
  bool pass = false;
  std::string detail;
};

struct VerifySummary {
  std::vector<VerifyResult> results;
  bool all_pass = true;
};

// Runs the invariant battery of every module against the bundled schemes
// plus randomized instances (fixed seed; fully deterministic).
VerifySummary run_verify(const Budget& budget = {}, mpfr_prec_t prec = 0);

// Quadratic reference discrepancy used by the battery: sup over candidate
// interval endpoints drawn from the points plus {0,1}, all open/closed
// variants. Exact.
Rational brute_force_extreme(const std::vector<Rational>& sorted_points);
Rational brute_force_star(const std::vector<Rational>& sorted_points);

}  // namespace kak
