#pragma once

#include <vector>

#include "kakutani/real.hpp"
#include "kakutani/scheme.hpp"

namespace kak {

struct CFResult {
  enum class Stop { max_terms, max_denominator, precision_exhausted };

  std::vector<Integer> quotients;  // a_0; a_1, a_2, ...
  Stop stop = Stop::max_terms;
  std::vector<Integer> denominators;  // q_m per emitted convergent
};

// Certified partial quotients of an irrational given by an enclosure:
// a quotient is emitted only when both interval ends agree on it. Stops on
// the term/denominator budgets or when the enclosure can no longer decide
// (reported, not thrown).
CFResult continued_fraction(const RealInterval& gamma, std::size_t max_terms,
                            const Integer& max_denominator);

// Rational input has a terminating expansion and fails the badly-approximable
// premise; always throws rational_input_error.
CFResult continued_fraction(const Rational& gamma, std::size_t max_terms,
                            const Integer& max_denominator);

// True when log(a)/log(b) is rational, i.e. the pair generates a rank-one
// sublattice (decided exactly through prime factorizations).
bool multiplicatively_dependent(const Rational& a, const Rational& b);

struct BadApproxEstimate {
  Real r_hat;               // empirical lower-confidence estimate, never a proof
  Integer certified_up_to;  // largest convergent denominator examined
  std::vector<Integer> quotients;
  std::size_t terms = 0;
  Symbol sym_j, sym_k;
  Rational alpha_j, alpha_k;
};

// Empirical exponent r such that the observed convergents of
// gamma = log(alpha_j)/log(alpha_k) satisfy |gamma - p/q| >~ d/q^(2+r):
// r_hat = max over convergents with q_m >= 4 of ln(a_{m+1})/ln(q_m).
BadApproxEstimate estimate_bad_approx_r(const Scheme& s, Symbol j, Symbol k,
                                        const Integer& max_denominator, mpfr_prec_t prec = 0);

// Enclosure of sqrt(q) for tests and golden-ratio style inputs.
RealInterval sqrt_interval(const Rational& q, mpfr_prec_t prec = 0);

}  // namespace kak
