#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kakutani/real.hpp"
#include "kakutani/scheme.hpp"

namespace kak {

// Exponents of one block over the minimal base x: an atom with alpha = x^n
// is {n, 0}; a tail contributes the arithmetic progression start + k*step
// (first = x^start, ratio = x^step).
struct ExpProgression {
  long start = 0;
  long step = 0;
  friend bool operator==(const ExpProgression&, const ExpProgression&) = default;
};

struct RankReport {
  unsigned rank = 0;
  // Rank one only: the minimal x in (0,1) with every alpha_j = x^{n_j}.
  std::optional<Rational> minimal_base;
  std::vector<ExpProgression> block_exponents;  // rank one only, per block
  std::vector<Integer> prime_basis;
  std::vector<std::vector<long>> generators;  // prime-exponent vector per generator
};

struct EntropyValue {
  Real value;              // nats
  std::string exact_terms;  // closed-form description of the sum
};

struct PredictedLimit {
  bool lattice = false;
  std::optional<Rational> base;  // lattice only
  Real span;                     // -ln(base), lattice only
  Real constant;      // limit of lambda*|A_lambda| (lattice: along x^n, corrected)
  Real one_over_H;    // the continuous-limit value, reported alongside
};

// H = -sum alpha_i ln alpha_i, via per-block closed forms.
EntropyValue entropy(const Scheme& s, mpfr_prec_t prec = 0);

// Factors every generator into prime-exponent vectors and takes the exact
// integer rank of the resulting matrix.
RankReport rank_report(const Scheme& s);

// sum of alpha_i^(1-eps), closed form per block. Always finite here.
Real eps_summability(const Scheme& s, const Rational& eps, mpfr_prec_t prec = 0);

// Lattice case: constant = span / (H*(1-x)) for x^n |A_{x^n}|.
// Non-lattice: constant = 1/H for lambda |A_lambda|.
PredictedLimit predicted_limit(const Scheme& s, mpfr_prec_t prec = 0);

// Read-only catalog of infinite families that have closed-form analysis but
// no exact point generation (irrational endpoint case).
struct SymbolicFamily {
  std::string name;
  std::string description;
  bool infinite_rank = false;
  unsigned rank = 0;                     // meaningful when !infinite_rank
  std::optional<Rational> minimal_base;  // rank one only
  // nullopt = divergent at this eps.
  std::optional<Real> (*summability)(const Rational& eps, mpfr_prec_t prec);
  Real (*entropy)(mpfr_prec_t prec);
};

const std::vector<SymbolicFamily>& symbolic_catalog();

// Exact rank of an integer matrix (fraction-free elimination); exposed for
// tests of the lattice machinery.
unsigned integer_matrix_rank(std::vector<std::vector<Integer>> m);

// Prime factorization of a positive integer (trial division + Pollard rho).
std::map<Integer, long> factorize(Integer n);

}  // namespace kak
