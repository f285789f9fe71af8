#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "kakutani/poly.hpp"
#include "kakutani/real.hpp"
#include "kakutani/renewal.hpp"
#include "kakutani/scheme.hpp"

namespace kak {

// Exponent view of a rank-one scheme: every length is base^n for some n in
// the atom exponents or one of the tail progressions. Also constructible
// directly from exponents, in which case the base is the certified root of
// sum_j z^{n_j} = 1 in (0,1) (irrational in general).
struct PowerBasis {
  std::vector<long> atom_exponents;      // with multiplicity
  std::vector<ExpProgression> tails;     // start + k*step, k >= 0
  Real base;
  Real base_radius;                      // enclosure half-width
  std::optional<Rational> exact_base;
};

PowerBasis power_basis(const Scheme& s, mpfr_prec_t prec = 0);  // NotRankOne otherwise
PowerBasis power_basis_from_exponents(std::vector<long> atom_exponents,
                                      std::vector<ExpProgression> tails, mpfr_prec_t prec = 0);

struct RationalFunction {
  ZPoly num;
  ZPoly den;
};

// sum_j z^{n_j} - 1 as num/den with integer coefficients; a tail progression
// p + k q contributes z^p/(1 - z^q).
RationalFunction denominator_series(const PowerBasis& pb);

struct SeriesCoeffs {
  bool exact = false;
  std::vector<Rational> rational;  // set when exact
  std::vector<Real> values;        // always set
};

// Taylor coefficients b_0..b_N of g(z) = (z-x)/((z-1)(sum_j z^{n_j}-1)),
// by power-series long division. Exact rationals when the base is rational.
SeriesCoeffs taylor_g(const PowerBasis& pb, std::size_t n_coeffs);

// |A_{x^m}| for m = 0..n via the exponent-lattice recurrence
// |A_{x^m}| = 1 + sum_j |A_{x^{m-n_j}}|, tails folded in by prefix sums.
std::vector<Integer> lattice_counts(const PowerBasis& pb, std::size_t n);

// R* = min(x^{1-eps}, smallest |z| over non-base roots of sum z^{n_j} = 1
// inside that disk). Root enclosures optionally returned.
Real radius_R_star(const PowerBasis& pb, const Rational& eps, mpfr_prec_t prec = 0,
                   std::vector<PolyRoot>* roots_out = nullptr);

// The admissible interval (x/R*, 1) of geometric rates.
std::pair<Real, Real> rho_bound(const PowerBasis& pb, const Rational& eps,
                                mpfr_prec_t prec = 0);

// f(z) = sum_j alpha_j^z - 1, tails in closed form a^z/(1 - r^z).
// Requires Re(z) > 0 when the scheme has tails.
Complex f_eval(const Scheme& s, const Complex& z);
Complex f_derivative(const Scheme& s, const Complex& z);
// Upper bound for |f''| on the half-plane {Re(z) >= u_min}, u_min > 0.
Real f_second_derivative_bound(const Scheme& s, const Real& u_min);

struct Box {
  Rational re_lo, re_hi, im_lo, im_hi;
};

struct ZeroEnclosure {
  Complex center;
  Real radius;
  int multiplicity = 1;
};

struct ZeroList {
  std::vector<ZeroEnclosure> zeros;  // sorted by (im, re)
  long total_count = 0;              // winding number of the original box
  Box box;
};

// Certified zero enclosures of f inside the box: argument-principle count,
// recursive bisection to isolate, Newton refinement, Kantorovich radius.
ZeroList find_zeros(const Scheme& s, const Box& box, mpfr_prec_t prec = 0);

// (1 - 2r) / (8 (1 + r)) for r in [0, 1/2).
Real predicted_P_star(const Real& r);

struct ZeroRegionReport {
  Real fitted_C;                        // min of u * |v|^(2+2r); +inf if vacuous
  Real v_threshold;                     // 2*pi / ln(1/beta)
  std::size_t considered = 0;           // zeros above the threshold
  std::size_t below_threshold = 0;
  std::vector<std::size_t> violations;  // indices with Re(z) >= 1
  bool vacuous = false;
};

// Empirical check of the zero-free region law u * |v|^(2+2r) >= C against
// found zeros written z = 1 - u + iv. beta is the smaller alpha of the
// Diophantine pair. Rejects rank-one schemes.
ZeroRegionReport zero_region_check(const Scheme& s, const ZeroList& zeros, const Real& r,
                                   const Rational& beta);

}  // namespace kak
