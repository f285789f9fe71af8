#pragma once

#include <vector>

#include "kakutani/real.hpp"

namespace kak {

// Dense polynomials, ascending coefficient order, no trailing zeros.
using ZPoly = std::vector<Integer>;
using QPoly = std::vector<Rational>;

ZPoly zp_trim(ZPoly p);
ZPoly zp_add(const ZPoly& a, const ZPoly& b);
ZPoly zp_mul(const ZPoly& a, const ZPoly& b);
ZPoly zp_neg(ZPoly a);
// x^k as a polynomial.
ZPoly zp_monomial(std::size_t k, const Integer& c = 1);
int zp_degree(const ZPoly& p);  // -1 for the zero polynomial

QPoly qp_from(const ZPoly& p);
QPoly qp_trim(QPoly p);
QPoly qp_mul(const QPoly& a, const QPoly& b);
// Euclidean remainder a mod b (b nonzero).
QPoly qp_rem(QPoly a, const QPoly& b);
QPoly qp_gcd(QPoly a, QPoly b);  // monic
// Exact quotient; throws if the division has a remainder.
QPoly qp_divexact(const QPoly& a, const QPoly& b);
// Integer polynomial with content 1 and positive leading coefficient,
// proportional to the input.
ZPoly qp_primitive(const QPoly& p);

Complex zp_eval(const ZPoly& p, const Complex& z);

// Certified complex root enclosure. The disk |z - center| <= radius contains
// exactly `multiplicity` roots (multiplicity > 1 marks a cluster whose disks
// could not be separated).
struct PolyRoot {
  Complex center;
  Real radius;
  int multiplicity = 1;
};

// All complex roots of p via Durand-Kerner iteration with Weierstrass-disk
// certification. deg(p) >= 1.
std::vector<PolyRoot> find_poly_roots(const ZPoly& p, mpfr_prec_t prec = 256);

}  // namespace kak
