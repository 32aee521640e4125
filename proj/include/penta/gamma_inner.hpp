#pragma once

#include <utility>
#include <vector>

#include "penta/domains.hpp"
#include "penta/poly.hpp"
#include "penta/report.hpp"

namespace penta {

// Rational inner pair (s, p) = (E / D, involution(D, n) / D) mapping the
// disc into the symmetrized bidisc with unimodular boundary behaviour.
// Invariants: deg E <= n, deg D <= n, involution(E, n) = E, D has no zeros
// in the closed disc, |E| <= 2 |D| on the circle.
struct GammaInnerRep {
  ComplexPoly E, D;
  int n = 0;
};

GammaPoint gamma_eval(const GammaInnerRep& h, Complex z);

// 4 D involution(D, n) - E^2, a 2n-symmetric polynomial.
ComplexPoly royal_polynomial(const GammaInnerRep& h);

// Zeros of the royal polynomial in the closed disc with multiplicities;
// circle zeros have even order and are reported with half of it.
// Throws RoyalVariety when the polynomial vanishes identically.
std::vector<std::pair<Complex, int>> royal_nodes(const GammaInnerRep& h);

Report verify_gamma_inner(const GammaInnerRep& h, int boundary_samples = 512,
                          int grid = 32, double tol = 1e-8);

// Rational inner interpolant h with h(0) = (0, 0) and h(z0) = (s0, p0) for
// two-point data on the extremal set, i.e.
//   (2 |s0 - p0 conj(s0)| + |s0^2 - 4 p0|) / (4 - |s0|^2) = |z0|.
GammaInnerRep ay_equality_interpolant(Complex z0, Complex s0, Complex p0);

// h composed with a finite Blaschke product, with the constant phase of the
// representation fixed so the coefficient symmetry survives.
GammaInnerRep compose_with_blaschke(const GammaInnerRep& h,
                                    const BlaschkeProduct& m);

// Degree of p = involution(D, n) / D after common-root cancellation.
int reduced_degree(const GammaInnerRep& h);

}  // namespace penta
