#pragma once

#include <functional>

#include "penta/gamma_inner.hpp"

namespace penta {

// Rational inner map x = (a, s, p) of the disc into the closed pentablock:
//   a = a_in * A / D,  s = E / D,  p = involution(D, n) / D,
// with a_in a finite Blaschke product and A the outer spectral factor of
// |D|^2 - |E|^2 / 4 on the circle. zero_a marks the degenerate family with
// a identically zero (A is the zero polynomial there).
struct PentaInnerRep {
  BlaschkeProduct a_in;
  ComplexPoly A, E, D;
  int n = 0;
  bool zero_a = false;

  GammaInnerRep gamma() const { return GammaInnerRep{E, D, n}; }
};

struct DegreePair {
  int deg_a = 0;
  int deg_p = 0;
};

// Builds the rep from a verified (E, D, n) pair by spectral factorization.
// Falls back to the zero-a family when |D|^2 - |E|^2 / 4 vanishes on the
// circle (the map then lands in the royal variety).
PentaInnerRep assemble(const BlaschkeProduct& a_in, const GammaInnerRep& h);
PentaInnerRep assemble_zero_a(const GammaInnerRep& h);

PentaPoint penta_eval(const PentaInnerRep& x, Complex z);

DegreePair degree(const PentaInnerRep& x);

Report verify_penta_inner(const PentaInnerRep& x, int boundary_samples = 512,
                          int grid = 32, double tol = 1e-8);

// Membership-only verification of an arbitrary sampled triple.
Report verify_sampled(const std::function<PentaPoint(Complex)>& f,
                      int boundary_samples = 512, int grid = 32,
                      double tol = 1e-8);

// The lift z -> (0, s(z), p(z)). Its boundary values land in
// K1 = {(a, s, p) : (s, p) distinguished-boundary, |a| <= sqrt(1 - |s|^2/4)}
// rather than the distinguished boundary of the pentablock.
PentaPoint lift_gamma_eval(const GammaInnerRep& h, Complex z);
Report verify_lift_k1(const GammaInnerRep& h, int boundary_samples = 512,
                      int grid = 32, double tol = 1e-8);

}  // namespace penta
