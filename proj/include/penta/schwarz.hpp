#pragma once

#include <string>

#include "penta/penta_inner.hpp"

namespace penta {

// Two-point interpolation data: find x mapping the disc into the closed
// pentablock with x(0) = (0, 0, 0) and x(lambda0) = (a0, s0, p0).
struct SchwarzProblem {
  Complex lambda0;
  Complex a0, s0, p0;

  PentaPoint target() const { return PentaPoint{a0, s0, p0}; }
};

struct FeasibilityCertificate {
  double F = 0.0;        // extremal quantity of the (s, p) data
  double a_bound = 0.0;  // |lambda0| sqrt(1 - |s0|^2 / 4)
  bool s_bound_ok = false;
  bool F_ok = false;
  bool a_bound_ok = false;
  double beta_margin = 0.0;  // diagnostic bound via the beta coefficient
  bool feasible = false;
  std::string binding;  // name of the violated (or tightest) condition
  double margin = 0.0;
};

struct SchwarzSolution {
  PentaInnerRep x;
  std::string path;  // zero_target | equality_p_eq | equality_p_lt | reduced
  Report report;
};

// Lower-triangular [[l1, 0], [a, l2]] is a contraction.
bool triangular_contraction_check(Complex l1, Complex l2, Complex a);

// Linear solution x(z) = (z / lambda0) * (a0, l1 + l2, l1 l2) for targets
// given by a pair of eigenvalues; the matrix-scaling special case.
struct SpecialSolution {
  bool feasible = false;
  double margin = 0.0;
  std::string binding;
  PentaPoint slope;  // x(z) = z * slope
};
SpecialSolution schwarz_special(Complex lambda0, Complex l1, Complex l2,
                                Complex a0);

FeasibilityCertificate feasibility(const SchwarzProblem& pb);

// Inner m of degree 2 with m(0) = 0 and m(lambda0) = rho * lambda0/|lambda0|
// for rho in [0, |lambda0|]; returned as e^{i theta} z B_w(z).
BlaschkeProduct radius_match_blaschke(Complex lambda0, double rho);

// Largest |a0| the constructive solver can realize for the (s0, p0) part
// of the problem (pb.a0 is ignored). This is |lambda0 A(lambda0)/D(lambda0)|
// for the interpolant the solver builds; it is strictly below the
// certificate bound |lambda0| sqrt(1 - |s0|^2/4) whenever s0 != 0, because
// log|A/D| is the Poisson average of log sqrt(1 - |s|^2/4) over the circle
// and the integrand's harmonic extension majorizes it pointwise.
double attainable_a_radius(const SchwarzProblem& pb);

// Throws Infeasible (message names the binding condition) when the
// certificate fails or |a0| exceeds the attainable radius; otherwise
// returns an interpolating inner map.
SchwarzSolution solve(const SchwarzProblem& pb);

// Compares the spectral factor of the extremal interpolant at lambda0
// against its degree-one closed form: with u = |1 - conj(p1) zeta^2 lambda0|
// and v = |lambda0 zeta^2 - p1|, both coefficients of A have modulus
// sqrt(u v) and conj(A_0) A_1 equals conj(D_0) D_1. Requires extremal data
// with |p0| < |lambda0| and s0 != 0.
Report closed_form_A_check(Complex lambda0, Complex s0, Complex p0);

}  // namespace penta
