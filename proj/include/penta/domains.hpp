#pragma once

#include <string>

#include "penta/poly.hpp"
#include "penta/report.hpp"

namespace penta {

struct Matrix2 {
  Complex a11, a12, a21, a22;
};

struct GammaPoint {
  Complex s, p;
};

struct PentaPoint {
  Complex a, s, p;
};

struct MembershipVerdict {
  bool inside = false;
  double margin = 0.0;     // slack of the binding condition
  std::string binding;     // name of the condition attaining the margin
};

enum class Mode { Open, Closed, Boundary };

enum class PentaCriterion { Beta, SupPsi };

// Largest singular value of a 2x2 complex matrix.
double operator_norm(const Matrix2& m);

// (a21, tr, det) of a 2x2 matrix.
PentaPoint pi_map(const Matrix2& m);

// beta = (s - conj(s) p) / (1 - |p|^2), extended by s/2 when |p| = 1.
// Requires (s, p) in the closed symmetrized bidisc.
Complex beta_coefficient(Complex s, Complex p);

// psi_z(a, s, p) = a (1 - |z|^2) / (1 - s z + p z^2).
Complex psi(Complex z, const PentaPoint& x);

MembershipVerdict in_gamma(Complex s, Complex p, Mode mode, double tol = 1e-9);
MembershipVerdict in_penta(const PentaPoint& x, Mode mode,
                           PentaCriterion crit = PentaCriterion::Beta,
                           double tol = 1e-9);
// Distinguished boundary of the closed pentablock.
MembershipVerdict in_bpenta(const PentaPoint& x, double tol = 1e-9);
// Royal variety s^2 = 4p, with a = 0 for the pentablock version.
MembershipVerdict on_royal(const GammaPoint& y, double tol = 1e-9);
MembershipVerdict on_royal(const PentaPoint& x, double tol = 1e-9);

// Mobius-type symmetrized-bidisc map (2 w p - s) / (2 - w s) for |w| <= 1.
Complex phi_omega(Complex w, Complex s, Complex p);

// Pentablock automorphism determined by a unimodular w and a disc
// automorphism v = eta * B_alpha acting on the zeros of x^2 - s x + p.
struct Automorphism {
  Complex w{1.0};
  Complex eta{1.0};
  Complex alpha{0.0};

  static Automorphism identity() { return Automorphism{}; }
  Automorphism inverse() const;
};

PentaPoint automorphism_apply(const Automorphism& f, const PentaPoint& x);
Automorphism compose(const Automorphism& f, const Automorphism& g);

// (0, -2 w, w^2) for |w| < 1.
PentaPoint royal_geodesic(Complex w);

// Supremum of |psi_z(x)| over z in the open disc (polar grid plus local
// golden-section refinement).
double sup_psi(const PentaPoint& x, int grid = 128, int refine_steps = 30);

}  // namespace penta
