#include "penta/schwarz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "penta/errors.hpp"
#include "penta/specfact.hpp"

namespace penta {

namespace {

constexpr double kEqTol = 1e-8;  // extremal-equality tolerance

double extremal_F(Complex s0, Complex p0) {
  double den = 4.0 - std::norm(s0);
  if (den <= 0.0) return std::numeric_limits<double>::infinity();
  return (2.0 * std::abs(s0 - p0 * std::conj(s0)) +
          std::abs(s0 * s0 - 4.0 * p0)) /
         den;
}

// Shared first stage of the solver: the Gamma-inner interpolant through
// (s0, p0) at lambda0, the outer factor A of |D|^2 - |E|^2/4 (zero on the
// royal variety), and the branch it came from.
struct BaseInterpolant {
  GammaInnerRep h;
  ComplexPoly A;
  std::string path;
};

TrigPoly outer_profile(const GammaInnerRep& h) {
  return TrigPoly::modulus_squared(h.D) +
         TrigPoly::modulus_squared(h.E) * (-0.25);
}

bool profile_degenerate(const GammaInnerRep& h, const TrigPoly& profile) {
  double dscale =
      std::max(1.0, TrigPoly::modulus_squared(h.D).max_coeff_abs());
  return profile.max_coeff_abs() <= 1e-12 * dscale;
}

// The extremal interpolant together with a closed-form outer factor.  The
// profile |D|^2 - |E|^2/4 of an extremal interpolant touches zero on the
// circle with a double zero, which defeats numerical spectral factorization;
// the factor is instead written down exactly from the D coefficients.
BaseInterpolant equality_base(Complex z0, Complex s0, Complex p0) {
  double r0 = std::abs(z0);
  BaseInterpolant base;
  base.h = ay_equality_interpolant(z0, s0, p0);
  if (std::abs(p0) >= r0 - kEqTol) {
    base.path = "equality_p_eq";
    // E = 0 and D is constant: the outer factor is the constant |D|.
    base.A = ComplexPoly::constant(Complex(std::abs(base.h.D.coeff(0))));
    return base;
  }
  base.path = "equality_p_lt";
  if (profile_degenerate(base.h, outer_profile(base.h))) {
    base.A = ComplexPoly::zero();  // royal data: |E| = 2|D| on the circle
    return base;
  }
  // With D = conj(zeta)(d0 + d1 z) and |E| coefficient 2(|d0| - |d1|), the
  // profile equals |sqrt(|d0||d1|) + (conj(d0) d1 / sqrt(|d0||d1|)) z|^2.
  Complex d0 = base.h.D.coeff(0), d1 = base.h.D.coeff(1);
  double mag = std::sqrt(std::abs(d0) * std::abs(d1));
  base.A = ComplexPoly({Complex(mag), std::conj(d0) * d1 / mag});
  return base;
}

BaseInterpolant build_base(const SchwarzProblem& pb,
                           const FeasibilityCertificate& cert) {
  double r0 = std::abs(pb.lambda0);
  if (cert.F <= 1e-12) {
    BaseInterpolant base;
    base.path = "zero_target";
    base.h.E = ComplexPoly::zero();
    base.h.D = ComplexPoly({Complex(1.0), -std::conj(pb.lambda0)});
    base.h.n = 2;
    base.A = base.h.D;  // E = 0 and D is already outer
    return base;
  }
  if (r0 - cert.F <= kEqTol) return equality_base(pb.lambda0, pb.s0, pb.p0);

  Complex star = cert.F * pb.lambda0 / r0;
  BaseInterpolant inner = equality_base(star, pb.s0, pb.p0);
  BlaschkeProduct m = radius_match_blaschke(pb.lambda0, cert.F);
  BaseInterpolant base;
  base.path = "reduced";
  base.h = compose_with_blaschke(inner.h, m);
  // |m| = 1 on the circle, so the composed profile factors through the
  // composed outer factor; preimages of circle zeros stay on the circle.
  base.A = inner.A.is_zero()
               ? ComplexPoly::zero()
               : compose_rational(inner.A, inner.h.n, m.numerator(),
                                  m.denominator());
  return base;
}

}  // namespace

bool triangular_contraction_check(Complex l1, Complex l2, Complex a) {
  Matrix2 m{l1, Complex(0.0), a, l2};
  return operator_norm(m) <= 1.0 + 1e-9;
}

SpecialSolution schwarz_special(Complex lambda0, Complex l1, Complex l2,
                                Complex a0) {
  double r0 = std::abs(lambda0);
  if (r0 <= 0.0 || r0 >= 1.0)
    fail(ErrorCode::Domain, "base point must lie in the punctured disc");
  SpecialSolution sol;
  double m1 = r0 - std::abs(l1);
  double m2 = r0 - std::abs(l2);
  double cap = r0 * std::sqrt(std::max(0.0, 1.0 - std::norm(l1 / lambda0))) *
               std::sqrt(std::max(0.0, 1.0 - std::norm(l2 / lambda0)));
  double m3 = cap - std::abs(a0);
  sol.margin = std::min({m1, m2, m3});
  sol.binding = (sol.margin == m1)   ? "l1_bound"
                : (sol.margin == m2) ? "l2_bound"
                                     : "a_bound";
  sol.feasible = sol.margin >= -1e-9;
  sol.slope = PentaPoint{a0 / lambda0, (l1 + l2) / lambda0,
                         l1 * l2 / lambda0};
  return sol;
}

FeasibilityCertificate feasibility(const SchwarzProblem& pb) {
  double r0 = std::abs(pb.lambda0);
  if (r0 <= 0.0 || r0 >= 1.0)
    fail(ErrorCode::Domain, "base point must lie in the punctured disc");

  FeasibilityCertificate cert;
  cert.F = extremal_F(pb.s0, pb.p0);
  cert.s_bound_ok = std::abs(pb.s0) < 2.0;
  double m_s = 2.0 - std::abs(pb.s0);
  double m_F = r0 - cert.F;
  cert.F_ok = m_F >= -1e-9;
  cert.a_bound =
      r0 * std::sqrt(std::max(0.0, 1.0 - 0.25 * std::norm(pb.s0)));
  double m_a = cert.a_bound - std::abs(pb.a0);
  cert.a_bound_ok = m_a >= -1e-9;

  cert.beta_margin = -1.0;
  MembershipVerdict g = in_gamma(pb.s0, pb.p0, Mode::Closed, 1e-9);
  if (g.inside) {
    Complex b = beta_coefficient(pb.s0, pb.p0);
    double root = std::sqrt(std::max(0.0, 1.0 - std::norm(b)));
    double den =
        std::abs(Complex(1.0) - 0.5 * pb.s0 * std::conj(b) / (1.0 + root));
    cert.beta_margin = (den > 1e-15) ? r0 - std::abs(pb.a0) / den
                                     : -std::abs(pb.a0);
  }

  if (!cert.s_bound_ok) {
    cert.binding = "s_bound";
    cert.margin = m_s;
  } else if (!cert.F_ok) {
    cert.binding = "F_bound";
    cert.margin = m_F;
  } else if (!cert.a_bound_ok) {
    cert.binding = "a_bound";
    cert.margin = m_a;
  } else {
    cert.margin = std::min({m_s, m_F, m_a});
    cert.binding = (cert.margin == m_s)   ? "s_bound"
                   : (cert.margin == m_F) ? "F_bound"
                                          : "a_bound";
  }
  cert.feasible = cert.s_bound_ok && cert.F_ok && cert.a_bound_ok;
  return cert;
}

BlaschkeProduct radius_match_blaschke(Complex lambda0, double rho) {
  double a = std::abs(lambda0);
  if (a <= 0.0 || a >= 1.0)
    fail(ErrorCode::Domain, "base point must lie in the punctured disc");
  if (rho < 0.0 || rho > a + 1e-12)
    fail(ErrorCode::Domain, "target radius outside [0, |lambda0|]");
  rho = std::min(rho, a);
  Complex u = lambda0 / a;

  // Signed offset along the lambda0 direction so that
  // |lambda0 B_w(lambda0)| = rho.
  double rs = (a * a - rho) / (a * (1.0 - rho));
  if (rs <= -1.0 + 1e-12) {
    // rho = |lambda0|: the offset factor degenerates and m is the identity.
    return BlaschkeProduct(Complex(1.0), {Complex(0.0)});
  }
  Complex w = rs * u;

  BlaschkeProduct base(Complex(1.0), {Complex(0.0), w});
  Complex at = base(lambda0);
  Complex want = rho * u;
  Complex phase(1.0);
  if (std::abs(at) > 1e-300 && rho > 0.0) {
    phase = want / at;
    phase /= std::abs(phase);
  }
  return BlaschkeProduct(phase, {Complex(0.0), w});
}

double attainable_a_radius(const SchwarzProblem& pb) {
  SchwarzProblem base_pb = pb;
  base_pb.a0 = Complex(0.0);
  FeasibilityCertificate cert = feasibility(base_pb);
  if (!cert.feasible)
    fail(ErrorCode::Infeasible,
         "problem infeasible, binding condition: " + cert.binding);
  BaseInterpolant base = build_base(base_pb, cert);
  if (base.A.is_zero()) return 0.0;
  return std::abs(pb.lambda0 * base.A(pb.lambda0) / base.h.D(pb.lambda0));
}

SchwarzSolution solve(const SchwarzProblem& pb) {
  MembershipVerdict tv = in_penta(pb.target(), Mode::Closed);
  if (!tv.inside)
    fail(ErrorCode::Data, "target point outside the closed pentablock: " +
                              tv.binding);
  FeasibilityCertificate cert = feasibility(pb);
  if (!cert.feasible)
    fail(ErrorCode::Infeasible,
         "problem infeasible, binding condition: " + cert.binding);

  SchwarzSolution sol;
  BaseInterpolant base = build_base(pb, cert);
  sol.path = base.path;
  GammaInnerRep h = base.h;

  if (base.A.is_zero()) {
    // Royal-variety interpolant: the first coordinate is forced to zero.
    if (std::abs(pb.a0) > 1e-8)
      fail(ErrorCode::Infeasible,
           "royal-variety target admits only a zero first coordinate");
    sol.x = assemble_zero_a(h);
  } else {
    const ComplexPoly& A = base.A;
    Complex q = pb.lambda0 * A(pb.lambda0) / h.D(pb.lambda0);
    Complex mu0 = (std::abs(pb.a0) > 0.0) ? pb.a0 / q : Complex(0.0);
    if (std::abs(mu0) > 1.0 + 1e-7)
      fail(ErrorCode::Infeasible,
           "problem infeasible, binding condition: a_bound_attainable "
           "(first coordinate exceeds the attainable radius " +
               std::to_string(std::abs(q)) + ")");

    BlaschkeProduct a_in;
    if (std::abs(mu0) >= 1.0 - 1e-9) {
      Complex g = mu0 / std::abs(mu0);
      a_in = BlaschkeProduct(g, {Complex(0.0)});
    } else {
      // z * (B_{mu0}^{-1} o B_{lambda0}): a disc automorphism sending
      // lambda0 to mu0, with an extra zero pinned at the origin.
      Complex nu = (pb.lambda0 - mu0) /
                   (Complex(1.0) - std::conj(pb.lambda0) * mu0);
      auto auto_map = [&](Complex z) {
        Complex bz = (z - pb.lambda0) / (Complex(1.0) - std::conj(pb.lambda0) * z);
        return (bz + mu0) / (Complex(1.0) + std::conj(mu0) * bz);
      };
      Complex probe = (std::abs(nu) < 0.5) ? Complex(0.9) : Complex(0.0);
      Complex kappa = auto_map(probe) *
                      (Complex(1.0) - std::conj(nu) * probe) / (probe - nu);
      kappa /= std::abs(kappa);
      a_in = BlaschkeProduct(kappa, {Complex(0.0), nu});
    }
    sol.x = PentaInnerRep{a_in, A, h.E, h.D, h.n, false};
  }

  PentaPoint at0 = penta_eval(sol.x, Complex(0.0));
  PentaPoint atl = penta_eval(sol.x, pb.lambda0);
  double d0 = std::abs(at0.a) + std::abs(at0.s) + std::abs(at0.p);
  double dl = std::max({std::abs(atl.a - pb.a0), std::abs(atl.s - pb.s0),
                        std::abs(atl.p - pb.p0)});
  sol.report.add("origin_match", d0 <= 1e-12, -d0);
  sol.report.add("target_match", dl <= 1e-8, -dl);
  // Extremal interpolants touch |E| = 2|D| on the circle, so the boundary
  // checks see square-root amplification of coefficient noise there; verify
  // with a correspondingly relaxed margin.
  Report ver = verify_penta_inner(sol.x, 512, 32, 1e-6);
  for (const auto& c : ver.checks) sol.report.checks.push_back(c);
  return sol;
}

Report closed_form_A_check(Complex lambda0, Complex s0, Complex p0) {
  double r0 = std::abs(lambda0);
  if (std::abs(p0) >= r0 - kEqTol)
    fail(ErrorCode::Domain, "closed form requires |p0| < |lambda0|");
  if (std::abs(s0) <= 1e-12)
    fail(ErrorCode::Domain, "closed form requires s0 != 0");

  GammaInnerRep h = ay_equality_interpolant(lambda0, s0, p0);
  Complex zeta = r0 * s0 / (lambda0 * std::abs(s0));
  Complex z2 = zeta * zeta;
  Complex p1 = p0 / lambda0;
  // D = conj(zeta) (d0hat + d1hat z); the E coefficient satisfies
  // c = 2(|d0hat| - |d1hat|), so |D|^2 - |E|^2/4 has a double zero on the
  // circle and both coefficients of A have modulus sqrt(|d0hat| |d1hat|).
  Complex d0hat = Complex(1.0) - std::conj(p1) * z2 * lambda0;
  Complex d1hat = std::conj(p1) * z2 - std::conj(lambda0);
  double u = std::abs(d0hat);
  double v = std::abs(d1hat);
  double mag = std::sqrt(u * v);
  Complex cross = std::conj(d0hat) * d1hat;

  Report rep;
  TrigPoly profile = TrigPoly::modulus_squared(h.D) +
                     TrigPoly::modulus_squared(h.E) * (-0.25);
  ComplexPoly A = profile_degenerate(h, profile) ? ComplexPoly::zero()
                                                 : fejer_riesz(profile).D;
  double scale = std::max(1.0, u);
  rep.add("A_degree", A.degree() <= 1, static_cast<double>(1 - A.degree()));
  double e0 = std::abs(std::abs(A.coeff(0)) - mag);
  rep.add("coeff0_modulus", e0 <= 1e-7 * scale, -e0 / scale);
  double e1 = std::abs(std::abs(A.coeff(1)) - mag);
  rep.add("coeff1_modulus", e1 <= 1e-7 * scale, -e1 / scale);
  double ec = std::abs(std::conj(A.coeff(0)) * A.coeff(1) - cross);
  rep.add("cross_term", ec <= 1e-7 * scale * scale, -ec / (scale * scale));
  return rep;
}

}  // namespace penta
