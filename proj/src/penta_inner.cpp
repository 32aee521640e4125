#include "penta/penta_inner.hpp"

#include <algorithm>
#include <cmath>

#include "penta/errors.hpp"
#include "penta/specfact.hpp"

namespace penta {

namespace {

Complex unit(double theta) { return Complex(std::cos(theta), std::sin(theta)); }

TrigPoly outer_profile(const GammaInnerRep& h) {
  return TrigPoly::modulus_squared(h.D) +
         TrigPoly::modulus_squared(h.E) * (-0.25);
}

}  // namespace

PentaInnerRep assemble(const BlaschkeProduct& a_in, const GammaInnerRep& h) {
  Report pre = verify_gamma_inner(h);
  if (!pre.ok())
    fail(ErrorCode::Data, "assembly input failed inner-pair verification: " +
                              pre.worst()->name);
  TrigPoly f = outer_profile(h);
  double dscale = TrigPoly::modulus_squared(h.D).max_coeff_abs();
  if (f.max_coeff_abs() <= 1e-12 * std::max(1.0, dscale))
    return assemble_zero_a(h);
  FejerRieszResult fr = fejer_riesz(f);
  PentaInnerRep x{a_in, fr.D, h.E, h.D, h.n, false};
  Report post = verify_penta_inner(x);
  if (!post.ok())
    fail(ErrorCode::Numeric,
         "assembled map failed verification: " + post.worst()->name);
  return x;
}

PentaInnerRep assemble_zero_a(const GammaInnerRep& h) {
  return PentaInnerRep{BlaschkeProduct(), ComplexPoly::zero(), h.E, h.D, h.n,
                       true};
}

PentaPoint penta_eval(const PentaInnerRep& x, Complex z) {
  GammaPoint y = gamma_eval(x.gamma(), z);
  Complex a(0.0);
  if (!x.zero_a) a = x.a_in(z) * x.A(z) / x.D(z);
  return PentaPoint{a, y.s, y.p};
}

DegreePair degree(const PentaInnerRep& x) {
  DegreePair d;
  d.deg_p = reduced_degree(x.gamma());
  if (x.zero_a) {
    d.deg_a = 0;
    return d;
  }
  int common = 0;
  if (x.A.degree() >= 1 && x.D.degree() >= 1) {
    std::vector<Complex> ra = roots(x.A), rd = roots(x.D);
    std::vector<bool> used(rd.size(), false);
    for (const auto& r : ra) {
      for (size_t j = 0; j < rd.size(); ++j) {
        if (used[j]) continue;
        if (std::abs(r - rd[j]) <= 1e-7) {
          used[j] = true;
          ++common;
          break;
        }
      }
    }
  }
  d.deg_a =
      x.a_in.degree() + std::max(x.A.degree(), x.D.degree()) - common;
  return d;
}

Report verify_penta_inner(const PentaInnerRep& x, int boundary_samples,
                          int grid, double tol) {
  Report rep = verify_gamma_inner(x.gamma(), boundary_samples, grid, tol);

  double ain_margin = 1.0 - std::abs(std::abs(x.a_in.c()) - 1.0);
  for (const auto& z : x.a_in.zeros())
    ain_margin = std::min(ain_margin, 1.0 - std::abs(z));
  rep.add("a_in_valid", ain_margin > 0.0, ain_margin);

  double scale =
      std::max(1.0, std::max(x.D.max_coeff_abs(), x.E.max_coeff_abs()));
  scale *= scale;

  if (x.zero_a) {
    double dev = 0.0;
    for (int i = 0; i < boundary_samples; ++i) {
      Complex z = unit(2.0 * M_PI * i / boundary_samples);
      dev = std::max(dev,
                     std::abs(std::abs(x.E(z)) - 2.0 * std::abs(x.D(z))));
    }
    rep.add("royal_modulus", dev <= tol * scale, -dev);
  } else {
    rep.add("A_outer", is_outer(x.A), is_outer(x.A) ? 1.0 : -1.0);
    double dev = 0.0;
    for (int i = 0; i < boundary_samples; ++i) {
      Complex z = unit(2.0 * M_PI * i / boundary_samples);
      double want = std::norm(x.D(z)) - 0.25 * std::norm(x.E(z));
      dev = std::max(dev, std::abs(std::norm(x.A(z)) - want));
    }
    rep.add("A_modulus_identity", dev <= tol * scale, -dev / scale);
  }

  double bmargin = 1e300, imargin = 1e300;
  for (int i = 0; i < boundary_samples; ++i) {
    Complex z = unit(2.0 * M_PI * i / boundary_samples);
    bmargin = std::min(bmargin, in_bpenta(penta_eval(x, z), tol).margin);
  }
  rep.add_margin("boundary_distinguished_full", bmargin, tol);
  for (int i = 0; i < grid; ++i) {
    double r = (i + 0.5) / grid;
    for (int j = 0; j < grid; ++j) {
      Complex z = r * unit(2.0 * M_PI * j / grid);
      imargin = std::min(
          imargin,
          in_penta(penta_eval(x, z), Mode::Closed, PentaCriterion::Beta, tol)
              .margin);
    }
  }
  rep.add_margin("interior_membership_full", imargin, tol);
  return rep;
}

Report verify_sampled(const std::function<PentaPoint(Complex)>& f,
                      int boundary_samples, int grid, double tol) {
  Report rep;
  double bmargin = 1e300, imargin = 1e300;
  for (int i = 0; i < boundary_samples; ++i) {
    Complex z = unit(2.0 * M_PI * i / boundary_samples);
    bmargin = std::min(bmargin, in_bpenta(f(z), tol).margin);
  }
  rep.add_margin("boundary_distinguished", bmargin, tol);
  for (int i = 0; i < grid; ++i) {
    double r = (i + 0.5) / grid;
    for (int j = 0; j < grid; ++j) {
      Complex z = r * unit(2.0 * M_PI * j / grid);
      imargin = std::min(
          imargin,
          in_penta(f(z), Mode::Closed, PentaCriterion::Beta, tol).margin);
    }
  }
  rep.add_margin("interior_membership", imargin, tol);
  return rep;
}

PentaPoint lift_gamma_eval(const GammaInnerRep& h, Complex z) {
  GammaPoint y = gamma_eval(h, z);
  return PentaPoint{Complex(0.0), y.s, y.p};
}

Report verify_lift_k1(const GammaInnerRep& h, int boundary_samples, int grid,
                      double tol) {
  Report rep;
  double bmargin = 1e300, amargin = 1e300, imargin = 1e300;
  for (int i = 0; i < boundary_samples; ++i) {
    Complex z = unit(2.0 * M_PI * i / boundary_samples);
    PentaPoint x = lift_gamma_eval(h, z);
    bmargin =
        std::min(bmargin, in_gamma(x.s, x.p, Mode::Boundary, tol).margin);
    double ss = std::min(std::abs(x.s), 2.0);
    amargin = std::min(
        amargin, std::sqrt(1.0 - ss * ss / 4.0) - std::abs(x.a));
  }
  rep.add_margin("boundary_gamma_distinguished", bmargin, tol);
  rep.add_margin("boundary_a_bound", amargin, tol);
  for (int i = 0; i < grid; ++i) {
    double r = (i + 0.5) / grid;
    for (int j = 0; j < grid; ++j) {
      Complex z = r * unit(2.0 * M_PI * j / grid);
      imargin = std::min(
          imargin, in_penta(lift_gamma_eval(h, z), Mode::Closed,
                            PentaCriterion::Beta, tol)
                       .margin);
    }
  }
  rep.add_margin("interior_membership", imargin, tol);
  return rep;
}

}  // namespace penta
