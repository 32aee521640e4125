#include "penta/gamma_inner.hpp"

#include <algorithm>
#include <cmath>

#include "penta/errors.hpp"

namespace penta {

namespace {

Complex unit(double theta) { return Complex(std::cos(theta), std::sin(theta)); }

double coeff_distance(const ComplexPoly& a, const ComplexPoly& b) {
  double d = 0.0;
  int n = std::max(a.degree(), b.degree());
  for (int i = 0; i <= n; ++i)
    d = std::max(d, std::abs(a.coeff(i) - b.coeff(i)));
  return d;
}

}  // namespace

GammaPoint gamma_eval(const GammaInnerRep& h, Complex z) {
  Complex d = h.D(z);
  if (std::abs(d) < 1e-300)
    fail(ErrorCode::Singular, "denominator vanished at the sample point");
  Complex s = h.E(z) / d;
  Complex p = involution(h.D, h.n)(z) / d;
  return GammaPoint{s, p};
}

ComplexPoly royal_polynomial(const GammaInnerRep& h) {
  return h.D * involution(h.D, h.n) * Complex(4.0) - h.E * h.E;
}

std::vector<std::pair<Complex, int>> royal_nodes(const GammaInnerRep& h) {
  ComplexPoly R = royal_polynomial(h);
  double scale = std::max((h.D * involution(h.D, h.n)).max_coeff_abs() * 4.0,
                          (h.E * h.E).max_coeff_abs());
  if (R.max_coeff_abs() <= 1e-12 * std::max(scale, 1.0))
    fail(ErrorCode::RoyalVariety,
         "royal polynomial vanishes identically");

  // Snap near-circle roots onto the circle before clustering so that the
  // two halves of an even-order circle zero coalesce.
  std::vector<Complex> rs = roots(R);
  for (auto& r : rs) {
    double m = std::abs(r);
    if (std::abs(m - 1.0) < 1e-6) r /= m;
  }
  std::sort(rs.begin(), rs.end(), [](Complex a, Complex b) {
    double ma = std::abs(a), mb = std::abs(b);
    if (ma != mb) return ma < mb;
    return std::arg(a) < std::arg(b);
  });

  std::vector<std::pair<Complex, int>> clusters;
  std::vector<bool> used(rs.size(), false);
  for (size_t i = 0; i < rs.size(); ++i) {
    if (used[i]) continue;
    Complex sum = rs[i];
    int count = 1;
    used[i] = true;
    bool grew = true;
    while (grew) {
      grew = false;
      Complex mean = sum / static_cast<double>(count);
      for (size_t j = i + 1; j < rs.size(); ++j) {
        if (used[j]) continue;
        if (std::abs(rs[j] - mean) <= 1e-7) {
          sum += rs[j];
          ++count;
          used[j] = true;
          grew = true;
        }
      }
    }
    clusters.emplace_back(sum / static_cast<double>(count), count);
  }

  std::vector<std::pair<Complex, int>> nodes;
  for (auto& [r, mult] : clusters) {
    double m = std::abs(r);
    if (std::abs(m - 1.0) < 1e-6) {
      if (mult % 2 != 0)
        fail(ErrorCode::Parity, "circle zero of odd order in the royal polynomial");
      nodes.emplace_back(r / m, mult / 2);
    } else if (m < 1.0) {
      nodes.emplace_back(r, mult);
    }
  }
  return nodes;
}

Report verify_gamma_inner(const GammaInnerRep& h, int boundary_samples,
                          int grid, double tol) {
  Report rep;
  rep.add("deg_E", h.E.degree() <= h.n, static_cast<double>(h.n - h.E.degree()));
  rep.add("deg_D", h.D.degree() <= h.n, static_cast<double>(h.n - h.D.degree()));
  rep.add("D_nonzero", !h.D.is_zero(), h.D.is_zero() ? -1.0 : 1.0);
  if (h.D.is_zero()) return rep;

  double scale = std::max(1.0, std::max(h.E.max_coeff_abs(), h.D.max_coeff_abs()));
  double sym = coeff_distance(h.E, h.E.is_zero() ? h.E : involution(h.E, h.n));
  rep.add("E_symmetric", sym <= tol * scale, -sym / scale);

  double dmin = 2.0;
  if (h.D.degree() >= 1)
    for (const auto& r : roots(h.D)) dmin = std::min(dmin, std::abs(r));
  rep.add("D_no_disc_zeros", dmin > 1.0 + 1e-9, dmin - 1.0);

  ComplexPoly Dn = involution(h.D, h.n);
  double mod_margin = 1e300, bgamma = 1e300;
  for (int i = 0; i < boundary_samples; ++i) {
    Complex z = unit(2.0 * M_PI * i / boundary_samples);
    Complex d = h.D(z), e = h.E(z);
    mod_margin = std::min(mod_margin, 2.0 * std::abs(d) - std::abs(e));
    GammaPoint y{e / d, Dn(z) / d};
    bgamma = std::min(bgamma, in_gamma(y.s, y.p, Mode::Boundary, tol).margin);
  }
  rep.add_margin("modulus_bound", mod_margin, tol * scale);
  rep.add_margin("boundary_distinguished", bgamma, tol);

  double igamma = 1e300;
  for (int i = 0; i < grid; ++i) {
    double r = (i + 0.5) / grid;
    for (int j = 0; j < grid; ++j) {
      Complex z = r * unit(2.0 * M_PI * j / grid);
      GammaPoint y = gamma_eval(h, z);
      igamma = std::min(igamma, in_gamma(y.s, y.p, Mode::Closed, tol).margin);
    }
  }
  rep.add_margin("interior_membership", igamma, tol);
  return rep;
}

GammaInnerRep ay_equality_interpolant(Complex z0, Complex s0, Complex p0) {
  double r0 = std::abs(z0);
  if (r0 <= 0.0 || r0 >= 1.0)
    fail(ErrorCode::Domain, "interpolation node must lie in the punctured disc");
  if (std::abs(s0) >= 2.0)
    fail(ErrorCode::Domain, "target trace coordinate must have modulus below 2");
  double F = (2.0 * std::abs(s0 - p0 * std::conj(s0)) +
              std::abs(s0 * s0 - 4.0 * p0)) /
             (4.0 - std::norm(s0));
  if (std::abs(F - r0) > 1e-8)
    fail(ErrorCode::NotExtremal, "two-point data is not on the extremal set");

  GammaInnerRep h;
  if (std::abs(p0) >= r0 - 1e-8) {
    if (std::abs(s0) > 1e-7)
      fail(ErrorCode::Inconsistent,
           "extremal data with |p0| = |z0| forces s0 = 0");
    Complex omega = p0 / z0;
    Complex omega1 = std::sqrt(omega);
    h.E = ComplexPoly::zero();
    h.D = ComplexPoly::constant(std::conj(omega1));
    h.n = 1;
  } else {
    Complex zeta =
        (std::abs(s0) > 0.0) ? r0 * s0 / (z0 * std::abs(s0)) : Complex(1.0);
    Complex p1 = p0 / z0;
    Complex z2 = zeta * zeta;
    double c = (2.0 / r0) * (std::abs(std::conj(z0) - std::conj(p0) * z0 * z2) -
                             std::abs(z0 * z0 * z2 - p0));
    h.E = ComplexPoly({Complex(0.0), Complex(c)});
    Complex d0 = Complex(1.0) - std::conj(p1) * z2 * z0;
    Complex d1 = std::conj(p1) * z2 - std::conj(z0);
    h.D = ComplexPoly({d0, d1}) * std::conj(zeta);
    h.n = 2;
  }

  GammaPoint at0 = gamma_eval(h, Complex(0.0));
  GammaPoint atz = gamma_eval(h, z0);
  if (std::abs(at0.s) > 1e-9 || std::abs(at0.p) > 1e-9 ||
      std::abs(atz.s - s0) > 1e-9 || std::abs(atz.p - p0) > 1e-9)
    fail(ErrorCode::Numeric, "interpolant failed to match the two-point data");
  return h;
}

GammaInnerRep compose_with_blaschke(const GammaInnerRep& h,
                                    const BlaschkeProduct& m) {
  ComplexPoly P = m.numerator(), Q = m.denominator();
  int k = m.degree();
  ComplexPoly E1 = compose_rational(h.E, h.n, P, Q);
  ComplexPoly D1 = compose_rational(h.D, h.n, P, Q);

  // The constant of m twists the coefficient symmetry; undo it with a
  // square-root phase shared by both numerator polynomials.
  double phase = -0.5 * static_cast<double>(h.n) * std::arg(m.c());
  Complex mu = Complex(std::cos(phase), std::sin(phase));

  GammaInnerRep out{E1 * mu, D1 * mu, h.n * k};

  double scale = std::max(1.0, out.E.max_coeff_abs());
  if (!out.E.is_zero() &&
      coeff_distance(out.E, involution(out.E, out.n)) > 1e-9 * scale)
    fail(ErrorCode::Composition, "composed numerator lost its symmetry");
  for (int i = 0; i < 7; ++i) {
    Complex z = 0.77 * std::exp(Complex(0.0, 0.9 * i));
    GammaPoint direct = gamma_eval(h, m(z));
    GammaPoint comp = gamma_eval(out, z);
    if (std::abs(direct.s - comp.s) > 1e-9 || std::abs(direct.p - comp.p) > 1e-9)
      fail(ErrorCode::Composition, "composed representation mismatch");
  }
  return out;
}

int reduced_degree(const GammaInnerRep& h) {
  ComplexPoly Dn = involution(h.D, h.n);
  int deg = std::max(Dn.degree(), h.D.degree());
  if (h.D.degree() < 1 || Dn.degree() < 1) return deg;
  std::vector<Complex> num = roots(Dn), den = roots(h.D);
  std::vector<bool> used(den.size(), false);
  int common = 0;
  for (const auto& r : num) {
    for (size_t j = 0; j < den.size(); ++j) {
      if (used[j]) continue;
      if (std::abs(r - den[j]) <= 1e-7) {
        used[j] = true;
        ++common;
        break;
      }
    }
  }
  return deg - common;
}

}  // namespace penta
