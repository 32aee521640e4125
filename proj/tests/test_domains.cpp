#include <doctest.h>

#include <cmath>

#include "penta/domains.hpp"
#include "penta/errors.hpp"
#include "test_util.hpp"

using penta::Automorphism;
using penta::Complex;
using penta::GammaPoint;
using penta::Matrix2;
using penta::MembershipVerdict;
using penta::Mode;
using penta::PentaCriterion;
using penta::PentaPoint;

TEST_CASE("operator norm of simple matrices") {
  CHECK(penta::operator_norm(Matrix2{1.0, 0.0, 0.0, 0.5}) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(penta::operator_norm(Matrix2{0.0, 2.0, 0.0, 0.0}) ==
        doctest::Approx(2.0).epsilon(1e-12));
  // Rank-one [[1,1],[1,1]] has norm 2.
  CHECK(penta::operator_norm(Matrix2{1.0, 1.0, 1.0, 1.0}) ==
        doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("pi map") {
  PentaPoint x = penta::pi_map(Matrix2{Complex(0.2), Complex(0.0, 1.0),
                                       Complex(0.3, 0.1), Complex(-0.4)});
  CHECK(std::abs(x.a - Complex(0.3, 0.1)) < 1e-15);
  CHECK(std::abs(x.s - Complex(-0.2)) < 1e-15);
  CHECK(std::abs(x.p - (Complex(0.2) * Complex(-0.4) -
                        Complex(0.0, 1.0) * Complex(0.3, 0.1))) < 1e-15);
}

TEST_CASE("symmetrized bidisc membership") {
  CHECK(penta::in_gamma(Complex(0.0), Complex(0.0), Mode::Open).inside);
  CHECK(penta::in_gamma(Complex(2.0), Complex(1.0), Mode::Closed).inside);
  CHECK_FALSE(penta::in_gamma(Complex(2.0), Complex(1.0), Mode::Open).inside);
  CHECK_FALSE(penta::in_gamma(Complex(2.5), Complex(1.0), Mode::Closed).inside);
  CHECK_FALSE(penta::in_gamma(Complex(0.0), Complex(1.5), Mode::Closed).inside);

  // Symmetrization of two disc points is always inside.
  for (int i = 0; i < 10; ++i) {
    Complex z = testutil::random_in_disc(0.95);
    Complex w = testutil::random_in_disc(0.95);
    CHECK(penta::in_gamma(z + w, z * w, Mode::Open).inside);
  }

  // Distinguished boundary: symmetrization of two circle points.
  Complex u = std::polar(1.0, 0.8), v = std::polar(1.0, 2.9);
  CHECK(penta::in_gamma(u + v, u * v, Mode::Boundary).inside);
  CHECK_FALSE(penta::in_gamma(Complex(0.0), Complex(0.0), Mode::Boundary).inside);
}

TEST_CASE("beta coefficient") {
  CHECK(std::abs(penta::beta_coefficient(Complex(0.0), Complex(0.3))) < 1e-15);
  Complex s(0.4, 0.2), p(0.1, -0.3);
  Complex b = penta::beta_coefficient(s, p);
  CHECK(std::abs(b - (s - std::conj(s) * p) / (1.0 - std::norm(p))) < 1e-14);
  // |p| = 1 branch: beta = s / 2.
  Complex u = std::polar(1.0, 1.1);
  Complex bs = penta::beta_coefficient(u + u, u * u);
  CHECK(std::abs(bs - u) < 1e-9);
}

TEST_CASE("pentablock membership along the a fiber") {
  CHECK(penta::in_penta(PentaPoint{Complex(0.0), Complex(0.0), Complex(0.0)},
                        Mode::Open).inside);
  CHECK(penta::in_penta(PentaPoint{Complex(0.9), Complex(0.0), Complex(0.0)},
                        Mode::Open).inside);
  CHECK(penta::in_penta(PentaPoint{Complex(1.0), Complex(0.0), Complex(0.0)},
                        Mode::Closed).inside);
  MembershipVerdict out =
      penta::in_penta(PentaPoint{Complex(1.1), Complex(0.0), Complex(0.0)},
                      Mode::Closed);
  CHECK_FALSE(out.inside);
  CHECK(out.binding == "a_bound");

  MembershipVerdict gout =
      penta::in_penta(PentaPoint{Complex(0.0), Complex(3.0), Complex(0.0)},
                      Mode::Closed);
  CHECK_FALSE(gout.inside);
  CHECK(gout.binding.substr(0, 6) == "gamma_");
}

TEST_CASE("membership from contractions") {
  // The image of a strict contraction under the pi map is inside.
  for (int i = 0; i < 20; ++i) {
    Matrix2 m{testutil::random_in_disc(), testutil::random_in_disc(),
              testutil::random_in_disc(), testutil::random_in_disc()};
    double nm = penta::operator_norm(m);
    double target = 0.9;
    Complex sc(target / std::max(nm, 1e-12));
    m = Matrix2{m.a11 * sc, m.a12 * sc, m.a21 * sc, m.a22 * sc};
    PentaPoint x = penta::pi_map(m);
    CHECK(penta::in_penta(x, Mode::Closed).inside);
    CHECK(penta::in_penta(x, Mode::Closed, PentaCriterion::SupPsi).inside);
  }
}

TEST_CASE("distinguished boundary of the pentablock") {
  Complex u = std::polar(1.0, 0.5), v = std::polar(1.0, 2.2);
  Complex s = u + v, p = u * v;
  double cap = std::sqrt(std::max(0.0, 1.0 - 0.25 * std::norm(s)));
  PentaPoint on{cap * std::polar(1.0, 1.3), s, p};
  CHECK(penta::in_bpenta(on).inside);
  PentaPoint off{0.5 * cap * std::polar(1.0, 1.3), s, p};
  CHECK_FALSE(penta::in_bpenta(off).inside);
  PentaPoint interior{Complex(0.0), Complex(0.0), Complex(0.0)};
  CHECK_FALSE(penta::in_bpenta(interior).inside);
}

TEST_CASE("royal variety and geodesic") {
  Complex w(0.3, -0.5);
  PentaPoint g = penta::royal_geodesic(w);
  CHECK(penta::on_royal(g).inside);
  CHECK(std::abs(g.s * g.s - 4.0 * g.p) < 1e-14);
  CHECK(penta::on_royal(GammaPoint{Complex(1.0), Complex(0.25)}).inside);
  CHECK_FALSE(penta::on_royal(GammaPoint{Complex(1.0), Complex(0.3)}).inside);
  CHECK_FALSE(
      penta::on_royal(PentaPoint{Complex(0.1), Complex(1.0), Complex(0.25)})
          .inside);
}

TEST_CASE("phi_omega maps the open bidisc into the disc") {
  for (int i = 0; i < 10; ++i) {
    Complex z = testutil::random_in_disc(0.9);
    Complex w = testutil::random_in_disc(0.9);
    Complex omega = testutil::random_unimodular();
    CHECK(std::abs(penta::phi_omega(omega, z + w, z * w)) < 1.0 + 1e-12);
  }
}

TEST_CASE("psi and its supremum for a constant fiber point") {
  PentaPoint x{Complex(0.5), Complex(0.0), Complex(0.0)};
  CHECK(std::abs(penta::psi(Complex(0.0), x) - Complex(0.5)) < 1e-15);
  CHECK(penta::sup_psi(x) == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("automorphism algebra on sample points") {
  Automorphism f{testutil::random_unimodular(), testutil::random_unimodular(),
                 testutil::random_in_disc(0.7)};
  Automorphism g{testutil::random_unimodular(), testutil::random_unimodular(),
                 testutil::random_in_disc(0.7)};
  for (int i = 0; i < 8; ++i) {
    Matrix2 m{testutil::random_in_disc(), testutil::random_in_disc(),
              testutil::random_in_disc(), testutil::random_in_disc()};
    double nm = penta::operator_norm(m);
    Complex sc(0.85 / std::max(nm, 1e-12));
    PentaPoint x = penta::pi_map(
        Matrix2{m.a11 * sc, m.a12 * sc, m.a21 * sc, m.a22 * sc});

    PentaPoint via_compose = penta::automorphism_apply(penta::compose(f, g), x);
    PentaPoint stepwise =
        penta::automorphism_apply(f, penta::automorphism_apply(g, x));
    CHECK(std::abs(via_compose.a - stepwise.a) < 1e-9);
    CHECK(std::abs(via_compose.s - stepwise.s) < 1e-9);
    CHECK(std::abs(via_compose.p - stepwise.p) < 1e-9);

    PentaPoint back =
        penta::automorphism_apply(f.inverse(), penta::automorphism_apply(f, x));
    CHECK(std::abs(back.a - x.a) < 1e-9);
    CHECK(std::abs(back.s - x.s) < 1e-9);
    CHECK(std::abs(back.p - x.p) < 1e-9);

    // Automorphisms preserve membership.
    CHECK(penta::in_penta(penta::automorphism_apply(f, x), Mode::Closed).inside);
  }

  // Royal-variety invariance.
  for (int i = 0; i < 8; ++i) {
    PentaPoint y = penta::automorphism_apply(
        f, penta::royal_geodesic(testutil::random_in_disc(0.9)));
    CHECK(penta::on_royal(y, 1e-9).inside);
  }
}
