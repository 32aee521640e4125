#include <doctest.h>

#include <cmath>

#include "penta/errors.hpp"
#include "penta/specfact.hpp"
#include "test_util.hpp"

using penta::Complex;
using penta::ComplexPoly;
using penta::Error;
using penta::TrigPoly;

TEST_CASE("outer factor of (6 - z - 1/z)/4 in closed form") {
  TrigPoly f;
  f.set(0, Complex(1.5));
  f.set(1, Complex(-0.25));
  f.set(-1, Complex(-0.25));
  penta::FejerRieszResult r = penta::fejer_riesz(f);
  double root = 3.0 + 2.0 * std::sqrt(2.0);
  CHECK(r.D.degree() == 1);
  CHECK(std::abs(r.D.coeff(0) - root / (root - 1.0)) < 1e-12);
  CHECK(std::abs(r.D.coeff(1) + 1.0 / (root - 1.0)) < 1e-12);
  CHECK(r.residual < 1e-12);
  CHECK_FALSE(r.degenerate_zero);
  CHECK(penta::is_outer(r.D));
}

TEST_CASE("constant and zero inputs") {
  TrigPoly c;
  c.set(0, Complex(2.25));
  penta::FejerRieszResult r = penta::fejer_riesz(c);
  CHECK(r.D.degree() == 0);
  CHECK(std::abs(r.D.coeff(0) - 1.5) < 1e-14);

  TrigPoly zero;
  penta::FejerRieszResult z = penta::fejer_riesz(zero);
  CHECK(z.degenerate_zero);
  CHECK(z.D.is_zero());
}

TEST_CASE("profile with a circle zero of even order") {
  // |1 - z|^2 vanishes at z = 1; the factor must still come out outer
  // with nonnegative constant coefficient.
  ComplexPoly d({Complex(1.0), Complex(-1.0)});
  penta::FejerRieszResult r = penta::fejer_riesz(TrigPoly::modulus_squared(d));
  CHECK(r.D.degree() == 1);
  CHECK(std::abs(r.D.coeff(0) - 1.0) < 1e-7);
  CHECK(std::abs(r.D.coeff(1) + 1.0) < 1e-7);
  // A double circle zero limits the root finder to square-root accuracy.
  CHECK(r.residual < 1e-7);
}

TEST_CASE("negative profile is rejected") {
  TrigPoly f;
  f.set(0, Complex(-1.0));
  CHECK_THROWS_AS(penta::fejer_riesz(f), Error);

  // Sign dips below zero on part of the circle only.
  TrigPoly g;
  g.set(0, Complex(0.5));
  g.set(1, Complex(1.0));
  g.set(-1, Complex(1.0));
  CHECK_THROWS_AS(penta::fejer_riesz(g), Error);
}

TEST_CASE("non-hermitian input is rejected") {
  TrigPoly f;
  f.set(0, Complex(1.0));
  f.set(1, Complex(0.5));
  CHECK_THROWS_AS(penta::fejer_riesz(f), Error);
}

TEST_CASE("random outer round trips") {
  for (int trial = 0; trial < 25; ++trial) {
    int deg = 1 + trial % 6;
    ComplexPoly d0 = testutil::random_outer_poly(deg);
    penta::FejerRieszResult r =
        penta::fejer_riesz(TrigPoly::modulus_squared(d0));
    CAPTURE(trial);
    CHECK(r.D.approx_equal(d0, 1e-7));
    CHECK(r.residual < 1e-9);
  }
}
