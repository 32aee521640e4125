#include <doctest.h>

#include <cmath>

#include "penta/construct.hpp"
#include "penta/errors.hpp"
#include "penta/gamma_inner.hpp"
#include "test_util.hpp"

using penta::BlaschkeProduct;
using penta::Complex;
using penta::ComplexPoly;
using penta::Error;
using penta::GammaInnerRep;
using penta::GammaPoint;

namespace {

// (2B, B^2) for a Blaschke product B: the royal family, phase-adjusted so
// that the trace numerator is symmetric under the involution.
GammaInnerRep royal_pair(const BlaschkeProduct& b) {
  ComplexPoly num = b.numerator() * (Complex(1.0) / b.c());
  ComplexPoly den = b.denominator();
  GammaInnerRep h;
  h.n = 2 * b.degree();
  h.E = num * den * Complex(2.0);
  h.D = den * den * std::conj(b.c());
  return h;
}

}  // namespace

TEST_CASE("gamma_eval of an explicit pair") {
  GammaInnerRep h;
  h.E = ComplexPoly::zero();
  h.D = ComplexPoly::one();
  h.n = 1;
  GammaPoint y = penta::gamma_eval(h, Complex(0.4, 0.1));
  CHECK(std::abs(y.s) < 1e-15);
  CHECK(std::abs(y.p - Complex(0.4, 0.1)) < 1e-15);
  CHECK(penta::verify_gamma_inner(h).ok());
}

TEST_CASE("royal polynomial vanishes exactly on the royal family") {
  BlaschkeProduct b(testutil::random_unimodular(),
                    {Complex(0.4, -0.2), Complex(-0.1, 0.3)});
  GammaInnerRep h = royal_pair(b);
  CHECK(penta::royal_polynomial(h).max_coeff_abs() < 1e-12);
  CHECK_THROWS_AS(penta::royal_nodes(h), Error);

  // The pair itself is a valid inner pair with |E| = 2|D| on the circle.
  CHECK(penta::verify_gamma_inner(h).ok());
  Complex z = std::polar(1.0, 1.4);
  GammaPoint y = penta::gamma_eval(h, z);
  CHECK(std::abs(y.s - 2.0 * b(z)) < 1e-12);
  CHECK(std::abs(y.p - b(z) * b(z)) < 1e-12);
}

TEST_CASE("royal nodes of the worked product construction") {
  penta::ConstructionData data;
  data.etas = {Complex(1.0)};
  data.sigmas = {Complex(0.0)};
  penta::ConstructionResult res = penta::build(data);
  auto nodes = penta::royal_nodes(res.x.gamma());
  REQUIRE(nodes.size() == 1);
  CHECK(std::abs(nodes[0].first) < 1e-9);
  CHECK(nodes[0].second == 1);
}

TEST_CASE("circle royal nodes are reported with half multiplicity") {
  penta::ConstructionData data;
  data.etas = {Complex(-1.0)};
  data.sigmas = {Complex(1.0)};
  penta::ConstructionResult res = penta::build(data);
  auto nodes = penta::royal_nodes(res.x.gamma());
  REQUIRE(nodes.size() == 1);
  CHECK(std::abs(nodes[0].first - Complex(1.0)) < 1e-6);
  CHECK(nodes[0].second == 1);
}

TEST_CASE("verify_gamma_inner flags a denominator zero in the disc") {
  GammaInnerRep bad;
  bad.E = ComplexPoly::zero();
  bad.D = ComplexPoly({Complex(1.0), Complex(-2.0)});  // zero at 1/2
  bad.n = 1;
  penta::Report rep = penta::verify_gamma_inner(bad);
  CHECK_FALSE(rep.ok());
  REQUIRE(rep.find("D_no_disc_zeros") != nullptr);
  CHECK_FALSE(rep.find("D_no_disc_zeros")->pass);
}

TEST_CASE("verify_gamma_inner flags a broken modulus bound") {
  GammaInnerRep bad;
  bad.E = ComplexPoly({Complex(0.0), Complex(3.0)});  // |E| = 3 > 2|D| on T
  bad.D = ComplexPoly::one();
  bad.n = 2;
  // E is 2-symmetric? involution(3x, 2) = 3x, yes.
  penta::Report rep = penta::verify_gamma_inner(bad);
  CHECK_FALSE(rep.ok());
}

TEST_CASE("two-point extremal interpolant, trace-free branch") {
  // s0 = 0 forces |p0| = |lambda0| on the extremal set.
  Complex l0(0.3, 0.4);
  Complex p0 = 0.5 * std::polar(1.0, 2.0);
  GammaInnerRep h = penta::ay_equality_interpolant(l0, Complex(0.0), p0);
  GammaPoint at = penta::gamma_eval(h, l0);
  CHECK(std::abs(at.s) < 1e-12);
  CHECK(std::abs(at.p - p0) < 1e-12);
  GammaPoint at0 = penta::gamma_eval(h, Complex(0.0));
  CHECK(std::abs(at0.s) < 1e-12);
  CHECK(std::abs(at0.p) < 1e-12);
  CHECK(penta::verify_gamma_inner(h).ok());
}

TEST_CASE("two-point extremal interpolant, generic branch") {
  for (int trial = 0; trial < 10; ++trial) {
    testutil::ExtremalData d = testutil::random_extremal();
    REQUIRE(d.ok);
    GammaInnerRep h = penta::ay_equality_interpolant(d.lambda0, d.s0, d.p0);
    GammaPoint at = penta::gamma_eval(h, d.lambda0);
    CAPTURE(trial);
    CHECK(std::abs(at.s - d.s0) < 1e-9);
    CHECK(std::abs(at.p - d.p0) < 1e-9);
    GammaPoint at0 = penta::gamma_eval(h, Complex(0.0));
    CHECK(std::abs(at0.s) < 1e-12);
    CHECK(std::abs(at0.p) < 1e-12);
    CHECK(penta::verify_gamma_inner(h).ok());
  }
}

TEST_CASE("interpolant rejects non-extremal data") {
  // F((0.1, 0.0)) is far from |lambda0| = 0.5.
  CHECK_THROWS_AS(
      penta::ay_equality_interpolant(Complex(0.5), Complex(0.1), Complex(0.0)),
      Error);
}

TEST_CASE("composition with a Blaschke product") {
  testutil::ExtremalData d = testutil::random_extremal();
  REQUIRE(d.ok);
  GammaInnerRep h = penta::ay_equality_interpolant(d.lambda0, d.s0, d.p0);
  BlaschkeProduct m(testutil::random_unimodular(),
                    {Complex(0.0), testutil::random_in_disc(0.6)});
  GammaInnerRep hm = penta::compose_with_blaschke(h, m);
  CHECK(hm.n == h.n * m.degree());
  // Symmetry of the composed trace numerator survives the phase fix.
  CHECK(penta::involution(hm.E, hm.n).approx_equal(hm.E, 1e-9));
  for (double t : {0.2, 0.55, 0.8}) {
    Complex z = std::polar(t, 3.0 * t);
    GammaPoint direct = penta::gamma_eval(h, m(z));
    GammaPoint composed = penta::gamma_eval(hm, z);
    CHECK(std::abs(direct.s - composed.s) < 1e-9);
    CHECK(std::abs(direct.p - composed.p) < 1e-9);
  }
}

TEST_CASE("reduced degree") {
  GammaInnerRep h;
  h.E = ComplexPoly::zero();
  h.D = ComplexPoly::one();
  h.n = 2;  // p = lambda^2
  CHECK(penta::reduced_degree(h) == 2);

  BlaschkeProduct b(Complex(1.0), {Complex(0.3, 0.2)});
  CHECK(penta::reduced_degree(royal_pair(b)) == 2);
}
