#include <doctest.h>

#include <cmath>

#include "penta/construct.hpp"
#include "penta/errors.hpp"
#include "test_util.hpp"

using penta::Complex;
using penta::ComplexPoly;
using penta::ConstructionData;
using penta::ConstructionResult;
using penta::Error;

TEST_CASE("worked example in closed form") {
  ConstructionData data;
  data.etas = {Complex(1.0)};
  data.sigmas = {Complex(0.0)};
  ConstructionResult res = penta::build(data);
  double r = 3.0 + 2.0 * std::sqrt(2.0);
  CHECK(res.x.D.approx_equal(
      ComplexPoly({Complex(r / (r - 1.0)), Complex(-1.0 / (r - 1.0))}), 1e-9));
  CHECK(res.x.A.approx_equal(ComplexPoly::one(), 1e-9));
  CHECK(res.R.approx_equal(ComplexPoly({Complex(0.0), Complex(4.0)}), 1e-9));
  CHECK(res.x.n == 1);
  CHECK(res.report.ok());
  CHECK(penta::roundtrip_check(data, res).ok());

  // s vanishes at the prescribed circle zero.
  penta::PentaPoint at1 = penta::penta_eval(res.x, Complex(1.0));
  CHECK(std::abs(at1.s) < 1e-9);
  CHECK(std::abs(std::abs(at1.a) - 1.0) < 1e-9);
}

TEST_CASE("double royal node with a prescribed a zero") {
  ConstructionData data;
  data.alphas = {Complex(0.0)};
  data.sigmas = {Complex(0.0), Complex(0.0)};
  data.betas = {Complex(0.0)};
  data.t_plus = 1.0;
  data.t = 0.25;
  ConstructionResult res = penta::build(data);
  CHECK(res.report.ok());
  CHECK(penta::roundtrip_check(data, res).ok());
  CHECK(std::abs(penta::penta_eval(res.x, Complex(0.0)).a) < 1e-12);
  penta::DegreePair d = penta::degree(res.x);
  CHECK(d.deg_a <= 3);
  CHECK(d.deg_p <= 2);
}

TEST_CASE("degree constraint violations are rejected") {
  ConstructionData data;
  data.alphas = {Complex(0.3)};
  data.sigmas = {Complex(0.1)};  // 2*1 + 0 != 1
  CHECK_THROWS_AS(penta::build(data), Error);
}

TEST_CASE("royal node colliding with a circle trace zero is rejected") {
  ConstructionData data;
  data.etas = {Complex(1.0)};
  data.sigmas = {Complex(1.0)};
  CHECK_THROWS_AS(penta::build(data), Error);
}

TEST_CASE("scale parameters are validated") {
  ConstructionData data;
  data.etas = {Complex(1.0)};
  data.sigmas = {Complex(0.0)};
  data.t_plus = -1.0;
  CHECK_THROWS_AS(penta::build(data), Error);
  data.t_plus = 4.0;
  data.t = 0.0;
  CHECK_THROWS_AS(penta::build(data), Error);
  data.t = 1.0;
  data.c = Complex(0.5);
  CHECK_THROWS_AS(penta::build(data), Error);
}

TEST_CASE("random data round trips") {
  for (int trial = 0; trial < 15; ++trial) {
    ConstructionData data = testutil::random_construction(4, 3);
    CAPTURE(trial);
    ConstructionResult res = penta::build(data);
    CHECK(res.report.ok());
    CHECK(penta::roundtrip_check(data, res).ok());
    penta::DegreePair d = penta::degree(res.x);
    int m = static_cast<int>(data.betas.size());
    int n = static_cast<int>(data.sigmas.size());
    CHECK(d.deg_a <= m + n);
    CHECK(d.deg_p <= n);
  }
}

TEST_CASE("perturbed trace numerator is detected by the roundtrip") {
  ConstructionData data;
  data.etas = {Complex(1.0)};
  data.sigmas = {Complex(0.0)};
  ConstructionResult res = penta::build(data);
  res.x.E = res.x.E * Complex(1.001);
  penta::Report rep = penta::verify_penta_inner(res.x);
  CHECK_FALSE(rep.ok());
}
