#include "penta/construct.hpp"

#include <algorithm>
#include <cmath>

#include "penta/errors.hpp"
#include "penta/specfact.hpp"

namespace penta {

namespace {

// Greedy multiset matching; returns the largest matched distance or a
// negative sentinel on size mismatch.
double multiset_distance(std::vector<Complex> a, std::vector<Complex> b) {
  if (a.size() != b.size()) return -1.0;
  double worst = 0.0;
  std::vector<bool> used(b.size(), false);
  for (const auto& x : a) {
    double best = 1e300;
    size_t bj = b.size();
    for (size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      double d = std::abs(x - b[j]);
      if (d < best) {
        best = d;
        bj = j;
      }
    }
    used[bj] = true;
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace

ConstructionResult build(const ConstructionData& data) {
  size_t n = data.sigmas.size();
  if (2 * data.alphas.size() + data.etas.size() != n)
    fail(ErrorCode::Data, "degree budget mismatch in construction data");
  if (!(data.t_plus > 0.0))
    fail(ErrorCode::Data, "royal scale must be positive");
  if (data.t == 0.0) fail(ErrorCode::Data, "trace scale must be nonzero");
  if (std::abs(std::abs(data.c) - 1.0) > 1e-9)
    fail(ErrorCode::Data, "phase constant must be unimodular");
  for (const auto& a : data.alphas)
    if (std::abs(a) >= 1.0)
      fail(ErrorCode::Data, "disc zero of the trace outside the open disc");
  for (const auto& b : data.betas)
    if (std::abs(b) >= 1.0)
      fail(ErrorCode::Data, "Blaschke zero outside the open disc");
  for (const auto& e : data.etas)
    if (std::abs(std::abs(e) - 1.0) > 1e-6)
      fail(ErrorCode::Data, "circle zero of the trace is off the circle");

  std::vector<Complex> sigmas = data.sigmas;
  for (auto& s : sigmas) {
    double m = std::abs(s);
    if (m > 1.0 + 1e-6)
      fail(ErrorCode::Data, "royal node outside the closed disc");
    if (std::abs(m - 1.0) < 1e-6) s /= m;  // snap to the circle
  }
  for (const auto& s : sigmas)
    for (const auto& e : data.etas)
      if (std::abs(s - e / std::abs(e)) < 1e-8)
        fail(ErrorCode::Data, "royal node collides with a circle trace zero");

  ComplexPoly R = ComplexPoly::constant(Complex(data.t_plus));
  for (const auto& s : sigmas)
    R = R * ComplexPoly({-s, Complex(1.0)}) *
        ComplexPoly({Complex(1.0), -std::conj(s)});

  ComplexPoly E = ComplexPoly::constant(Complex(data.t));
  for (const auto& a : data.alphas)
    E = E * ComplexPoly({-a, Complex(1.0)}) *
        ComplexPoly({Complex(1.0), -std::conj(a)});
  for (const auto& e : data.etas) {
    Complex eta = e / std::abs(e);
    double th = std::arg(eta);
    if (th < 0.0) th += 2.0 * M_PI;
    Complex factor = Complex(0.0, 1.0) * std::exp(Complex(0.0, -th / 2.0));
    E = E * ComplexPoly({-eta, Complex(1.0)}) * factor;
  }

  TrigPoly g = TrigPoly::from_poly_shifted(R, -static_cast<int>(n));
  TrigPoly quarter_g = g * 0.25;
  TrigPoly d_profile = (g + TrigPoly::modulus_squared(E)) * 0.25;

  ComplexPoly D = fejer_riesz(d_profile).D;
  ComplexPoly A = fejer_riesz(quarter_g).D;

  PentaInnerRep x{BlaschkeProduct(data.c, data.betas), A, E, D,
                  static_cast<int>(n), false};

  Report report = verify_penta_inner(x);
  ComplexPoly royal = royal_polynomial(x.gamma());
  double rscale = std::max(1.0, R.max_coeff_abs());
  double rdev = 0.0;
  int dmax = std::max(royal.degree(), R.degree());
  for (int i = 0; i <= dmax; ++i)
    rdev = std::max(rdev, std::abs(royal.coeff(i) - R.coeff(i)));
  report.add("royal_polynomial_match", rdev <= 1e-8 * rscale, -rdev / rscale);
  if (!report.ok())
    fail(ErrorCode::Numeric,
         "constructed map failed verification: " + report.worst()->name);

  return ConstructionResult{x, R, report};
}

Report roundtrip_check(const ConstructionData& data,
                       const ConstructionResult& result) {
  Report rep;
  const double tol = 1e-6;

  // Zeros of the trace coordinate inside the closed disc.
  std::vector<Complex> szeros;
  if (!result.x.E.is_zero() && result.x.E.degree() >= 1) {
    for (Complex r : roots(result.x.E)) {
      double m = std::abs(r);
      if (std::abs(m - 1.0) < tol)
        szeros.push_back(r / m);
      else if (m < 1.0)
        szeros.push_back(r);
    }
  }
  std::vector<Complex> want = data.alphas;
  for (const auto& e : data.etas) want.push_back(e / std::abs(e));
  double ds = multiset_distance(szeros, want);
  rep.add("trace_zeros", ds >= 0.0 && ds <= tol, ds < 0.0 ? -1.0 : -ds);

  // Royal nodes with multiplicity.
  std::vector<Complex> nodes;
  for (const auto& [r, mult] : royal_nodes(result.x.gamma()))
    for (int i = 0; i < mult; ++i) nodes.push_back(r);
  std::vector<Complex> sig = data.sigmas;
  for (auto& s : sig) {
    double m = std::abs(s);
    if (std::abs(m - 1.0) < tol) s /= m;
  }
  double dn = multiset_distance(nodes, sig);
  rep.add("royal_nodes", dn >= 0.0 && dn <= tol, dn < 0.0 ? -1.0 : -dn);

  // Zeros of the first coordinate.
  double db = multiset_distance(result.x.a_in.zeros(), data.betas);
  rep.add("a_zeros", db >= 0.0 && db <= tol, db < 0.0 ? -1.0 : -db);
  rep.add("A_outer", is_outer(result.x.A), is_outer(result.x.A) ? 1.0 : -1.0);
  return rep;
}

}  // namespace penta
