#include "penta/specfact.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "penta/errors.hpp"

namespace penta {

namespace {

// Roots of multiplicity two on the circle are located to roughly the square
// root of coefficient accuracy, so the snap and pairing windows must sit
// comfortably above 1e-8; the reported residual still certifies the result.
constexpr double kPairTol = 1e-5;    // |r * conj(r') - 1| pairing metric
constexpr double kCircleSnap = 1e-5; // | |r| - 1 | snap-to-circle window
constexpr int kSamples = 1024;

Complex unit(double theta) { return Complex(std::cos(theta), std::sin(theta)); }

}  // namespace

FejerRieszResult fejer_riesz(const TrigPoly& f_in) {
  TrigPoly f = f_in;
  f.prune();
  FejerRieszResult res;

  double scale = f.max_coeff_abs();
  if (scale == 0.0) {
    res.D = ComplexPoly::zero();
    res.degenerate_zero = true;
    return res;
  }
  if (!f.is_hermitian(1e-9 * scale))
    fail(ErrorCode::Data, "trig polynomial is not hermitian");

  double fmin = 0.0, fmax = 0.0;
  Complex argmax = Complex(1.0);
  bool first = true;
  for (int i = 0; i < kSamples; ++i) {
    Complex z = unit(2.0 * M_PI * i / kSamples);
    double v = f.eval_real(z);
    if (first || v < fmin) fmin = v;
    if (first || v > fmax) {
      fmax = v;
      argmax = z;
    }
    first = false;
  }
  if (fmin < -1e-9 * scale)
    fail(ErrorCode::NotNonnegative,
         "trig polynomial is negative on the circle");

  // q(x) = x^n f(x) with n the effective order, so q(0) != 0.
  int n = f.order();
  std::vector<Complex> qc(static_cast<size_t>(2 * n) + 1, Complex(0.0));
  for (int k = -n; k <= n; ++k) qc[static_cast<size_t>(k + n)] = f.coeff(k);
  ComplexPoly q{std::move(qc)};

  std::vector<Complex> rts = roots(q);

  // Snap near-circle roots onto the circle, then split the root set.
  std::vector<Complex> circle, inside, outside;
  for (Complex r : rts) {
    double m = std::abs(r);
    if (std::abs(m - 1.0) < kCircleSnap)
      circle.push_back(r / m);
    else if (m < 1.0)
      inside.push_back(r);
    else
      outside.push_back(r);
  }

  std::vector<Complex> selected;  // roots of D, all with modulus >= 1

  // Circle roots come in clusters of even size; D takes half of each.
  std::vector<bool> cused(circle.size(), false);
  for (size_t i = 0; i < circle.size(); ++i) {
    if (cused[i]) continue;
    std::vector<Complex> cluster{circle[i]};
    cused[i] = true;
    bool grew = true;
    while (grew) {
      grew = false;
      Complex mean(0.0);
      for (Complex z : cluster) mean += z;
      mean /= static_cast<double>(cluster.size());
      for (size_t j = i + 1; j < circle.size(); ++j) {
        if (cused[j]) continue;
        if (std::abs(circle[j] - mean) <= kPairTol) {
          cluster.push_back(circle[j]);
          cused[j] = true;
          grew = true;
        }
      }
    }
    if (cluster.size() % 2 != 0)
      fail(ErrorCode::PairingFailure,
           "odd multiplicity of a circle root in the spectral factor");
    Complex mean(0.0);
    for (Complex z : cluster) mean += z;
    mean /= static_cast<double>(cluster.size());
    mean /= std::abs(mean);
    for (size_t k = 0; k < cluster.size() / 2; ++k) selected.push_back(mean);
  }

  if (inside.size() != outside.size())
    fail(ErrorCode::PairingFailure,
         "unbalanced root count across the circle");

  // Each interior root r pairs with an exterior partner near 1/conj(r).
  std::vector<bool> oused(outside.size(), false);
  for (Complex r : inside) {
    double best = 1e300;
    size_t bj = outside.size();
    for (size_t j = 0; j < outside.size(); ++j) {
      if (oused[j]) continue;
      double d = std::abs(r * std::conj(outside[j]) - Complex(1.0));
      if (d < best) {
        best = d;
        bj = j;
      }
    }
    if (bj == outside.size() || best > kPairTol)
      fail(ErrorCode::PairingFailure, "root pairing across the circle failed");
    oused[bj] = true;
    selected.push_back(outside[bj]);
  }

  ComplexPoly D0 = ComplexPoly::one();
  for (Complex r : selected) D0 = D0 * ComplexPoly({-r, Complex(1.0)});

  double d0 = std::abs(D0(argmax));
  if (d0 <= 0.0)
    fail(ErrorCode::PairingFailure, "spectral factor vanished at the scale point");
  double gamma = std::sqrt(std::max(0.0, f.eval_real(argmax))) / d0;
  ComplexPoly D = D0 * Complex(gamma);

  Complex at0 = D(Complex(0.0));
  if (std::abs(at0) > 0.0) D = D * (std::conj(at0) / std::abs(at0));

  double resid = 0.0;
  for (int i = 0; i < kSamples; ++i) {
    Complex z = unit(2.0 * M_PI * i / kSamples);
    double dv = std::norm(D(z));
    resid = std::max(resid, std::abs(dv - f.eval_real(z)));
  }

  res.D = D;
  res.residual = resid;
  return res;
}

}  // namespace penta
