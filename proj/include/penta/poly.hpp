#pragma once

#include <complex>
#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

namespace penta {

using Complex = std::complex<double>;

// Dense univariate polynomial over C, coefficients in ascending powers.
// Canonical form: trailing coefficients below 1e-12 relative to the largest
// coefficient modulus are trimmed. The zero polynomial has an empty
// coefficient list and degree -1.
class ComplexPoly {
 public:
  ComplexPoly() = default;
  ComplexPoly(std::initializer_list<Complex> coeffs);
  explicit ComplexPoly(std::vector<Complex> coeffs);

  static ComplexPoly zero() { return ComplexPoly(); }
  static ComplexPoly one() { return ComplexPoly({Complex(1.0)}); }
  static ComplexPoly constant(Complex c) { return ComplexPoly({c}); }
  static ComplexPoly monomial(int k, Complex c = Complex(1.0));

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Complex>& coeffs() const { return c_; }
  Complex coeff(int i) const;  // zero beyond the degree

  Complex operator()(Complex z) const;  // Horner evaluation

  ComplexPoly operator+(const ComplexPoly& o) const;
  ComplexPoly operator-(const ComplexPoly& o) const;
  ComplexPoly operator*(const ComplexPoly& o) const;
  ComplexPoly operator*(Complex s) const;
  ComplexPoly operator-() const { return *this * Complex(-1.0); }

  ComplexPoly derivative() const;
  double max_coeff_abs() const;
  bool approx_equal(const ComplexPoly& o, double tol) const;

 private:
  void trim();
  std::vector<Complex> c_;
};

// Coefficient reversal with conjugation at order n:
//   involution(g, n)(x) = x^n * conj(g(1/conj(x))).
// Requires n >= deg g.
ComplexPoly involution(const ComplexPoly& g, int n);

// All roots with multiplicity, sorted by (modulus, argument).
// Simultaneous Aberth iteration with deterministic initial guesses.
std::vector<Complex> roots(const ComplexPoly& p);

// Roots merged into clusters: pairs (representative, multiplicity),
// sorted by (modulus, argument) of the representative.
std::vector<std::pair<Complex, int>> clustered_roots(const ComplexPoly& p,
                                                     double tol = 1e-7);

// True iff every root has modulus >= 1 - tol (no zeros in the open disc).
bool is_outer(const ComplexPoly& p, double tol = 1e-7);

// Polynomial numerator of g(num/den) * den^k for k >= deg g:
//   sum_i g_i * num^i * den^(k-i).
ComplexPoly compose_rational(const ComplexPoly& g, int k,
                             const ComplexPoly& num, const ComplexPoly& den);

ComplexPoly pow(const ComplexPoly& p, int k);

// Finite Blaschke product c * prod (x - z_i)/(1 - conj(z_i) x) with |c| = 1
// and all zeros in the open unit disc.
class BlaschkeProduct {
 public:
  BlaschkeProduct();  // identity-like constant 1 with no zeros
  BlaschkeProduct(Complex c, std::vector<Complex> zeros);

  Complex c() const { return c_; }
  const std::vector<Complex>& zeros() const { return zeros_; }
  int degree() const { return static_cast<int>(zeros_.size()); }

  Complex operator()(Complex z) const;
  ComplexPoly numerator() const;    // c * prod (x - z_i)
  ComplexPoly denominator() const;  // prod (1 - conj(z_i) x)

 private:
  Complex c_;
  std::vector<Complex> zeros_;
};

// Hermitian trigonometric polynomial f(x) = sum_{|k| <= n} c_k x^k on the
// circle, with c_{-k} = conj(c_k) so that f is real-valued there.
class TrigPoly {
 public:
  TrigPoly() = default;

  static TrigPoly modulus_squared(const ComplexPoly& p);  // |p|^2 on the circle
  // Laurent shift of an ordinary polynomial: the result is p(x) * x^shift.
  static TrigPoly from_poly_shifted(const ComplexPoly& p, int shift);

  void set(int k, Complex v);
  Complex coeff(int k) const;
  int order() const;  // largest |k| with a stored coefficient
  bool empty() const { return c_.empty(); }
  const std::map<int, Complex>& coeffs() const { return c_; }

  Complex eval(Complex z_on_circle) const;   // Laurent evaluation
  double eval_real(Complex z_on_circle) const;

  TrigPoly operator+(const TrigPoly& o) const;
  TrigPoly operator*(double s) const;

  double max_coeff_abs() const;
  bool is_hermitian(double tol) const;
  void prune(double tol_rel = 1e-14);

 private:
  std::map<int, Complex> c_;
};

}  // namespace penta
