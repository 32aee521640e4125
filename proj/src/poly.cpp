#include "penta/poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "penta/errors.hpp"

namespace penta {

namespace {
constexpr double kTrimRel = 1e-12;
constexpr double kAberthStep = 1e-13;
constexpr int kAberthMaxIter = 500;
}  // namespace

ComplexPoly::ComplexPoly(std::initializer_list<Complex> coeffs)
    : c_(coeffs) {
  trim();
}

ComplexPoly::ComplexPoly(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {
  trim();
}

ComplexPoly ComplexPoly::monomial(int k, Complex c) {
  if (k < 0) fail(ErrorCode::Degree, "monomial exponent must be nonnegative");
  std::vector<Complex> v(static_cast<size_t>(k) + 1, Complex(0.0));
  v.back() = c;
  return ComplexPoly(std::move(v));
}

void ComplexPoly::trim() {
  double m = 0.0;
  for (const auto& a : c_) m = std::max(m, std::abs(a));
  if (m == 0.0) {
    c_.clear();
    return;
  }
  while (!c_.empty() && std::abs(c_.back()) <= kTrimRel * m) c_.pop_back();
}

Complex ComplexPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Complex(0.0);
  return c_[static_cast<size_t>(i)];
}

Complex ComplexPoly::operator()(Complex z) const {
  Complex acc(0.0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

ComplexPoly ComplexPoly::operator+(const ComplexPoly& o) const {
  std::vector<Complex> v(std::max(c_.size(), o.c_.size()), Complex(0.0));
  for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return ComplexPoly(std::move(v));
}

ComplexPoly ComplexPoly::operator-(const ComplexPoly& o) const {
  return *this + (o * Complex(-1.0));
}

ComplexPoly ComplexPoly::operator*(const ComplexPoly& o) const {
  if (is_zero() || o.is_zero()) return ComplexPoly();
  std::vector<Complex> v(c_.size() + o.c_.size() - 1, Complex(0.0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return ComplexPoly(std::move(v));
}

ComplexPoly ComplexPoly::operator*(Complex s) const {
  std::vector<Complex> v(c_);
  for (auto& a : v) a *= s;
  return ComplexPoly(std::move(v));
}

ComplexPoly ComplexPoly::derivative() const {
  if (c_.size() <= 1) return ComplexPoly();
  std::vector<Complex> v(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i)
    v[i - 1] = c_[i] * static_cast<double>(i);
  return ComplexPoly(std::move(v));
}

double ComplexPoly::max_coeff_abs() const {
  double m = 0.0;
  for (const auto& a : c_) m = std::max(m, std::abs(a));
  return m;
}

bool ComplexPoly::approx_equal(const ComplexPoly& o, double tol) const {
  int d = std::max(degree(), o.degree());
  for (int i = 0; i <= d; ++i)
    if (std::abs(coeff(i) - o.coeff(i)) > tol) return false;
  return true;
}

ComplexPoly involution(const ComplexPoly& g, int n) {
  if (n < g.degree())
    fail(ErrorCode::Degree, "involution order below polynomial degree");
  std::vector<Complex> v(static_cast<size_t>(n) + 1, Complex(0.0));
  for (int j = 0; j <= n; ++j) v[static_cast<size_t>(j)] = std::conj(g.coeff(n - j));
  return ComplexPoly(std::move(v));
}

std::vector<Complex> roots(const ComplexPoly& p) {
  if (p.is_zero())
    fail(ErrorCode::ZeroPolynomial, "roots of the zero polynomial");
  std::vector<Complex> c = p.coeffs();

  // Exact factors of x first: tiny constant terms relative to the largest
  // coefficient are treated as roots at the origin.
  double scale = p.max_coeff_abs();
  std::vector<Complex> out;
  size_t lo = 0;
  while (lo + 1 < c.size() && std::abs(c[lo]) <= 1e-14 * scale) {
    out.push_back(Complex(0.0));
    ++lo;
  }
  size_t n = c.size() - 1 - lo;
  if (n == 0) {
    std::sort(out.begin(), out.end(), [](Complex a, Complex b) {
      double ma = std::abs(a), mb = std::abs(b);
      if (ma != mb) return ma < mb;
      return std::arg(a) < std::arg(b);
    });
    return out;
  }

  // Monic normalization of the deflated part.
  std::vector<Complex> a(n + 1);
  for (size_t i = 0; i <= n; ++i) a[i] = c[lo + i] / c.back();

  double cauchy = 0.0;
  for (size_t i = 0; i < n; ++i) cauchy = std::max(cauchy, std::abs(a[i]));
  double r0 = 1.0 + cauchy;

  std::vector<Complex> z(n);
  for (size_t j = 0; j < n; ++j) {
    double th = 2.0 * M_PI * (static_cast<double>(j) + 0.25) /
                    static_cast<double>(n) +
                0.4;
    z[j] = 0.8 * r0 * Complex(std::cos(th), std::sin(th));
  }

  auto horner = [&](Complex x, Complex& val, Complex& der) {
    val = Complex(0.0);
    der = Complex(0.0);
    for (size_t i = n + 1; i-- > 0;) {
      der = der * x + val;
      val = val * x + a[i];
    }
  };

  for (int iter = 0; iter < kAberthMaxIter; ++iter) {
    double worst = 0.0;
    for (size_t j = 0; j < n; ++j) {
      Complex val, der;
      horner(z[j], val, der);
      Complex w = (der != Complex(0.0)) ? val / der : val;
      Complex s(0.0);
      for (size_t k = 0; k < n; ++k) {
        if (k == j) continue;
        Complex d = z[j] - z[k];
        if (std::abs(d) < 1e-300) d = Complex(1e-300);
        s += Complex(1.0) / d;
      }
      Complex denom = Complex(1.0) - w * s;
      Complex step = (std::abs(denom) > 1e-300) ? w / denom : w;
      z[j] -= step;
      worst = std::max(worst, std::abs(step) / (1.0 + std::abs(z[j])));
    }
    if (worst <= kAberthStep) break;
  }

  out.insert(out.end(), z.begin(), z.end());
  std::sort(out.begin(), out.end(), [](Complex a_, Complex b_) {
    double ma = std::abs(a_), mb = std::abs(b_);
    if (ma != mb) return ma < mb;
    return std::arg(a_) < std::arg(b_);
  });
  return out;
}

std::vector<std::pair<Complex, int>> clustered_roots(const ComplexPoly& p,
                                                     double tol) {
  std::vector<Complex> r = roots(p);
  std::vector<std::pair<Complex, int>> out;
  std::vector<bool> used(r.size(), false);
  for (size_t i = 0; i < r.size(); ++i) {
    if (used[i]) continue;
    Complex sum = r[i];
    int count = 1;
    used[i] = true;
    bool grew = true;
    while (grew) {
      grew = false;
      Complex mean = sum / static_cast<double>(count);
      for (size_t j = i + 1; j < r.size(); ++j) {
        if (used[j]) continue;
        if (std::abs(r[j] - mean) <= tol) {
          sum += r[j];
          ++count;
          used[j] = true;
          grew = true;
        }
      }
    }
    out.emplace_back(sum / static_cast<double>(count), count);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    double ma = std::abs(a.first), mb = std::abs(b.first);
    if (ma != mb) return ma < mb;
    return std::arg(a.first) < std::arg(b.first);
  });
  return out;
}

bool is_outer(const ComplexPoly& p, double tol) {
  if (p.is_zero()) return false;
  if (p.degree() == 0) return true;
  for (const auto& r : roots(p))
    if (std::abs(r) < 1.0 - tol) return false;
  return true;
}

ComplexPoly compose_rational(const ComplexPoly& g, int k,
                             const ComplexPoly& num, const ComplexPoly& den) {
  if (k < g.degree())
    fail(ErrorCode::Degree, "composition order below polynomial degree");
  ComplexPoly acc;
  for (int i = 0; i <= g.degree(); ++i) {
    ComplexPoly term = ComplexPoly::constant(g.coeff(i)) * pow(num, i) *
                       pow(den, k - i);
    acc = acc + term;
  }
  if (g.is_zero()) return ComplexPoly();
  return acc;
}

ComplexPoly pow(const ComplexPoly& p, int k) {
  if (k < 0) fail(ErrorCode::Degree, "negative polynomial power");
  ComplexPoly acc = ComplexPoly::one();
  for (int i = 0; i < k; ++i) acc = acc * p;
  return acc;
}

BlaschkeProduct::BlaschkeProduct() : c_(1.0) {}

BlaschkeProduct::BlaschkeProduct(Complex c, std::vector<Complex> zeros)
    : c_(c), zeros_(std::move(zeros)) {
  if (std::abs(std::abs(c_) - 1.0) > 1e-9)
    fail(ErrorCode::Data, "Blaschke constant must be unimodular");
  for (const auto& z : zeros_)
    if (std::abs(z) >= 1.0)
      fail(ErrorCode::Data, "Blaschke zero outside the open disc");
}

Complex BlaschkeProduct::operator()(Complex z) const {
  Complex acc = c_;
  for (const auto& w : zeros_) {
    Complex den = Complex(1.0) - std::conj(w) * z;
    if (std::abs(den) < 1e-300)
      fail(ErrorCode::Singular, "Blaschke evaluation at a pole");
    acc *= (z - w) / den;
  }
  return acc;
}

ComplexPoly BlaschkeProduct::numerator() const {
  ComplexPoly p = ComplexPoly::constant(c_);
  for (const auto& w : zeros_) p = p * ComplexPoly({-w, Complex(1.0)});
  return p;
}

ComplexPoly BlaschkeProduct::denominator() const {
  ComplexPoly p = ComplexPoly::one();
  for (const auto& w : zeros_)
    p = p * ComplexPoly({Complex(1.0), -std::conj(w)});
  return p;
}

TrigPoly TrigPoly::modulus_squared(const ComplexPoly& p) {
  TrigPoly f;
  int d = p.degree();
  for (int k = -d; k <= d; ++k) {
    Complex s(0.0);
    for (int j = 0; j <= d; ++j) s += p.coeff(j + k) * std::conj(p.coeff(j));
    f.set(k, s);
  }
  f.prune();
  return f;
}

TrigPoly TrigPoly::from_poly_shifted(const ComplexPoly& p, int shift) {
  TrigPoly f;
  for (int i = 0; i <= p.degree(); ++i) f.set(i + shift, p.coeff(i));
  f.prune();
  return f;
}

void TrigPoly::set(int k, Complex v) {
  if (v == Complex(0.0))
    c_.erase(k);
  else
    c_[k] = v;
}

Complex TrigPoly::coeff(int k) const {
  auto it = c_.find(k);
  return it == c_.end() ? Complex(0.0) : it->second;
}

int TrigPoly::order() const {
  int n = 0;
  for (const auto& [k, v] : c_) n = std::max(n, std::abs(k));
  return n;
}

Complex TrigPoly::eval(Complex z) const {
  Complex acc(0.0);
  for (const auto& [k, v] : c_) acc += v * std::pow(z, k);
  return acc;
}

double TrigPoly::eval_real(Complex z) const { return eval(z).real(); }

TrigPoly TrigPoly::operator+(const TrigPoly& o) const {
  TrigPoly f = *this;
  for (const auto& [k, v] : o.c_) f.set(k, f.coeff(k) + v);
  f.prune();
  return f;
}

TrigPoly TrigPoly::operator*(double s) const {
  TrigPoly f = *this;
  for (auto& [k, v] : f.c_) v *= s;
  return f;
}

double TrigPoly::max_coeff_abs() const {
  double m = 0.0;
  for (const auto& [k, v] : c_) m = std::max(m, std::abs(v));
  return m;
}

bool TrigPoly::is_hermitian(double tol) const {
  for (const auto& [k, v] : c_)
    if (std::abs(v - std::conj(coeff(-k))) > tol) return false;
  return true;
}

void TrigPoly::prune(double tol_rel) {
  double m = max_coeff_abs();
  for (auto it = c_.begin(); it != c_.end();) {
    if (std::abs(it->second) <= tol_rel * m)
      it = c_.erase(it);
    else
      ++it;
  }
}

}  // namespace penta
