#include "penta/domains.hpp"

#include <algorithm>
#include <cmath>

#include "penta/errors.hpp"

namespace penta {

namespace {

// Golden-section maximization of f on [lo, hi].
template <typename F>
double golden_max(F f, double lo, double hi, int steps) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - g * (b - a), x2 = a + g * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < steps; ++i) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + g * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - g * (b - a);
      f1 = f(x1);
    }
  }
  return (a + b) / 2.0;
}

}  // namespace

double operator_norm(const Matrix2& m) {
  double fro = std::norm(m.a11) + std::norm(m.a12) + std::norm(m.a21) +
               std::norm(m.a22);
  Complex det = m.a11 * m.a22 - m.a12 * m.a21;
  double disc = std::max(0.0, fro * fro - 4.0 * std::norm(det));
  return std::sqrt((fro + std::sqrt(disc)) / 2.0);
}

PentaPoint pi_map(const Matrix2& m) {
  return PentaPoint{m.a21, m.a11 + m.a22, m.a11 * m.a22 - m.a12 * m.a21};
}

Complex beta_coefficient(Complex s, Complex p) {
  MembershipVerdict v = in_gamma(s, p, Mode::Closed, 1e-7);
  if (!v.inside)
    fail(ErrorCode::Domain, "beta coefficient outside the symmetrized bidisc");
  double den = 1.0 - std::norm(p);
  if (den > 1e-9) return (s - std::conj(s) * p) / den;
  return s / 2.0;
}

Complex psi(Complex z, const PentaPoint& x) {
  Complex den = Complex(1.0) - x.s * z + x.p * z * z;
  if (std::abs(den) < 1e-300)
    fail(ErrorCode::Singular, "psi denominator vanished");
  return x.a * (1.0 - std::norm(z)) / den;
}

MembershipVerdict in_gamma(Complex s, Complex p, Mode mode, double tol) {
  MembershipVerdict v;
  if (mode == Mode::Boundary) {
    double m1 = 2.0 - std::abs(s);
    double m2 = -std::abs(std::abs(p) - 1.0);
    double m3 = -std::abs(s - std::conj(s) * p);
    v.margin = std::min({m1, m2, m3});
    v.binding = (v.margin == m1)   ? "s_bound"
                : (v.margin == m2) ? "p_modulus"
                                   : "s_symmetry";
    v.inside = v.margin >= -tol;
    return v;
  }
  double m1 = 2.0 - std::abs(s);
  double m2 = (1.0 - std::norm(p)) - std::abs(s - std::conj(s) * p);
  v.margin = std::min(m1, m2);
  v.binding = (v.margin == m1) ? "s_bound" : "ay_bound";
  v.inside = (mode == Mode::Open) ? v.margin > tol : v.margin >= -tol;
  return v;
}

MembershipVerdict in_penta(const PentaPoint& x, Mode mode, PentaCriterion crit,
                           double tol) {
  if (mode == Mode::Boundary) return in_bpenta(x, tol);
  MembershipVerdict g = in_gamma(x.s, x.p, mode, tol);
  if (!g.inside) {
    g.binding = "gamma_" + g.binding;
    return g;
  }
  double ma;
  std::string name;
  if (crit == PentaCriterion::Beta) {
    Complex b = beta_coefficient(x.s, x.p);
    double root = std::sqrt(std::max(0.0, 1.0 - std::norm(b)));
    Complex bound = Complex(1.0) - 0.5 * x.s * std::conj(b) / (1.0 + root);
    ma = std::abs(bound) - std::abs(x.a);
    name = "a_bound";
  } else {
    ma = 1.0 - sup_psi(x);
    name = "psi_sup";
  }
  MembershipVerdict v;
  v.margin = std::min(g.margin, ma);
  v.binding = (v.margin == ma) ? name : ("gamma_" + g.binding);
  v.inside = (mode == Mode::Open) ? v.margin > tol : v.margin >= -tol;
  return v;
}

MembershipVerdict in_bpenta(const PentaPoint& x, double tol) {
  double m1 = 2.0 - std::abs(x.s);
  double m2 = -std::abs(std::abs(x.p) - 1.0);
  double m3 = -std::abs(x.s - std::conj(x.s) * x.p);
  // Compare squared moduli: near |s| = 2 the square root would amplify
  // coefficient-level noise to its square root.
  double ss = std::min(std::abs(x.s), 2.0);
  double m4 = -std::abs(std::norm(x.a) - (1.0 - ss * ss / 4.0));
  MembershipVerdict v;
  v.margin = std::min({m1, m2, m3, m4});
  v.binding = (v.margin == m1)   ? "s_bound"
              : (v.margin == m2) ? "p_modulus"
              : (v.margin == m3) ? "s_symmetry"
                                 : "a_modulus";
  v.inside = v.margin >= -tol;
  return v;
}

MembershipVerdict on_royal(const GammaPoint& y, double tol) {
  MembershipVerdict v;
  v.margin = -std::abs(y.s * y.s - 4.0 * y.p);
  v.binding = "royal_equation";
  v.inside = v.margin >= -tol;
  return v;
}

MembershipVerdict on_royal(const PentaPoint& x, double tol) {
  double m1 = -std::abs(x.a);
  double m2 = -std::abs(x.s * x.s - 4.0 * x.p);
  MembershipVerdict v;
  v.margin = std::min(m1, m2);
  v.binding = (v.margin == m1) ? "a_zero" : "royal_equation";
  v.inside = v.margin >= -tol;
  return v;
}

Complex phi_omega(Complex w, Complex s, Complex p) {
  Complex den = Complex(2.0) - w * s;
  if (std::abs(den) < 1e-12)
    fail(ErrorCode::Singular, "phi denominator vanished");
  return (2.0 * w * p - s) / den;
}

Automorphism Automorphism::inverse() const {
  Automorphism r;
  r.w = std::conj(w);
  r.eta = std::conj(eta);
  r.alpha = -eta * alpha;
  return r;
}

PentaPoint automorphism_apply(const Automorphism& f, const PentaPoint& x) {
  MembershipVerdict g = in_gamma(x.s, x.p, Mode::Closed, 1e-7);
  if (!g.inside)
    fail(ErrorCode::Domain,
         "automorphism applied outside the closed symmetrized bidisc");
  Complex ca = std::conj(f.alpha);
  Complex den = Complex(1.0) - ca * x.s + ca * ca * x.p;
  if (std::abs(den) < 1e-300)
    fail(ErrorCode::Singular, "automorphism denominator vanished");

  Complex disc = x.s * x.s - 4.0 * x.p;
  Complex z, w;
  if (std::abs(disc) < 1e-14) {
    z = w = x.s / 2.0;
  } else {
    Complex sq = std::sqrt(disc);
    z = (x.s + sq) / 2.0;
    w = (x.s - sq) / 2.0;
  }
  auto mob = [&](Complex t) {
    return f.eta * (t - f.alpha) / (Complex(1.0) - ca * t);
  };
  Complex vz = mob(z), vw = mob(w);

  PentaPoint y;
  y.a = f.w * f.eta * (1.0 - std::norm(f.alpha)) * x.a / den;
  y.s = vz + vw;
  y.p = vz * vw;
  return y;
}

Automorphism compose(const Automorphism& f, const Automorphism& g) {
  // Mobius matrix of eta * (z - alpha) / (1 - conj(alpha) z).
  auto mat = [](const Automorphism& h, Complex m[4]) {
    m[0] = h.eta;
    m[1] = -h.eta * h.alpha;
    m[2] = -std::conj(h.alpha);
    m[3] = Complex(1.0);
  };
  Complex a[4], b[4];
  mat(f, a);
  mat(g, b);
  Complex A = a[0] * b[0] + a[1] * b[2];
  Complex B = a[0] * b[1] + a[1] * b[3];
  Complex C = a[2] * b[0] + a[3] * b[2];
  Complex D = a[2] * b[1] + a[3] * b[3];
  if (std::abs(A) < 1e-300)
    fail(ErrorCode::Singular, "degenerate automorphism composition");

  Automorphism r;
  r.w = f.w * g.w;
  r.alpha = -B / A;
  // Recover eta from the composed map at a probe point away from alpha.
  Complex probe = (std::abs(r.alpha) < 0.5) ? Complex(0.9) : Complex(0.0);
  Complex val = (A * probe + B) / (C * probe + D);
  Complex eta = val * (Complex(1.0) - std::conj(r.alpha) * probe) /
                (probe - r.alpha);
  r.eta = eta / std::abs(eta);
  return r;
}

PentaPoint royal_geodesic(Complex w) {
  if (std::abs(w) >= 1.0)
    fail(ErrorCode::Domain, "royal geodesic parameter outside the open disc");
  return PentaPoint{Complex(0.0), -2.0 * w, w * w};
}

double sup_psi(const PentaPoint& x, int grid, int refine_steps) {
  auto val = [&](double r, double th) {
    Complex z = r * Complex(std::cos(th), std::sin(th));
    return std::abs(psi(z, x));
  };

  struct Seed {
    double r, th, window;
  };
  std::vector<Seed> seeds;

  double best = 0.0, br = 0.0, bt = 0.0;
  for (int i = 0; i < grid; ++i) {
    double r = (i + 0.5) / grid;
    for (int j = 0; j < grid; ++j) {
      double th = 2.0 * M_PI * j / grid;
      double v = val(r, th);
      if (v > best) {
        best = v;
        br = r;
        bt = th;
      }
    }
  }
  seeds.push_back({br, bt, 1.0 / grid});

  // The denominator factors as (1 - w1 z)(1 - w2 z) with w1 + w2 = s and
  // w1 w2 = p.  Near the boundary the maximum is a narrow spike close to the
  // single-factor maximizer along conj(w_i), which a coarse grid can miss;
  // seed the local search there explicitly.
  Complex disc = std::sqrt(x.s * x.s - 4.0 * x.p);
  for (Complex w : {(x.s + disc) / 2.0, (x.s - disc) / 2.0}) {
    double m = std::abs(w);
    if (m < 1e-12) continue;
    double root = std::sqrt(std::max(0.0, 1.0 - std::min(1.0, m * m)));
    double rstar = std::min((1.0 - root) / m, 1.0 - 1e-12);
    seeds.push_back({rstar, std::arg(std::conj(w)), 0.1});
  }

  double out = best;
  for (const Seed& s : seeds) {
    double r = s.r, th = s.th, win = s.window;
    for (int pass = 0; pass < 4; ++pass) {
      r = golden_max([&](double rr) { return val(rr, th); },
                     std::max(0.0, r - win), std::min(1.0 - 1e-12, r + win),
                     refine_steps);
      th = golden_max([&](double tt) { return val(r, tt); }, th - win,
                      th + win, refine_steps);
      win /= 3.0;
    }
    out = std::max(out, val(r, th));
  }
  return out;
}

}  // namespace penta
