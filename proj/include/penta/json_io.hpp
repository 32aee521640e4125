#pragma once

#include <string>

#include <json.hpp>

#include "penta/construct.hpp"
#include "penta/domains.hpp"
#include "penta/errors.hpp"
#include "penta/gamma_inner.hpp"
#include "penta/penta_inner.hpp"
#include "penta/poly.hpp"
#include "penta/report.hpp"
#include "penta/schwarz.hpp"

namespace penta::io {

using json = nlohmann::ordered_json;

inline json dump(Complex z) { return json::array({z.real(), z.imag()}); }

inline Complex load_complex(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    fail(ErrorCode::Data, "complex value must be a [re, im] pair");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

inline json dump(const ComplexPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(dump(c));
  return a;
}

inline ComplexPoly load_poly(const json& j) {
  if (!j.is_array()) fail(ErrorCode::Data, "polynomial must be an array");
  std::vector<Complex> c;
  for (const auto& e : j) c.push_back(load_complex(e));
  return ComplexPoly(std::move(c));
}

inline json dump(const TrigPoly& f) {
  json a = json::array();
  for (const auto& [k, v] : f.coeffs())
    a.push_back(json::array({k, v.real(), v.imag()}));
  return json{{"coeffs", a}};
}

inline TrigPoly load_trig(const json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    fail(ErrorCode::Data, "trig polynomial must have a coeffs array");
  TrigPoly f;
  for (const auto& e : j["coeffs"]) {
    if (!e.is_array() || e.size() != 3)
      fail(ErrorCode::Data, "trig coefficient must be [k, re, im]");
    f.set(e[0].get<int>(),
          f.coeff(e[0].get<int>()) +
              Complex(e[1].get<double>(), e[2].get<double>()));
  }
  return f;
}

inline json dump(const BlaschkeProduct& b) {
  json z = json::array();
  for (const auto& w : b.zeros()) z.push_back(dump(w));
  return json{{"c", dump(b.c())}, {"zeros", z}};
}

inline BlaschkeProduct load_blaschke(const json& j) {
  if (!j.is_object() || !j.contains("c") || !j.contains("zeros"))
    fail(ErrorCode::Data, "Blaschke product must have c and zeros");
  std::vector<Complex> z;
  for (const auto& e : j["zeros"]) z.push_back(load_complex(e));
  return BlaschkeProduct(load_complex(j["c"]), std::move(z));
}

inline json dump(const GammaInnerRep& h) {
  return json{{"E", dump(h.E)}, {"D", dump(h.D)}, {"n", h.n}};
}

inline GammaInnerRep load_gamma_rep(const json& j) {
  if (!j.is_object() || !j.contains("E") || !j.contains("D") ||
      !j.contains("n"))
    fail(ErrorCode::Data, "inner pair must have E, D and n");
  return GammaInnerRep{load_poly(j["E"]), load_poly(j["D"]),
                       j["n"].get<int>()};
}

inline json dump(const PentaInnerRep& x) {
  return json{{"a_in", dump(x.a_in)}, {"A", dump(x.A)}, {"E", dump(x.E)},
              {"D", dump(x.D)},       {"n", x.n},       {"zero_a", x.zero_a}};
}

inline PentaInnerRep load_penta_rep(const json& j) {
  if (!j.is_object() || !j.contains("a_in") || !j.contains("A") ||
      !j.contains("E") || !j.contains("D") || !j.contains("n"))
    fail(ErrorCode::Data, "inner map must have a_in, A, E, D and n");
  PentaInnerRep x;
  x.a_in = load_blaschke(j["a_in"]);
  x.A = load_poly(j["A"]);
  x.E = load_poly(j["E"]);
  x.D = load_poly(j["D"]);
  x.n = j["n"].get<int>();
  x.zero_a = j.value("zero_a", x.A.is_zero());
  return x;
}

inline json dump(const PentaPoint& x) {
  return json{{"a", dump(x.a)}, {"s", dump(x.s)}, {"p", dump(x.p)}};
}

inline json dump(const MembershipVerdict& v) {
  return json{{"inside", v.inside}, {"margin", v.margin},
              {"binding", v.binding}};
}

inline json dump(const Report& r) {
  json a = json::array();
  for (const auto& c : r.checks)
    a.push_back(json{{"name", c.name}, {"pass", c.pass}, {"margin", c.margin}});
  return a;
}

inline json dump(const ConstructionData& d) {
  auto arr = [](const std::vector<Complex>& v) {
    json a = json::array();
    for (const auto& z : v) a.push_back(dump(z));
    return a;
  };
  return json{{"alphas", arr(d.alphas)}, {"etas", arr(d.etas)},
              {"betas", arr(d.betas)},   {"sigmas", arr(d.sigmas)},
              {"t_plus", d.t_plus},      {"t", d.t},
              {"c", dump(d.c)}};
}

inline ConstructionData load_construction(const json& j) {
  if (!j.is_object()) fail(ErrorCode::Data, "construction data must be an object");
  auto arr = [&](const char* key) {
    std::vector<Complex> v;
    if (j.contains(key))
      for (const auto& e : j[key]) v.push_back(load_complex(e));
    return v;
  };
  ConstructionData d;
  d.alphas = arr("alphas");
  d.etas = arr("etas");
  d.betas = arr("betas");
  d.sigmas = arr("sigmas");
  d.t_plus = j.value("t_plus", 4.0);
  d.t = j.value("t", 1.0);
  d.c = j.contains("c") ? load_complex(j["c"]) : Complex(1.0);
  return d;
}

inline json dump(const SchwarzProblem& pb) {
  return json{{"lambda0", dump(pb.lambda0)},
              {"a0", dump(pb.a0)},
              {"s0", dump(pb.s0)},
              {"p0", dump(pb.p0)}};
}

inline SchwarzProblem load_schwarz(const json& j) {
  if (!j.is_object() || !j.contains("lambda0"))
    fail(ErrorCode::Data, "interpolation problem must have lambda0");
  SchwarzProblem pb;
  pb.lambda0 = load_complex(j["lambda0"]);
  pb.a0 = j.contains("a0") ? load_complex(j["a0"]) : Complex(0.0);
  pb.s0 = j.contains("s0") ? load_complex(j["s0"]) : Complex(0.0);
  pb.p0 = j.contains("p0") ? load_complex(j["p0"]) : Complex(0.0);
  return pb;
}

inline json dump(const FeasibilityCertificate& c) {
  return json{{"F", c.F},
              {"a_bound", c.a_bound},
              {"s_bound_ok", c.s_bound_ok},
              {"F_ok", c.F_ok},
              {"a_bound_ok", c.a_bound_ok},
              {"beta_margin", c.beta_margin},
              {"feasible", c.feasible},
              {"binding", c.binding},
              {"margin", c.margin}};
}

}  // namespace penta::io
