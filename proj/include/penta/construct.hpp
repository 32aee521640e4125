#pragma once

#include <vector>

#include "penta/penta_inner.hpp"

namespace penta {

// Data for the product construction of a rational inner map of the disc
// into the closed pentablock:
//   alphas: disc zeros of the trace numerator (each contributes a
//           reflected pair), etas: its circle zeros,
//   betas:  zeros of the Blaschke factor of the first coordinate,
//   sigmas: royal nodes (closed disc), t_plus > 0, t real nonzero,
//   c unimodular.
// Degree constraint: 2 * alphas.size() + etas.size() == sigmas.size().
struct ConstructionData {
  std::vector<Complex> alphas, etas, betas, sigmas;
  double t_plus = 4.0;
  double t = 1.0;
  Complex c{1.0};
};

struct ConstructionResult {
  PentaInnerRep x;
  ComplexPoly R;  // royal polynomial of the built map
  Report report;
};

ConstructionResult build(const ConstructionData& data);

// Recovers zero sets and royal nodes from the built map and matches them
// against the input data (multiset matching, tolerance 1e-6).
Report roundtrip_check(const ConstructionData& data,
                       const ConstructionResult& result);

}  // namespace penta
