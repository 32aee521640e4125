#pragma once

#include "penta/poly.hpp"

namespace penta {

struct FejerRieszResult {
  ComplexPoly D;          // outer factor, D(0) real >= 0
  double residual = 0.0;  // max | |D|^2 - f | over circle samples
  bool degenerate_zero = false;  // f was identically zero
};

// Outer spectral factor of a trig polynomial f >= 0 on the unit circle:
// |D|^2 = f there, D has no zeros in the open disc, D(0) >= 0 real.
// Throws NotNonnegative if f dips below -1e-9 * scale on the circle and
// PairingFailure if the root pairing of x^n f(x) breaks down.
FejerRieszResult fejer_riesz(const TrigPoly& f);

}  // namespace penta
