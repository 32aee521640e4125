#pragma once

#include <stdexcept>
#include <string>

namespace penta {

enum class ErrorCode {
  Data,            // malformed or inadmissible input data
  Domain,          // argument outside the operation's domain
  Degree,          // polynomial degree violates a precondition
  Singular,        // vanishing denominator / pole hit
  ZeroPolynomial,  // operation undefined on the zero polynomial
  NotNonnegative,  // trig polynomial negative on the circle
  PairingFailure,  // spectral-factor root pairing failed
  Parity,          // odd multiplicity of a circle root
  RoyalVariety,    // function maps entirely into the royal variety
  NotExtremal,     // two-point data not on the extremal set
  Inconsistent,    // internal consistency assertion failed
  Infeasible,      // interpolation problem has no solution
  Numeric,         // numerical verification failed
  Composition      // composed representation failed verification
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace penta
