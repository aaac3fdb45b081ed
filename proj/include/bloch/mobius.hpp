#pragma once

#include "bloch/expr.hpp"

namespace bloch {

// Centers with |a| beyond this are rejected: boundary-approach sweeps need a
// near the circle but exact |a| = 1 is degenerate.
inline constexpr double kMaxMobiusCenter = 1.0 - 1e-8;

// The automorphism sigma_a(z) = (a - z) / (1 - conj(a) z) as an expression
// tree. sigma_a swaps 0 and a and is an involution.
ExprPtr make_mobius(Complex a);

// Closed-form value and derivative of sigma_a, for hot loops that bypass
// tree evaluation.
inline Complex mobius_value(Complex a, Complex z) {
  return (a - z) / (Complex(1.0, 0.0) - std::conj(a) * z);
}

inline Complex mobius_derivative(Complex a, Complex z) {
  const Complex den = Complex(1.0, 0.0) - std::conj(a) * z;
  return -(1.0 - std::norm(a)) / (den * den);
}

// Pseudo-hyperbolic distance |sigma_w(z)| in [0,1); symmetric in arguments.
double pseudo_hyperbolic(Complex z, Complex w);

}  // namespace bloch
