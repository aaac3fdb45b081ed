#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bloch/expr.hpp"
#include "bloch/quadrature.hpp"

namespace bloch {

struct NormValue {
  double value = 0.0;
  bool diverged = false;
  std::string rule_meta;
};

// Probe grid for suprema over the automorphism parameter a. Radius 0
// contributes a single point.
struct AGrid {
  std::vector<double> radii{0.0, 0.3, 0.6, 0.8, 0.9, 0.95, 0.99, 0.999};
  int angular = 64;

  static AGrid with_levels(int levels);
  std::vector<Complex> points() const;
};

// Grid maximum of q over the a-grid with optional coordinate-descent
// refinement (the quantity is typically a quadrature, so the iteration
// budget is small).
struct ASupResult {
  double value = 0.0;
  Complex argmax{0.0, 0.0};
};
ASupResult a_grid_sup(const std::function<double(Complex)>& q, const AGrid& grid,
                      bool refine = true);

// Refinement stage alone, seeded from a known grid maximum; the iteration
// budget is small because q is typically a full quadrature.
ASupResult refine_a_sup(const std::function<double(Complex)>& q, double seed_value,
                        Complex seed_point, int angular_hint, int max_iters = 48,
                        double tol = 1e-6);

// sup over the disk of (1 - |z|^2) |f'(z)|, and |f(0)| plus that.
NormValue bloch_seminorm(const Expr& f, const SupGrid& grid = {});
NormValue bloch_norm(const Expr& f, const SupGrid& grid = {});
inline NormValue bloch_norm(const ExprPtr& f, const SupGrid& grid = {}) {
  return bloch_norm(*f, grid);
}

// (integral of |f|^p dA)^(1/p), p >= 1.
NormValue ap_norm(const Expr& f, double p, const DiskRule& rule);

// || f o sigma_a - f(a) ||_{A^p}.
NormValue invariant_ap_norm(const Expr& f, Complex a, double p, const DiskRule& rule);

// sup over the a-grid (with refinement) of the invariant A^2 norm; an
// oscillation norm equivalent to the Bloch seminorm, with the equivalence
// constants measured per corpus rather than asserted.
NormValue garsia_bloch_norm(const Expr& f, const AGrid& agrid, const DiskRule& rule,
                            bool refine = true);

// max over the probe grid of |f(z)| / (log(2 / (1 - |z|^2)) * ||f||_B).
double growth_bound_check(const Expr& f, const SupGrid& grid = {});

}  // namespace bloch
