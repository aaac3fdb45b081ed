#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bloch/expr.hpp"

namespace bloch {

// Tensor rule for integrals over the unit disk against normalized area
// measure: Gauss-Legendre in the radius (graded toward the boundary via
// r = 1 - (1 - s)^q) times a uniform angular grid.
struct DiskRule {
  struct RadialNode {
    double r = 0.0;
    // Ring weight: summing weight over radial nodes integrates 1 exactly.
    double weight = 0.0;
  };

  std::vector<RadialNode> radial;
  int angular = 0;
  double grading = 1.0;

  std::string describe() const;
};

DiskRule build_rule(int radial_count, int angular_count, double grading);

// Quadrature sum in a fixed radial-major order with compensated summation,
// so results do not depend on evaluation scheduling.
double disk_integrate(const std::function<double(Complex)>& g, const DiskRule& rule);

// Polar probe grid for supremum evaluation; radii are graded geometrically
// toward the boundary and capped at max_radius.
struct SupGrid {
  int radial_levels = 40;
  int angular = 192;
  double max_radius = 1.0 - 1e-6;

  std::vector<double> radii() const;
  // Radius-major point enumeration; radius 0 contributes a single point.
  std::vector<Complex> points() const;
};

struct SupResult {
  double value = 0.0;
  Complex argmax{0.0, 0.0};
  bool converged = false;
};

// Grid maximum followed (when refine) by local coordinate descent in (r,
// theta) until the step drops below 1e-10 or 200 iterations elapse.
// The result always dominates every grid sample.
SupResult disk_sup(const std::function<double(Complex)>& g, const SupGrid& grid,
                   bool refine = true);

// The refinement stage alone, seeded from a known grid maximum. Never
// returns less than the seed value and never probes beyond max_radius.
SupResult refine_sup(const std::function<double(Complex)>& g, double seed_value,
                     Complex seed_point, double max_radius, int angular_hint);

// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

// Fixed-order compensated accumulator (Neumaier variant).
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      carry_ += (sum_ - t) + x;
    else
      carry_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

}  // namespace bloch
