#include "bloch/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace bloch {

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(static_cast<size_t>(n), 0.0);
  weights.assign(static_cast<size_t>(n), 0.0);
  // Newton iteration on P_n from the Chebyshev-like initial guess; the
  // recurrence gives P_n and P_n' together.
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[static_cast<size_t>(i)] = -x;
    nodes[static_cast<size_t>(n - 1 - i)] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    weights[static_cast<size_t>(i)] = w;
    weights[static_cast<size_t>(n - 1 - i)] = w;
  }
}

DiskRule build_rule(int radial_count, int angular_count, double grading) {
  if (radial_count < 16) throw InvalidParameter("build_rule: radial count must be >= 16");
  if (angular_count < 64) throw InvalidParameter("build_rule: angular count must be >= 64");
  if (!(grading >= 1.0)) throw InvalidParameter("build_rule: grading exponent must be >= 1");

  std::vector<double> x, w;
  gauss_legendre(radial_count, x, w);

  DiskRule rule;
  rule.angular = angular_count;
  rule.grading = grading;
  rule.radial.reserve(static_cast<size_t>(radial_count));
  for (int j = 0; j < radial_count; ++j) {
    // s in (0,1), then r = 1 - (1-s)^q packs nodes toward the boundary.
    const double s = 0.5 * (x[static_cast<size_t>(j)] + 1.0);
    const double ws = 0.5 * w[static_cast<size_t>(j)];
    const double one_minus = 1.0 - s;
    const double r = 1.0 - std::pow(one_minus, grading);
    const double jac = grading * std::pow(one_minus, grading - 1.0);
    // Normalized area measure contributes 2 r dr after the angular average.
    DiskRule::RadialNode node;
    node.r = r;
    node.weight = 2.0 * r * jac * ws;
    rule.radial.push_back(node);
  }
  return rule;
}

std::string DiskRule::describe() const {
  std::ostringstream s;
  s << "disk rule gl" << radial.size() << "x" << angular << " q=" << grading;
  return s.str();
}

double disk_integrate(const std::function<double(Complex)>& g, const DiskRule& rule) {
  const double two_pi = 2.0 * std::numbers::pi;
  CompensatedSum total;
  for (const auto& node : rule.radial) {
    CompensatedSum ring;
    for (int k = 0; k < rule.angular; ++k) {
      const Complex z = std::polar(node.r, two_pi * k / rule.angular);
      const double v = g(z);
      if (!std::isfinite(v)) {
        std::ostringstream msg;
        msg << "disk_integrate: non-finite integrand at z = (" << z.real() << ", " << z.imag()
            << ")";
        throw NonFiniteIntegrand(msg.str());
      }
      ring.add(v);
    }
    total.add(node.weight * ring.value() / rule.angular);
  }
  return total.value();
}

std::vector<double> SupGrid::radii() const {
  std::vector<double> out;
  out.reserve(static_cast<size_t>(radial_levels));
  const double eps = 1.0 - max_radius;
  out.push_back(0.0);
  for (int k = 1; k < radial_levels; ++k) {
    const double u = static_cast<double>(k) / (radial_levels - 1);
    out.push_back(1.0 - std::pow(eps, u));
  }
  return out;
}

std::vector<Complex> SupGrid::points() const {
  const double two_pi = 2.0 * std::numbers::pi;
  std::vector<Complex> out;
  for (double r : radii()) {
    const int angles = (r == 0.0) ? 1 : angular;
    for (int k = 0; k < angles; ++k) out.push_back(std::polar(r, two_pi * k / angular));
  }
  return out;
}

SupResult refine_sup(const std::function<double(Complex)>& g, double seed_value,
                     Complex seed_point, double max_radius, int angular_hint) {
  const double two_pi = 2.0 * std::numbers::pi;
  SupResult best;
  best.value = seed_value;

  double r = std::abs(seed_point);
  double theta = std::arg(seed_point);
  double dr = std::max(1e-3, (1.0 - r) * 0.5);
  double dtheta = two_pi / angular_hint;
  for (int it = 0; it < 200; ++it) {
    if (std::max(dr, dtheta) < 1e-10) break;
    bool improved = false;
    const double r_candidates[2] = {std::clamp(r + dr, 0.0, max_radius),
                                    std::clamp(r - dr, 0.0, max_radius)};
    for (double rc : r_candidates) {
      const double v = g(std::polar(rc, theta));
      if (v > best.value) {
        best.value = v;
        r = rc;
        improved = true;
      }
    }
    for (double tc : {theta + dtheta, theta - dtheta}) {
      const double v = g(std::polar(r, tc));
      if (v > best.value) {
        best.value = v;
        theta = tc;
        improved = true;
      }
    }
    if (!improved) {
      dr *= 0.5;
      dtheta *= 0.5;
    }
  }
  best.argmax = std::polar(r, theta);
  best.converged = std::max(dr, dtheta) < 1e-10;
  return best;
}

SupResult disk_sup(const std::function<double(Complex)>& g, const SupGrid& grid, bool refine) {
  const double two_pi = 2.0 * std::numbers::pi;
  SupResult best;
  best.value = -std::numeric_limits<double>::infinity();

  double best_r = 0.0, best_theta = 0.0;
  for (double r : grid.radii()) {
    const int angles = (r == 0.0) ? 1 : grid.angular;
    for (int k = 0; k < angles; ++k) {
      const double theta = two_pi * k / grid.angular;
      const Complex z = std::polar(r, theta);
      const double v = g(z);
      if (v > best.value) {
        best.value = v;
        best_r = r;
        best_theta = theta;
      }
    }
  }
  best.argmax = std::polar(best_r, best_theta);
  best.converged = !refine;
  if (!refine) return best;
  return refine_sup(g, best.value, best.argmax, grid.max_radius, grid.angular);
}

}  // namespace bloch
