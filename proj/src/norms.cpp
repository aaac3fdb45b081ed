#include "bloch/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "bloch/mobius.hpp"

namespace bloch {

AGrid AGrid::with_levels(int levels) {
  if (levels < 2) throw InvalidParameter("AGrid: need at least 2 radius levels");
  AGrid g;
  if (levels == 8) return g;  // canonical ladder
  g.radii.clear();
  for (int k = 0; k < levels; ++k) {
    const double u = static_cast<double>(k) / (levels - 1);
    g.radii.push_back(1.0 - std::pow(10.0, -3.0 * u));
  }
  g.radii.front() = 0.0;
  return g;
}

std::vector<Complex> AGrid::points() const {
  const double two_pi = 2.0 * std::numbers::pi;
  std::vector<Complex> out;
  for (double r : radii) {
    const int angles = (r == 0.0) ? 1 : angular;
    for (int k = 0; k < angles; ++k) out.push_back(std::polar(r, two_pi * k / angular));
  }
  return out;
}

ASupResult refine_a_sup(const std::function<double(Complex)>& q, double seed_value,
                        Complex seed_point, int angular_hint, int max_iters, double tol) {
  const double two_pi = 2.0 * std::numbers::pi;
  ASupResult best;
  best.value = seed_value;
  best.argmax = seed_point;

  double r = std::abs(seed_point);
  double theta = std::arg(seed_point);
  double dr = 0.05, dtheta = two_pi / angular_hint;
  for (int it = 0; it < max_iters; ++it) {
    if (std::max(dr, dtheta) < tol) break;
    bool improved = false;
    for (double rc : {std::clamp(r + dr, 0.0, 0.999), std::clamp(r - dr, 0.0, 0.999)}) {
      const double v = q(std::polar(rc, theta));
      if (v > best.value) {
        best.value = v;
        r = rc;
        improved = true;
      }
    }
    for (double tc : {theta + dtheta, theta - dtheta}) {
      const double v = q(std::polar(r, tc));
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
  return best;
}

ASupResult a_grid_sup(const std::function<double(Complex)>& q, const AGrid& grid, bool refine) {
  ASupResult best;
  best.value = -std::numeric_limits<double>::infinity();
  for (const Complex& a : grid.points()) {
    const double v = q(a);
    if (v > best.value) {
      best.value = v;
      best.argmax = a;
    }
  }
  if (!refine) return best;
  return refine_a_sup(q, best.value, best.argmax, grid.angular);
}

NormValue bloch_seminorm(const Expr& f, const SupGrid& grid) {
  const ExprPtr df = derivative(f);
  auto integrand = [&](Complex z) { return (1.0 - std::norm(z)) * std::abs(eval(df, z)); };
  const SupResult sup = disk_sup(integrand, grid, true);
  NormValue out;
  out.value = sup.value;
  out.diverged = !std::isfinite(sup.value);
  out.rule_meta = "bloch sup grid " + std::to_string(grid.radial_levels) + "x" +
                  std::to_string(grid.angular);
  return out;
}

NormValue bloch_norm(const Expr& f, const SupGrid& grid) {
  NormValue out = bloch_seminorm(f, grid);
  out.value += std::abs(eval(f, Complex(0.0, 0.0)));
  return out;
}

NormValue ap_norm(const Expr& f, double p, const DiskRule& rule) {
  if (!(p >= 1.0)) throw InvalidParameter("ap_norm: p must be >= 1");
  auto integrand = [&](Complex z) { return std::pow(std::abs(eval(f, z)), p); };
  NormValue out;
  out.value = std::pow(disk_integrate(integrand, rule), 1.0 / p);
  out.diverged = !std::isfinite(out.value);
  out.rule_meta = rule.describe();
  return out;
}

NormValue invariant_ap_norm(const Expr& f, Complex a, double p, const DiskRule& rule) {
  if (!(p >= 1.0)) throw InvalidParameter("invariant_ap_norm: p must be >= 1");
  if (std::abs(a) >= 1.0)
    throw InvalidParameter("invariant_ap_norm: a must lie strictly inside the disk");
  const Complex fa = eval(f, a);
  auto integrand = [&](Complex z) {
    return std::pow(std::abs(eval(f, mobius_value(a, z)) - fa), p);
  };
  NormValue out;
  out.value = std::pow(disk_integrate(integrand, rule), 1.0 / p);
  out.diverged = !std::isfinite(out.value);
  out.rule_meta = rule.describe();
  return out;
}

NormValue garsia_bloch_norm(const Expr& f, const AGrid& agrid, const DiskRule& rule,
                            bool refine) {
  auto q = [&](Complex a) { return invariant_ap_norm(f, a, 2.0, rule).value; };
  const ASupResult sup = a_grid_sup(q, agrid, refine);
  NormValue out;
  out.value = sup.value;
  out.diverged = !std::isfinite(sup.value);
  out.rule_meta = rule.describe() + ", a-grid " + std::to_string(agrid.radii.size()) + "x" +
                  std::to_string(agrid.angular);
  return out;
}

double growth_bound_check(const Expr& f, const SupGrid& grid) {
  const double norm = bloch_norm(f, grid).value;
  if (norm == 0.0) return 0.0;
  auto ratio = [&](Complex z) {
    return std::abs(eval(f, z)) / (std::log(2.0 / (1.0 - std::norm(z))) * norm);
  };
  return disk_sup(ratio, grid, true).value;
}

}  // namespace bloch
