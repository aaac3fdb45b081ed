#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bloch/expr.hpp"
#include "bloch/norms.hpp"
#include "bloch/quadrature.hpp"

namespace bloch {

// A validated symbol pair (u, phi): phi an analytic self-map of the disk,
// u evaluable on the probe region.
struct SymbolPair {
  ExprPtr u;
  ExprPtr phi;
  SelfMapReport phi_report;
  std::string label;
};

SymbolPair make_symbol_pair(ExprPtr u, ExprPtr phi, std::string label = "");

enum class TestFunctionKind { F, H, G };

// The three test functions attached to the point a:
//   F: sigma_c(z) - c              with c = phi(a)
//   H: log(2 / (1 - conj(c) z))
//   G: H^2 / H(c)
ExprPtr test_family(const Expr& phi, Complex a, TestFunctionKind kind);

// Values of u, u', phi, phi' cached on a probe grid; shared by every
// Bloch-norm sweep over the same pair.
struct GridCache {
  std::vector<Complex> z;
  std::vector<double> one_minus;  // 1 - |z|^2
  std::vector<Complex> u, du, phi, dphi;
  Complex u0, phi0;

  static GridCache build(const SymbolPair& pair, const SupGrid& grid);
};

// [ ||u||_B, ||u phi||_B, ..., ||u phi^N||_B ]. Equals bloch_norm of the
// product/power tree for each n; the grid values are shared across n.
std::vector<double> power_bloch_norms(const SymbolPair& pair, int max_power,
                                      const SupGrid& grid = {});

// (integral over E(phi,a,t) of |u(sigma_a(z))|^4 dA)^(1/4) where E is the
// set where the conjugated symbol sigma_{phi(a)} o phi o sigma_a exceeds
// modulus t.
double level_set_moment(const SymbolPair& pair, Complex a, double t, const DiskRule& rule);

// alpha(u,phi,a) = |u(a)| ||sigma_{phi(a)} o phi o sigma_a||_{A^2}
// beta(u,phi,a)  = log(2/(1-|phi(a)|^2)) ||u o sigma_a - u(a)||_{A^2}
double alpha(const SymbolPair& pair, Complex a, const DiskRule& rule);
double beta(const SymbolPair& pair, Complex a, const DiskRule& rule);

// One fused quadrature pass per grid point a: every A^2 quantity the
// estimators and the inequality audit need.
struct ProfileSample {
  Complex a;
  Complex phi_a;
  double phi_a_mod = 0.0;
  double log_factor = 0.0;  // log(2 / (1 - |phi(a)|^2))
  double alpha = 0.0;
  double beta = 0.0;
  double osc_a2 = 0.0;    // ||u o sigma_a - u(a)||_{A^2}
  double osc_a4 = 0.0;    // same in A^4
  double osc_fa = 0.0;    // ||(uC_phi f_a) o sigma_a - (uC_phi f_a)(a)||_{A^2}
  double osc_ga = 0.0;    // same with g_a
  double cross_ga = 0.0;  // ||(g_a o phi o sigma_a - g_a(phi(a))) (u o sigma_a - u(a))||_{A^2}
  double ucf_z = 0.0;     // ||(uC_phi id) o sigma_a - (uC_phi id)(a)||_{A^2}
  double cross_z = 0.0;   // ||(u o sigma_a - u(a)) (phi o sigma_a - phi(a))||_{A^2}
  std::vector<double> moments;  // level-set moments, one per t level
};

struct FunctionalProfile {
  std::vector<ProfileSample> a_samples;
  std::vector<double> t_levels;
  std::vector<double> power_norms;
  std::string meta;
};

FunctionalProfile compute_profile(const SymbolPair& pair, const AGrid& agrid,
                                  const DiskRule& rule, const std::vector<double>& t_levels,
                                  int max_power, const SupGrid& sup_grid);

// Per-level boundary suprema: for each level r, the sup of quantity(i) over
// sample indices with modulus(i) >= r. Empty levels are vacuous and count
// as 0; the approximant is read at the largest non-vacuous level.
struct LevelSup {
  double level = 0.0;
  double sup = 0.0;
  bool vacuous = true;
  Complex arg_a{0.0, 0.0};
};

struct BoundaryLimsup {
  std::vector<LevelSup> levels;
  double approximant = 0.0;
  bool all_vacuous = true;
};

BoundaryLimsup boundary_limsup(const std::vector<Complex>& a_points,
                               const std::vector<double>& moduli,
                               const std::function<double(size_t)>& quantity,
                               const std::vector<double>& levels);

// Nested level-schedule proxy for the double limsup over (r, t) of the
// level-set moments: sup over {|phi(a)| <= r} at the largest usable (r, t).
struct GammaTildeCell {
  double r = 0.0;
  double t = 0.0;
  double sup = 0.0;
  bool vacuous = true;
};

struct GammaTilde {
  std::vector<GammaTildeCell> table;
  double approximant = 0.0;
};

GammaTilde gamma_tilde(const FunctionalProfile& profile, const std::vector<double>& r_levels);

// Bloch norm of u * (f o phi) for a test function given by closures,
// using cached grid values plus local refinement.
double weighted_compose_bloch_norm(const SymbolPair& pair, const GridCache& cache,
                                   const std::function<Complex(Complex)>& f_value,
                                   const std::function<Complex(Complex)>& f_deriv,
                                   const SupGrid& grid);

// One audited inequality: both sides, their ratio, and the margin under the
// configured constant.
struct AuditRow {
  std::string inequality;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;     // lhs / rhs (0 when rhs vanishes with lhs)
  double constant = 1.0;  // configured constant
  double margin = 0.0;    // constant * rhs - lhs
  std::string flags;
};

struct AuditConfig {
  double product_norm_constant = 20.0;  // composition product bound
  double growth_envelope = 1.5;         // pointwise growth bound
  double coherence_constant = 10.0;     // measured-equivalence rows
  std::vector<double> boundary_levels{0.9, 0.99, 0.999, 0.9999};
  std::vector<double> gamma_r_levels{0.9, 0.99};
};

std::vector<AuditRow> inequality_audit(const SymbolPair& pair, const FunctionalProfile& profile,
                                       const GridCache& cache, const DiskRule& rule,
                                       const SupGrid& sup_grid, const AuditConfig& config);

// Closed-form values of the test functions (hot-loop companions of
// test_family; c = phi(a)).
Complex test_f_value(Complex c, Complex w);
Complex test_f_deriv(Complex c, Complex w);
Complex test_h_value(Complex c, Complex w);
Complex test_h_deriv(Complex c, Complex w);
Complex test_g_value(Complex c, Complex w);
Complex test_g_deriv(Complex c, Complex w);

}  // namespace bloch
