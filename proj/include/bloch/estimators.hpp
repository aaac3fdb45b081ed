#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bloch/functionals.hpp"

namespace bloch {

struct EstimatorConfig {
  int radial = 64;
  int angular = 256;
  double grading = 2.0;
  int agrid_levels = 8;
  int agrid_angular = 64;
  int sup_radial_levels = 40;
  int sup_angular = 192;
  int power_horizon = 200;
  int power_window = 50;
  std::vector<double> boundary_levels{0.9, 0.99, 0.999, 0.9999};
  std::vector<double> gamma_r_levels{0.9, 0.99};
  std::vector<double> gamma_t_levels{0.9, 0.99, 0.999};
  double divergence_threshold = 1e6;
  double eps_compact = 0.02;
  // Tail quantities below this snap to exact zero in reports.
  double tol = 1e-8;
  std::uint64_t seed = 42;
  int random_candidates = 16;

  DiskRule rule() const { return build_rule(radial, angular, grading); }
  AGrid agrid() const {
    AGrid g = AGrid::with_levels(agrid_levels);
    g.angular = agrid_angular;
    return g;
  }
  SupGrid sup_grid() const { return SupGrid{sup_radial_levels, sup_angular, 1.0 - 1e-6}; }
};

// The two routes to the operator norm: the functional route combines the
// weighted-oscillation suprema; the power route replaces the alpha part by
// the supremum of the power-norm ladder.
enum class NormMethod { Functional, PowerSup };

struct EstimatePart {
  std::string name;
  double value = 0.0;
};

struct EstimateReport {
  double value = 0.0;
  std::vector<EstimatePart> parts;
  std::string grid_meta;
  bool diverged = false;

  double part(const std::string& name) const;
};

EstimateReport norm_estimate(const SymbolPair& pair, NormMethod method,
                             const EstimatorConfig& config);
// Variant that reuses a computed profile (the CLI sweep computes one per pair).
EstimateReport norm_estimate(const SymbolPair& pair, NormMethod method,
                             const EstimatorConfig& config, const FunctionalProfile& profile);

// The four equivalent essential-norm assemblies plus their building blocks.
struct EssNormReport {
  double power_tail = 0.0;   // windowed limsup of ||u phi^n||_B
  double alpha_tail = 0.0;   // boundary limsup of alpha
  double beta_tail = 0.0;    // boundary limsup of beta
  double g_tail = 0.0;       // boundary limsup of ||uC_phi g_a||_B
  double gamma_tail = 0.0;   // nested level-set quantity
  double v1 = 0.0;           // power_tail + g_tail
  double v2 = 0.0;           // alpha_tail + beta_tail + gamma_tail
  double v3 = 0.0;           // alpha_tail + g_tail + gamma_tail
  double v4 = 0.0;           // power_tail + beta_tail
  double coherence_ratio = 1.0;  // max variant / min variant (1 when all ~0)
  bool boundary_vacuous = true;  // every boundary level set was empty
  std::string meta;
};

EssNormReport essnorm_estimate(const SymbolPair& pair, const EstimatorConfig& config);
EssNormReport essnorm_estimate(const SymbolPair& pair, const EstimatorConfig& config,
                               const FunctionalProfile& profile);

// Scaled power-tail of phi alone (the classical essential norm of C_phi when
// u = 1) plus the two pointwise boundary quantities used as cross-checks.
struct TailCrossChecks {
  double scaled_power_tail = 0.0;   // (e/2) * limsup ||phi^n||_B approximant
  double weight_ratio_tail = 0.0;   // limsup (1-|z|^2)|u phi'| / (1-|phi|^2)
  double log_deriv_tail = 0.0;      // limsup log(e/(1-|phi|^2)) |u'| (1-|z|^2)
};

TailCrossChecks tail_cross_checks(const SymbolPair& pair, const EstimatorConfig& config);

enum class Trilean { Yes, No, Inconclusive };
const char* to_string(Trilean t);

struct Verdict {
  Trilean bounded = Trilean::Inconclusive;
  Trilean compact = Trilean::Inconclusive;
  std::vector<EstimatePart> evidence;
};

Verdict classify(const SymbolPair& pair, const EstimatorConfig& config);
Verdict classify(const SymbolPair& pair, const EstimatorConfig& config,
                 const FunctionalProfile& profile);

// Certified-up-to-quadrature lower bound: max of ||uC_phi f||_B / ||f||_B
// over monomials, the attached test functions at grid points, and seeded
// random polynomials of degree <= 10.
double opnorm_lower_bound(const SymbolPair& pair, int random_candidates,
                          const EstimatorConfig& config);

}  // namespace bloch
