#include "bloch/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "bloch/mobius.hpp"

namespace bloch {

namespace {

double log_factor(Complex phi_value) { return std::log(2.0 / (1.0 - std::norm(phi_value))); }

double window_max(const std::vector<double>& values, int window) {
  if (values.empty()) return 0.0;
  const size_t w = std::min<size_t>(static_cast<size_t>(std::max(window, 1)), values.size());
  double out = 0.0;
  for (size_t i = values.size() - w; i < values.size(); ++i) out = std::max(out, values[i]);
  return out;
}

FunctionalProfile full_profile(const SymbolPair& pair, const EstimatorConfig& config,
                               bool with_moments, bool with_powers) {
  return compute_profile(pair, config.agrid(), config.rule(),
                         with_moments ? config.gamma_t_levels : std::vector<double>{},
                         with_powers ? config.power_horizon : -1, config.sup_grid());
}

struct SupPair {
  double sup_alpha = 0.0;
  Complex arg_alpha{0.0, 0.0};
  double sup_beta = 0.0;
  Complex arg_beta{0.0, 0.0};
};

SupPair profile_sups(const FunctionalProfile& profile) {
  SupPair out;
  for (const auto& s : profile.a_samples) {
    if (s.alpha > out.sup_alpha) {
      out.sup_alpha = s.alpha;
      out.arg_alpha = s.a;
    }
    if (s.beta > out.sup_beta) {
      out.sup_beta = s.beta;
      out.arg_beta = s.a;
    }
  }
  return out;
}

}  // namespace

double EstimateReport::part(const std::string& name) const {
  for (const auto& p : parts)
    if (p.name == name) return p.value;
  throw InvalidParameter("EstimateReport: unknown part " + name);
}

EstimateReport norm_estimate(const SymbolPair& pair, NormMethod method,
                             const EstimatorConfig& config, const FunctionalProfile& profile) {
  const DiskRule rule = config.rule();
  const Complex u0 = eval(pair.u, Complex(0.0, 0.0));
  const Complex phi0 = eval(pair.phi, Complex(0.0, 0.0));
  const double u0_term = std::abs(u0) * log_factor(phi0);

  SupPair sups = profile_sups(profile);
  // Polish the grid maxima with a short local search.
  sups.sup_alpha = refine_a_sup([&](Complex a) { return alpha(pair, a, rule); }, sups.sup_alpha,
                                sups.arg_alpha, config.agrid_angular, 16, 1e-3)
                       .value;
  sups.sup_beta = refine_a_sup([&](Complex a) { return beta(pair, a, rule); }, sups.sup_beta,
                               sups.arg_beta, config.agrid_angular, 16, 1e-3)
                      .value;

  EstimateReport report;
  report.grid_meta = profile.meta;
  report.parts.push_back({"u0_term", u0_term});
  if (method == NormMethod::Functional) {
    report.parts.push_back({"sup_alpha", sups.sup_alpha});
    report.parts.push_back({"sup_beta", sups.sup_beta});
  } else {
    if (profile.power_norms.empty())
      throw InvalidParameter("norm_estimate: power-norm route needs a profile with powers");
    const double power_sup =
        *std::max_element(profile.power_norms.begin(), profile.power_norms.end());
    report.parts.push_back({"power_sup", power_sup});
    report.parts.push_back({"sup_beta", sups.sup_beta});
  }
  for (const auto& p : report.parts) {
    report.value += p.value;
    if (!(p.value < config.divergence_threshold)) report.diverged = true;
  }
  return report;
}

EstimateReport norm_estimate(const SymbolPair& pair, NormMethod method,
                             const EstimatorConfig& config) {
  const FunctionalProfile profile =
      full_profile(pair, config, /*with_moments=*/false,
                   /*with_powers=*/method == NormMethod::PowerSup);
  return norm_estimate(pair, method, config, profile);
}

EssNormReport essnorm_estimate(const SymbolPair& pair, const EstimatorConfig& config,
                               const FunctionalProfile& profile) {
  if (profile.power_norms.empty() || profile.t_levels.empty())
    throw InvalidParameter("essnorm_estimate: profile must carry powers and level moments");

  // Boundedness gate: both norm routes must stay below the divergence
  // threshold.
  {
    const EstimateReport functional =
        norm_estimate(pair, NormMethod::Functional, config, profile);
    const EstimateReport power = norm_estimate(pair, NormMethod::PowerSup, config, profile);
    if (functional.diverged || power.diverged)
      throw NotBounded("essnorm_estimate: norm estimate exceeds the divergence threshold");
  }

  const auto& samples = profile.a_samples;
  std::vector<Complex> a_points(samples.size());
  std::vector<double> moduli(samples.size());
  for (size_t i = 0; i < samples.size(); ++i) {
    a_points[i] = samples[i].a;
    moduli[i] = samples[i].phi_a_mod;
  }

  EssNormReport report;
  report.meta = profile.meta;
  report.power_tail = window_max(profile.power_norms, config.power_window);

  const BoundaryLimsup alpha_tail = boundary_limsup(
      a_points, moduli, [&](size_t i) { return samples[i].alpha; }, config.boundary_levels);
  const BoundaryLimsup beta_tail = boundary_limsup(
      a_points, moduli, [&](size_t i) { return samples[i].beta; }, config.boundary_levels);
  report.alpha_tail = alpha_tail.approximant;
  report.beta_tail = beta_tail.approximant;

  // ||uC_phi g_a||_B only matters for samples that reach the first level.
  const double min_level =
      config.boundary_levels.empty() ? 1.0 : config.boundary_levels.front();
  const GridCache cache = GridCache::build(pair, config.sup_grid());
  std::vector<double> g_norms(samples.size(), 0.0);
  for (size_t i = 0; i < samples.size(); ++i) {
    if (moduli[i] < min_level) continue;
    const Complex c = samples[i].phi_a;
    g_norms[i] = weighted_compose_bloch_norm(
        pair, cache, [c](Complex w) { return test_g_value(c, w); },
        [c](Complex w) { return test_g_deriv(c, w); }, config.sup_grid());
  }
  const BoundaryLimsup g_tail = boundary_limsup(
      a_points, moduli, [&](size_t i) { return g_norms[i]; }, config.boundary_levels);
  report.g_tail = g_tail.approximant;

  report.gamma_tail = gamma_tilde(profile, config.gamma_r_levels).approximant;

  // Geometric residue far below the reporting tolerance is an exact zero.
  for (double* tail : {&report.power_tail, &report.alpha_tail, &report.beta_tail,
                       &report.g_tail, &report.gamma_tail})
    if (std::abs(*tail) < config.tol) *tail = 0.0;

  report.v1 = report.power_tail + report.g_tail;
  report.v2 = report.alpha_tail + report.beta_tail + report.gamma_tail;
  report.v3 = report.alpha_tail + report.g_tail + report.gamma_tail;
  report.v4 = report.power_tail + report.beta_tail;

  const double vmax = std::max({report.v1, report.v2, report.v3, report.v4});
  const double vmin = std::min({report.v1, report.v2, report.v3, report.v4});
  report.coherence_ratio =
      (vmax < config.tol) ? 1.0 : vmax / std::max(vmin, std::numeric_limits<double>::min());
  report.boundary_vacuous =
      alpha_tail.all_vacuous && beta_tail.all_vacuous && g_tail.all_vacuous;
  return report;
}

EssNormReport essnorm_estimate(const SymbolPair& pair, const EstimatorConfig& config) {
  const FunctionalProfile profile = full_profile(pair, config, true, true);
  return essnorm_estimate(pair, config, profile);
}

TailCrossChecks tail_cross_checks(const SymbolPair& pair, const EstimatorConfig& config) {
  TailCrossChecks out;

  SymbolPair unweighted;
  unweighted.u = Expr::constant(1.0);
  unweighted.phi = pair.phi;
  unweighted.phi_report = pair.phi_report;
  unweighted.label = pair.label;
  const std::vector<double> powers =
      power_bloch_norms(unweighted, config.power_horizon, config.sup_grid());
  out.scaled_power_tail = (std::numbers::e / 2.0) * window_max(powers, config.power_window);

  const GridCache cache = GridCache::build(pair, config.sup_grid());
  const size_t m = cache.z.size();
  std::vector<Complex> points(m);
  std::vector<double> moduli(m), q1(m), q2(m);
  for (size_t i = 0; i < m; ++i) {
    points[i] = cache.z[i];
    moduli[i] = std::abs(cache.phi[i]);
    const double denom = 1.0 - std::norm(cache.phi[i]);
    q1[i] = cache.one_minus[i] * std::abs(cache.u[i] * cache.dphi[i]) / denom;
    q2[i] = std::log(std::numbers::e / denom) * std::abs(cache.du[i]) * cache.one_minus[i];
  }
  out.weight_ratio_tail =
      boundary_limsup(points, moduli, [&](size_t i) { return q1[i]; }, config.boundary_levels)
          .approximant;
  out.log_deriv_tail =
      boundary_limsup(points, moduli, [&](size_t i) { return q2[i]; }, config.boundary_levels)
          .approximant;
  return out;
}

const char* to_string(Trilean t) {
  switch (t) {
    case Trilean::Yes:
      return "yes";
    case Trilean::No:
      return "no";
    case Trilean::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

Verdict classify(const SymbolPair& pair, const EstimatorConfig& config,
                 const FunctionalProfile& profile) {
  Verdict verdict;
  const EstimateReport functional = norm_estimate(pair, NormMethod::Functional, config, profile);
  const EstimateReport power = norm_estimate(pair, NormMethod::PowerSup, config, profile);

  double max_part = 0.0;
  for (const auto& p : functional.parts) max_part = std::max(max_part, p.value);
  for (const auto& p : power.parts) max_part = std::max(max_part, p.value);

  // Growth trend over the second half of the power ladder: four window
  // maxima, strictly increasing means the ladder is still climbing at the
  // horizon.
  const auto& powers = profile.power_norms;
  double growth_ratio = 0.0;
  bool monotone = false;
  if (powers.size() >= 8) {
    const size_t half = powers.size() / 2;
    const size_t span = (powers.size() - half) / 4;
    double w[4] = {0.0, 0.0, 0.0, 0.0};
    for (int j = 0; j < 4; ++j) {
      const size_t lo = half + static_cast<size_t>(j) * span;
      const size_t hi = (j == 3) ? powers.size() : lo + span;
      for (size_t i = lo; i < hi; ++i) w[j] = std::max(w[j], powers[i]);
    }
    monotone = w[0] < w[1] && w[1] < w[2] && w[2] < w[3];
    growth_ratio = (w[0] > 1e-300) ? w[3] / w[0] : 0.0;
  }

  // Converging ladders sit at window ratio ~1; logarithmic divergence shows
  // up near 1.06 at horizon 200.
  if (max_part >= config.divergence_threshold || (monotone && growth_ratio > 1.03))
    verdict.bounded = Trilean::No;
  else if (max_part >= config.divergence_threshold / 2.0 || (monotone && growth_ratio > 1.015))
    verdict.bounded = Trilean::Inconclusive;
  else
    verdict.bounded = Trilean::Yes;

  verdict.evidence.push_back({"max_norm_part", max_part});
  verdict.evidence.push_back({"power_growth_ratio", growth_ratio});
  verdict.evidence.push_back({"divergence_threshold", config.divergence_threshold});

  if (verdict.bounded == Trilean::No) {
    verdict.compact = Trilean::No;
    return verdict;
  }

  EssNormReport ess;
  try {
    ess = essnorm_estimate(pair, config, profile);
  } catch (const NotBounded&) {
    verdict.bounded = Trilean::No;
    verdict.compact = Trilean::No;
    return verdict;
  }

  const double q = std::max(ess.power_tail, ess.beta_tail);
  verdict.evidence.push_back({"power_tail", ess.power_tail});
  verdict.evidence.push_back({"beta_tail", ess.beta_tail});
  verdict.evidence.push_back({"alpha_tail", ess.alpha_tail});
  verdict.evidence.push_back({"g_tail", ess.g_tail});
  verdict.evidence.push_back({"gamma_tail", ess.gamma_tail});
  verdict.evidence.push_back({"eps_compact", config.eps_compact});

  if (q < config.eps_compact)
    verdict.compact = (verdict.bounded == Trilean::Yes) ? Trilean::Yes : Trilean::Inconclusive;
  else if (q > 2.0 * config.eps_compact)
    verdict.compact = Trilean::No;
  else
    verdict.compact = Trilean::Inconclusive;
  return verdict;
}

Verdict classify(const SymbolPair& pair, const EstimatorConfig& config) {
  const FunctionalProfile profile = full_profile(pair, config, true, true);
  return classify(pair, config, profile);
}

namespace {

double rand01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace

double opnorm_lower_bound(const SymbolPair& pair, int random_candidates,
                          const EstimatorConfig& config) {
  if (random_candidates < 1)
    throw InvalidParameter("opnorm_lower_bound: need at least one random candidate");

  std::vector<ExprPtr> candidates;
  for (int n = 0; n <= 8; ++n) candidates.push_back(Expr::pow_int(Expr::var(), n));

  AGrid probe;
  probe.radii = {0.0, 0.5, 0.9, 0.99};
  probe.angular = 8;
  for (const Complex& a : probe.points()) {
    for (TestFunctionKind kind :
         {TestFunctionKind::F, TestFunctionKind::H, TestFunctionKind::G})
      candidates.push_back(test_family(*pair.phi, a, kind));
  }

  std::mt19937_64 gen(config.seed);
  for (int s = 0; s < random_candidates; ++s) {
    ExprPtr poly = Expr::constant(Complex(2.0 * rand01(gen) - 1.0, 2.0 * rand01(gen) - 1.0));
    for (int k = 1; k <= 10; ++k) {
      const double scale = 1.0 / (k + 1.0);
      const Complex c(scale * (2.0 * rand01(gen) - 1.0), scale * (2.0 * rand01(gen) - 1.0));
      poly = Expr::add(std::move(poly),
                       Expr::mul(Expr::constant(c), Expr::pow_int(Expr::var(), k)));
    }
    candidates.push_back(std::move(poly));
  }

  const SupGrid grid{24, 96, 1.0 - 1e-6};
  double best = 0.0;
  for (const ExprPtr& f : candidates) {
    const double nf = bloch_norm(f, grid).value;
    if (!(nf > 1e-9)) continue;
    const ExprPtr image = Expr::mul(pair.u, Expr::compose(f, pair.phi));
    const double op = bloch_norm(image, grid).value;
    best = std::max(best, op / nf);
  }
  return best;
}

}  // namespace bloch
