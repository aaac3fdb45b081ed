#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bloch/estimators.hpp"
#include "oracles.hpp"

using namespace bloch;

namespace {

ExprPtr z() { return Expr::var(); }
ExprPtr c(double re, double im = 0.0) { return Expr::constant(Complex(re, im)); }

SymbolPair pair_of(ExprPtr u, ExprPtr phi) {
  return make_symbol_pair(std::move(u), std::move(phi), "test");
}

EstimatorConfig fast_config() {
  EstimatorConfig cfg;
  cfg.radial = 48;
  cfg.angular = 192;
  cfg.sup_radial_levels = 32;
  cfg.sup_angular = 128;
  cfg.power_horizon = 200;
  return cfg;
}

}  // namespace

TEST_SUITE("estimators") {

TEST_CASE("norm_estimate anchors for the identity pair") {
  const EstimatorConfig cfg = fast_config();
  const SymbolPair pair = pair_of(c(1.0), z());

  const EstimateReport functional = norm_estimate(pair, NormMethod::Functional, cfg);
  CHECK(functional.value ==
        doctest::Approx(std::log(2.0) + std::sqrt(0.5)).epsilon(1e-2 / 1.4));
  CHECK(functional.part("u0_term") == doctest::Approx(std::log(2.0)).epsilon(1e-10));
  CHECK(functional.part("sup_alpha") == doctest::Approx(std::sqrt(0.5)).epsilon(1e-4));
  CHECK(functional.part("sup_beta") == doctest::Approx(0.0));
  CHECK_FALSE(functional.diverged);

  const EstimateReport power = norm_estimate(pair, NormMethod::PowerSup, cfg);
  CHECK(power.value == doctest::Approx(std::log(2.0) + 1.0).epsilon(1e-2 / 1.69));
  CHECK(power.part("power_sup") == doctest::Approx(1.0).epsilon(1e-8));

  // Parts always sum to the value.
  double total = 0.0;
  for (const auto& p : functional.parts) {
    CHECK(p.value >= 0.0);
    total += p.value;
  }
  CHECK(std::abs(total - functional.value) < 1e-12);
}

TEST_CASE("norm_estimate of the zero weight vanishes") {
  const EstimatorConfig cfg = fast_config();
  const SymbolPair pair = pair_of(c(0.0), z());
  CHECK(norm_estimate(pair, NormMethod::Functional, cfg).value == doctest::Approx(0.0));
  CHECK(norm_estimate(pair, NormMethod::PowerSup, cfg).value == doctest::Approx(0.0));
}

TEST_CASE("essnorm variants") {
  const EstimatorConfig cfg = fast_config();
  SUBCASE("strict contraction: everything vanishes") {
    const SymbolPair pair = pair_of(c(1.0), Expr::mul(c(0.5), z()));
    const EssNormReport ess = essnorm_estimate(pair, cfg);
    CHECK(ess.boundary_vacuous);
    CHECK(ess.v1 == doctest::Approx(0.0));
    CHECK(ess.v2 == doctest::Approx(0.0));
    CHECK(ess.v3 == doctest::Approx(0.0));
    CHECK(ess.v4 == doctest::Approx(0.0));
    CHECK(ess.coherence_ratio == doctest::Approx(1.0));
  }
  SUBCASE("identity pair: the power-beta variant hits 2/e") {
    const SymbolPair pair = pair_of(c(1.0), z());
    const EssNormReport ess = essnorm_estimate(pair, cfg);
    CHECK(ess.beta_tail == doctest::Approx(0.0));
    CHECK(std::abs(ess.v4 - 2.0 / std::numbers::e) < 0.01 * (2.0 / std::numbers::e));
    CHECK_FALSE(ess.boundary_vacuous);
    CHECK(ess.v1 >= 0.0);
    CHECK(ess.v2 >= 0.0);
    CHECK(ess.v3 >= 0.0);
  }
  SUBCASE("zero weight") {
    const SymbolPair pair = pair_of(c(0.0), z());
    const EssNormReport ess = essnorm_estimate(pair, cfg);
    CHECK(ess.v1 == doctest::Approx(0.0));
    CHECK(ess.v2 == doctest::Approx(0.0));
    CHECK(ess.v3 == doctest::Approx(0.0));
    CHECK(ess.v4 == doctest::Approx(0.0));
  }
  SUBCASE("unbounded weight fails the gate") {
    const SymbolPair pair = pair_of(Expr::div(c(1.0), Expr::sub(c(1.0), z())), z());
    CHECK_THROWS_AS(essnorm_estimate(pair, cfg), NotBounded);
  }
}

TEST_CASE("scaled tail cross-checks") {
  const EstimatorConfig cfg = fast_config();
  SUBCASE("identity composition") {
    const SymbolPair pair = pair_of(c(1.0), z());
    const TailCrossChecks q = tail_cross_checks(pair, cfg);
    CHECK(std::abs(q.scaled_power_tail - 1.0) < 0.02);
    CHECK(q.log_deriv_tail == doctest::Approx(0.0));  // u' = 0
    CHECK(q.weight_ratio_tail == doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("strict contraction decays") {
    const SymbolPair pair = pair_of(c(1.0), Expr::mul(c(0.5), z()));
    const TailCrossChecks q = tail_cross_checks(pair, cfg);
    CHECK(q.scaled_power_tail < 1e-12);
  }
}

TEST_CASE("classify verdicts") {
  const EstimatorConfig cfg = fast_config();
  SUBCASE("compact pair") {
    const Verdict v = classify(pair_of(c(1.0), Expr::mul(c(0.5), z())), cfg);
    CHECK(v.bounded == Trilean::Yes);
    CHECK(v.compact == Trilean::Yes);
  }
  SUBCASE("bounded non-compact pair") {
    const Verdict v = classify(pair_of(c(1.0), z()), cfg);
    CHECK(v.bounded == Trilean::Yes);
    CHECK(v.compact == Trilean::No);
  }
  SUBCASE("log weight on the identity is unbounded") {
    const ExprPtr u = Expr::log(Expr::div(c(2.0), Expr::sub(c(1.0), z())));
    const Verdict v = classify(pair_of(u, z()), cfg);
    CHECK(v.bounded == Trilean::No);
    CHECK(v.compact == Trilean::No);
  }
  SUBCASE("verdict gate: compact implies bounded") {
    for (const char* which : {"half", "id"}) {
      const Verdict v = classify(
          pair_of(c(1.0), which[0] == 'h' ? Expr::mul(c(0.5), z()) : z()), cfg);
      if (v.compact == Trilean::Yes) CHECK(v.bounded == Trilean::Yes);
    }
  }
}

TEST_CASE("opnorm_lower_bound") {
  const EstimatorConfig cfg = fast_config();
  SUBCASE("identity operator") {
    const double lb = opnorm_lower_bound(pair_of(c(1.0), z()), 8, cfg);
    CHECK(lb == doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("zero weight") {
    CHECK(opnorm_lower_bound(pair_of(c(0.0), z()), 4, cfg) == doctest::Approx(0.0));
  }
  SUBCASE("contraction is normalized by the constants") {
    const double lb = opnorm_lower_bound(pair_of(c(1.0), Expr::mul(c(0.5), z())), 8, cfg);
    CHECK(lb == doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("needs at least one random candidate") {
    CHECK_THROWS_AS(opnorm_lower_bound(pair_of(c(1.0), z()), 0, cfg), InvalidParameter);
  }
}

TEST_CASE("two-sided sanity on a few pairs") {
  const EstimatorConfig cfg = fast_config();
  const SymbolPair pairs[] = {
      pair_of(c(1.0), z()),
      pair_of(c(1.0), Expr::mul(c(0.5), z())),
      pair_of(z(), z()),
  };
  for (const SymbolPair& pair : pairs) {
    const FunctionalProfile profile = compute_profile(
        pair, cfg.agrid(), cfg.rule(), cfg.gamma_t_levels, cfg.power_horizon, cfg.sup_grid());
    const double est_f = norm_estimate(pair, NormMethod::Functional, cfg, profile).value;
    const double est_p = norm_estimate(pair, NormMethod::PowerSup, cfg, profile).value;
    const double lb = opnorm_lower_bound(pair, cfg.random_candidates, cfg);
    CHECK(est_f / est_p >= 0.2);
    CHECK(est_f / est_p <= 5.0);
    CHECK(est_f / lb >= 1.0);
    CHECK(est_f / lb <= 50.0);
  }
}

}  // TEST_SUITE
