#include <doctest.h>

#include <cmath>

#include "bloch/corpus.hpp"
#include "bloch/mobius.hpp"
#include "bloch/norms.hpp"
#include "oracles.hpp"

using namespace bloch;

namespace {

ExprPtr z() { return Expr::var(); }
ExprPtr c(double re, double im = 0.0) { return Expr::constant(Complex(re, im)); }

}  // namespace

TEST_SUITE("norms") {

TEST_CASE("bloch seminorm anchors") {
  CHECK(bloch_seminorm(*z()).value == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(bloch_norm(*z()).value == doctest::Approx(1.0).epsilon(1e-10));

  CHECK(bloch_seminorm(*c(3.0, -4.0)).value == doctest::Approx(0.0));
  CHECK(bloch_norm(*c(3.0, -4.0)).value == doctest::Approx(5.0));

  CHECK(bloch_seminorm(*Expr::pow_int(z(), 2)).value ==
        doctest::Approx(oracles::bloch_monomial_seminorm(2)).epsilon(1e-9));
}

TEST_CASE("ap_norm monomials and constants") {
  const DiskRule rule = build_rule(64, 256, 2.0);
  CHECK(ap_norm(*Expr::pow_int(z(), 3), 2.0, rule).value ==
        doctest::Approx(0.5).epsilon(1e-10));
  for (int n = 0; n <= 8; ++n)
    CHECK(ap_norm(*Expr::pow_int(z(), n), 2.0, rule).value ==
          doctest::Approx(oracles::monomial_a2_norm(n)).epsilon(1e-10));
  CHECK(ap_norm(*c(1.0), 4.0, rule).value == doctest::Approx(1.0).epsilon(1e-12));

  const ExprPtr shifted = Expr::sub(make_mobius(Complex(0.5, 0.0)), c(0.5));
  CHECK(ap_norm(*shifted, 2.0, rule).value ==
        doctest::Approx(oracles::sigma_shift_a2_norm(0.25)).epsilon(1e-9));
  CHECK_THROWS_AS(ap_norm(*z(), 0.5, rule), InvalidParameter);
}

TEST_CASE("ap_norm cross-checked against Taylor coefficients") {
  // Independent route: ||f||_{A^2}^2 = sum |c_k|^2 / (k+1).
  const DiskRule rule = build_rule(64, 256, 2.0);
  const ExprPtr f = Expr::add(Expr::sub(make_mobius(Complex(0.4, 0.2)), c(0.1)),
                              Expr::mul(c(0.3), Expr::pow_int(z(), 2)));
  const auto coeffs = taylor_truncate(f, 64);
  double sum = 0.0;
  for (size_t k = 0; k < coeffs.size(); ++k) sum += std::norm(coeffs[k]) / (k + 1.0);
  CHECK(ap_norm(*f, 2.0, rule).value == doctest::Approx(std::sqrt(sum)).epsilon(1e-6));
}

TEST_CASE("invariant_ap_norm anchors") {
  const DiskRule rule = build_rule(64, 256, 2.0);
  CHECK(invariant_ap_norm(*z(), Complex(0.0, 0.0), 2.0, rule).value ==
        doctest::Approx(std::sqrt(0.5)).epsilon(1e-10));
  CHECK(invariant_ap_norm(*c(2.5), Complex(0.7, 0.1), 2.0, rule).value ==
        doctest::Approx(0.0));
  CHECK(invariant_ap_norm(*z(), Complex(0.5, 0.0), 2.0, rule).value ==
        doctest::Approx(oracles::sigma_shift_a2_norm(0.25)).epsilon(1e-9));
}

TEST_CASE("garsia_bloch_norm") {
  const DiskRule rule = build_rule(48, 192, 2.0);
  const AGrid agrid;
  SUBCASE("identity attains the supremum at the origin") {
    const NormValue g = garsia_bloch_norm(*z(), agrid, rule);
    CHECK(g.value == doctest::Approx(std::sqrt(0.5)).epsilon(1e-6));
  }
  SUBCASE("constants vanish") {
    CHECK(garsia_bloch_norm(*c(9.0), agrid, rule).value == doctest::Approx(0.0));
  }
  SUBCASE("square stays within the measured equivalence band") {
    const double g = garsia_bloch_norm(*Expr::pow_int(z(), 2), agrid, rule).value;
    const double seminorm = oracles::bloch_monomial_seminorm(2);
    CHECK(g / seminorm > 0.1);
    CHECK(g / seminorm < 10.0);
  }
}

TEST_CASE("growth_bound_check") {
  CHECK(growth_bound_check(*c(1.0)) == doctest::Approx(1.0 / std::log(2.0)).epsilon(1e-6));
  CHECK(growth_bound_check(*z()) < 1.5);
  CHECK(growth_bound_check(*c(0.0)) == doctest::Approx(0.0));
}

TEST_CASE("growth bound holds across the test corpus") {
  for (const TestFunction& tf : bloch_test_functions())
    CHECK(growth_bound_check(*tf.f) <= 1.5);
}

TEST_CASE("oscillation norms: Holder direction and measured reverse") {
  const DiskRule rule = build_rule(48, 192, 2.0);
  const AGrid agrid;
  for (const TestFunction& tf : bloch_test_functions()) {
    double sup2 = 0.0, sup4 = 0.0;
    for (const Complex& a : agrid.points()) {
      sup2 = std::max(sup2, invariant_ap_norm(*tf.f, a, 2.0, rule).value);
      sup4 = std::max(sup4, invariant_ap_norm(*tf.f, a, 4.0, rule).value);
    }
    CHECK(sup2 <= sup4 + 1e-8);
    if (sup2 > 1e-9) CHECK(sup4 / sup2 < 10.0);
  }
}

TEST_CASE("A2 norm against the derivative-weighted form") {
  const DiskRule rule = build_rule(64, 256, 2.0);
  double ratio_min = 1e300, ratio_max = 0.0;
  for (const TestFunction& tf : bloch_test_functions()) {
    const double lhs = std::pow(ap_norm(*tf.f, 2.0, rule).value, 2.0);
    const ExprPtr df = derivative(*tf.f);
    auto weighted = [&](Complex w) {
      const double s = 1.0 - std::norm(w);
      return std::norm(eval(df, w)) * s * s;
    };
    const double rhs = std::norm(eval(tf.f, Complex(0.0, 0.0))) + disk_integrate(weighted, rule);
    const double ratio = lhs / rhs;
    ratio_min = std::min(ratio_min, ratio);
    ratio_max = std::max(ratio_max, ratio);
  }
  CHECK(ratio_max / ratio_min <= 10.0);
}

TEST_CASE("norm homogeneity") {
  const DiskRule rule = build_rule(48, 192, 2.0);
  const ExprPtr f = Expr::add(z(), Expr::mul(c(0.25), Expr::pow_int(z(), 3)));
  const double lambda = 3.7;
  const ExprPtr scaled = Expr::mul(c(lambda), f);

  CHECK(bloch_norm(*scaled).value ==
        doctest::Approx(lambda * bloch_norm(*f).value).epsilon(1e-10));
  CHECK(ap_norm(*scaled, 2.0, rule).value ==
        doctest::Approx(lambda * ap_norm(*f, 2.0, rule).value).epsilon(1e-10));
  CHECK(invariant_ap_norm(*scaled, Complex(0.3, 0.2), 2.0, rule).value ==
        doctest::Approx(lambda * invariant_ap_norm(*f, Complex(0.3, 0.2), 2.0, rule).value)
            .epsilon(1e-10));
}

TEST_CASE("a-grid shape") {
  const AGrid g8 = AGrid::with_levels(8);
  CHECK(g8.radii.size() == 8);
  CHECK(g8.radii.front() == 0.0);
  CHECK(g8.radii.back() == doctest::Approx(0.999));
  CHECK(g8.points().size() == 7u * 64u + 1u);

  const AGrid g5 = AGrid::with_levels(5);
  CHECK(g5.radii.size() == 5);
  CHECK(g5.radii.front() == 0.0);
  CHECK(g5.radii.back() == doctest::Approx(0.999));
  CHECK_THROWS_AS(AGrid::with_levels(1), InvalidParameter);
}

}  // TEST_SUITE
