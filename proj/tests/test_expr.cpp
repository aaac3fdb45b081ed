#include <doctest.h>

#include <cmath>

#include "bloch/expr.hpp"
#include "bloch/mobius.hpp"
#include "oracles.hpp"

using namespace bloch;

namespace {

ExprPtr z() { return Expr::var(); }
ExprPtr c(double re, double im = 0.0) { return Expr::constant(Complex(re, im)); }

}  // namespace

TEST_SUITE("expr") {

TEST_CASE("eval basics") {
  CHECK(eval(make_mobius(Complex(0.5, 0.0)), Complex(0.0, 0.0)) == Complex(0.5, 0.0));

  const Complex sq = eval(Expr::pow_int(z(), 2), Complex(0.3, 0.4));
  CHECK(std::abs(sq - Complex(-0.07, 0.24)) < 1e-15);

  // sigma_a is an involution.
  const ExprPtr twice =
      Expr::compose(make_mobius(Complex(0.0, 0.3)), make_mobius(Complex(0.0, 0.3)));
  const Complex w(0.2, -0.1);
  CHECK(std::abs(eval(twice, w) - w) < 1e-14);
}

TEST_CASE("eval error paths") {
  CHECK_THROWS_AS(eval(Expr::div(c(1.0), c(0.0)), Complex(0.0, 0.0)), DivisionNearZero);
  CHECK_THROWS_AS(eval(Expr::log(c(0.0)), Complex(0.1, 0.0)), LogDomain);
  CHECK_THROWS_AS(eval(Expr::exp(c(1e308)), Complex(0.0, 0.0)), NonFiniteValue);
  CHECK_THROWS_AS(Expr::pow_int(z(), -1), InvalidParameter);
  CHECK_THROWS_AS(Expr::mobius(Complex(1.5, 0.0)), InvalidParameter);
}

TEST_CASE("derivative closed forms") {
  // Power rule.
  const ExprPtr dp = derivative(Expr::pow_int(z(), 3));
  CHECK(std::abs(eval(dp, Complex(0.5, 0.0)) - Complex(0.75, 0.0)) < 1e-15);

  // Mobius rule: sigma_a'(0) = -(1 - |a|^2).
  const ExprPtr dm = derivative(make_mobius(Complex(0.5, 0.0)));
  CHECK(std::abs(eval(dm, Complex(0.0, 0.0)) - Complex(-0.75, 0.0)) < 1e-15);

  // Log-kernel: d/dz log(2/(1 - 0.5 z)) = 0.5 / (1 - 0.5 z).
  const ExprPtr h = Expr::log(Expr::div(c(2.0), Expr::sub(c(1.0), Expr::mul(c(0.5), z()))));
  const ExprPtr dh = derivative(h);
  CHECK(std::abs(eval(dh, Complex(0.0, 0.0)) - Complex(0.5, 0.0)) < 1e-12);
  const Complex probe(0.2, 0.1);
  const Complex numeric =
      oracles::central_difference([&](Complex w) { return eval(h, w); }, probe);
  CHECK(std::abs(eval(dh, probe) - numeric) < 1e-6);
}

TEST_CASE("derivative matches central differences for every node kind") {
  const ExprPtr samples[] = {
      z(),
      c(2.0, -1.0),
      Expr::add(z(), Expr::pow_int(z(), 2)),
      Expr::sub(c(1.0), z()),
      Expr::mul(z(), Expr::exp(z())),
      Expr::div(z(), Expr::sub(c(2.0), z())),
      Expr::neg(Expr::pow_int(z(), 4)),
      Expr::pow_int(Expr::add(z(), c(0.5)), 5),
      Expr::compose(Expr::exp(z()), Expr::mul(c(0.5), z())),
      Expr::log(Expr::sub(c(2.0), z())),
      Expr::exp(Expr::neg(z())),
      make_mobius(Complex(0.3, 0.4)),
  };
  std::mt19937_64 gen(7);
  for (const ExprPtr& f : samples) {
    const ExprPtr df = derivative(f);
    for (int i = 0; i < 100; ++i) {
      const Complex p = oracles::random_disk_point(gen, 0.8);
      const Complex numeric =
          oracles::central_difference([&](Complex w) { return eval(f, w); }, p);
      CHECK(std::abs(eval(df, p) - numeric) < 1e-6);
    }
  }
}

TEST_CASE("compose evaluation is associative") {
  const ExprPtr f = Expr::exp(z());
  const ExprPtr g = Expr::mul(c(0.5), Expr::add(z(), c(0.2)));
  const ExprPtr h = Expr::pow_int(z(), 2);
  const ExprPtr left = Expr::compose(f, Expr::compose(g, h));
  const ExprPtr right = Expr::compose(Expr::compose(f, g), h);
  std::mt19937_64 gen(11);
  for (int i = 0; i < 200; ++i) {
    const Complex p = oracles::random_disk_point(gen, 0.95);
    CHECK(std::abs(eval(left, p) - eval(right, p)) < 1e-12);
  }
}

TEST_CASE("validate_self_map") {
  const SelfMapReport half = validate_self_map(Expr::mul(c(0.5), z()));
  CHECK(half.is_self_map);
  CHECK(half.sup_modulus == doctest::Approx(0.5 * (1.0 - 1e-6)).epsilon(1e-12));
  CHECK_FALSE(half.boundary_contact);

  CHECK_THROWS_AS(validate_self_map(Expr::mul(c(2.0), z())), NotSelfMap);

  const double r_probe = 1.0 - 1e-6;
  const SelfMapReport cayley =
      validate_self_map(Expr::mul(c(0.5), Expr::add(c(1.0), z())));
  CHECK(cayley.is_self_map);
  CHECK(cayley.boundary_contact);
  CHECK(cayley.sup_modulus == doctest::Approx(0.5 * (1.0 + r_probe)).epsilon(1e-9));

  CHECK_THROWS_AS(validate_self_map(*z(), 64), InvalidParameter);
}

TEST_CASE("taylor_truncate") {
  SUBCASE("automorphism coefficients") {
    const auto coeffs = taylor_truncate(make_mobius(Complex(0.5, 0.0)), 24);
    CHECK(std::abs(coeffs[0] - Complex(0.5, 0.0)) < 1e-12);
    // c_k = -(1-|a|^2) abar^(k-1) for k >= 1.
    for (int k = 1; k <= 12; ++k)
      CHECK(std::abs(coeffs[static_cast<size_t>(k)] -
                     Complex(-0.75 * std::pow(0.5, k - 1), 0.0)) < 1e-12);
  }
  SUBCASE("constants") {
    const auto coeffs = taylor_truncate(c(3.0), 8);
    CHECK(std::abs(coeffs[0] - Complex(3.0, 0.0)) < 1e-12);
    for (size_t k = 1; k < coeffs.size(); ++k) CHECK(std::abs(coeffs[k]) < 1e-12);
  }
  SUBCASE("shifted automorphism matches the geometric series") {
    const ExprPtr shifted = Expr::sub(make_mobius(Complex(0.5, 0.0)), c(0.5));
    const auto coeffs = taylor_truncate(shifted, 24);
    CHECK(std::abs(coeffs[0]) < 1e-12);
    for (int k = 1; k <= 12; ++k)
      CHECK(std::abs(coeffs[static_cast<size_t>(k)] -
                     Complex(-(1.0 - 0.25) * std::pow(0.5, k - 1), 0.0)) < 1e-12);
  }
  SUBCASE("pole inside the fit radius is rejected") {
    // 1/(1 - 2z) has a pole at 0.5 < 0.75.
    const ExprPtr bad = Expr::div(c(1.0), Expr::sub(c(1.0), Expr::mul(c(2.0), z())));
    CHECK_THROWS_AS(taylor_truncate(bad, 64), PoorConvergence);
  }
  SUBCASE("degree cap") { CHECK_THROWS_AS(taylor_truncate(*z(), 600), InvalidParameter); }
}

}  // TEST_SUITE
