#include <doctest.h>

#include <cmath>

#include "bloch/mobius.hpp"
#include "oracles.hpp"

using namespace bloch;

TEST_SUITE("mobius") {

TEST_CASE("make_mobius fixed points") {
  const ExprPtr zero = make_mobius(Complex(0.0, 0.0));
  CHECK(std::abs(eval(zero, Complex(0.3, 0.0)) - Complex(-0.3, 0.0)) < 1e-15);

  const ExprPtr half = make_mobius(Complex(0.5, 0.0));
  CHECK(std::abs(eval(half, Complex(0.5, 0.0))) < 1e-15);
  CHECK(std::abs(eval(half, Complex(0.0, 0.0)) - Complex(0.5, 0.0)) < 1e-15);

  CHECK_THROWS_AS(make_mobius(Complex(1.0, 0.0)), InvalidParameter);
  CHECK_THROWS_AS(make_mobius(Complex(1.0 - 1e-9, 0.0)), InvalidParameter);
}

TEST_CASE("pseudo_hyperbolic anchors") {
  CHECK(pseudo_hyperbolic(Complex(0.0, 0.0), Complex(0.4, 0.3)) == doctest::Approx(0.5));
  CHECK(pseudo_hyperbolic(Complex(0.5, 0.0), Complex(-0.5, 0.0)) == doctest::Approx(0.8));
  CHECK(pseudo_hyperbolic(Complex(0.2, 0.7), Complex(0.2, 0.7)) == doctest::Approx(0.0));
}

TEST_CASE("pseudo_hyperbolic symmetry over random pairs") {
  std::mt19937_64 gen(101);
  for (int i = 0; i < 10000; ++i) {
    const Complex a = oracles::random_disk_point(gen, 0.97);
    const Complex b = oracles::random_disk_point(gen, 0.97);
    CHECK(std::abs(pseudo_hyperbolic(a, b) - pseudo_hyperbolic(b, a)) < 1e-14);
  }
}

TEST_CASE("Schwarz-Pick equality for automorphisms") {
  SUBCASE("spot check") {
    const Complex a(0.5, 0.0), p(0.2, 0.1);
    const double lhs = (1.0 - std::norm(p)) * std::abs(mobius_derivative(a, p));
    const double rhs = 1.0 - std::norm(mobius_value(a, p));
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
  SUBCASE("random sweep") {
    std::mt19937_64 gen(202);
    for (int i = 0; i < 10000; ++i) {
      const Complex a = oracles::random_disk_point(gen, 0.95);
      const Complex p = oracles::random_disk_point(gen, 0.95);
      const double lhs = (1.0 - std::norm(p)) * std::abs(mobius_derivative(a, p));
      const double rhs = 1.0 - std::norm(mobius_value(a, p));
      CHECK(std::abs(lhs - rhs) < 1e-12);
    }
  }
}

TEST_CASE("involution over random pairs") {
  std::mt19937_64 gen(303);
  for (int i = 0; i < 10000; ++i) {
    const Complex a = oracles::random_disk_point(gen, 0.95);
    const Complex p = oracles::random_disk_point(gen, 0.95);
    CHECK(std::abs(mobius_value(a, mobius_value(a, p)) - p) < 1e-12);
  }
}

TEST_CASE("tree and closed form agree") {
  std::mt19937_64 gen(404);
  const Complex a(0.3, -0.55);
  const ExprPtr tree = make_mobius(a);
  const ExprPtr dtree = derivative(tree);
  for (int i = 0; i < 100; ++i) {
    const Complex p = oracles::random_disk_point(gen, 0.9);
    CHECK(std::abs(eval(tree, p) - mobius_value(a, p)) < 1e-15);
    CHECK(std::abs(eval(dtree, p) - mobius_derivative(a, p)) < 1e-14);
  }
}

}  // TEST_SUITE
