#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bloch/quadrature.hpp"
#include "oracles.hpp"

using namespace bloch;

TEST_SUITE("quadrature") {

TEST_CASE("rule validity") {
  const DiskRule rule = build_rule(64, 256, 2.0);
  double mass = 0.0;
  double prev = 0.0;
  for (const auto& node : rule.radial) {
    CHECK(node.r > prev);
    CHECK(node.r < 1.0);
    prev = node.r;
    mass += node.weight;
  }
  CHECK(std::abs(mass - 1.0) < 1e-12);

  CHECK_THROWS_AS(build_rule(8, 256, 2.0), InvalidParameter);
  CHECK_THROWS_AS(build_rule(64, 16, 2.0), InvalidParameter);
  CHECK_THROWS_AS(build_rule(64, 256, 0.5), InvalidParameter);
}

TEST_CASE("monomial moments") {
  const DiskRule rule = build_rule(64, 256, 2.0);
  CHECK(std::abs(disk_integrate([](Complex) { return 1.0; }, rule) - 1.0) < 1e-12);
  for (int n = 0; n <= 20; ++n) {
    const double moment =
        disk_integrate([n](Complex z) { return std::pow(std::norm(z), n); }, rule);
    CHECK(std::abs(moment - 1.0 / (n + 1)) < 1e-9);
  }
}

TEST_CASE("annulus indicator with graded rule") {
  const DiskRule rule = build_rule(64, 256, 2.0);
  const double t = 0.99;
  const double area =
      disk_integrate([t](Complex z) { return std::abs(z) > t ? 1.0 : 0.0; }, rule);
  CHECK(std::abs(area - (1.0 - t * t)) < 5e-4);
}

TEST_CASE("log-squared integrand radial self-convergence") {
  auto g = [](Complex z) { return std::norm(std::log(2.0 / (Complex(1.0, 0.0) - z))); };
  const double coarse = disk_integrate(g, build_rule(64, 256, 2.0));
  const double fine = disk_integrate(g, build_rule(128, 256, 2.0));
  CHECK(std::isfinite(coarse));
  CHECK(std::abs(coarse - fine) < 1e-6);
}

TEST_CASE("refinement keeps corpus integrals stable") {
  auto g = [](Complex z) { return std::exp(z).real() + std::norm(z); };
  const double coarse = disk_integrate(g, build_rule(64, 256, 2.0));
  const double fine = disk_integrate(g, build_rule(128, 512, 2.0));
  CHECK(std::abs(coarse - fine) < 1e-6 * std::abs(coarse));
}

TEST_CASE("non-finite integrand is reported") {
  CHECK_THROWS_AS(disk_integrate([](Complex z) { return 1.0 / (std::abs(z) - std::abs(z)); },
                                 build_rule(16, 64, 1.0)),
                  NonFiniteIntegrand);
}

TEST_CASE("disk_sup anchors") {
  const SupGrid grid;
  SUBCASE("Bloch integrand of z^2") {
    const SupResult sup =
        disk_sup([](Complex z) { return (1.0 - std::norm(z)) * 2.0 * std::abs(z); }, grid);
    CHECK(sup.value == doctest::Approx(4.0 / (3.0 * std::sqrt(3.0))).epsilon(1e-9));
    CHECK(std::abs(std::abs(sup.argmax) - 1.0 / std::sqrt(3.0)) < 1e-4);
    CHECK(sup.converged);
  }
  SUBCASE("peak at the origin") {
    const SupResult sup = disk_sup([](Complex z) { return 1.0 - std::norm(z); }, grid);
    CHECK(sup.value == doctest::Approx(1.0));
    CHECK(std::abs(sup.argmax) < 1e-6);
  }
  SUBCASE("high-power Bloch integrand approaches 2/e") {
    const int n = 200;
    const SupResult sup = disk_sup(
        [n](Complex z) {
          return (1.0 - std::norm(z)) * n * std::pow(std::abs(z), n - 1);
        },
        grid);
    CHECK(sup.value == doctest::Approx(oracles::bloch_monomial_seminorm(n)).epsilon(1e-8));
    CHECK(std::abs(sup.value - 2.0 / std::numbers::e) < 0.01 * (2.0 / std::numbers::e));
  }
}

TEST_CASE("disk_sup dominates every grid sample") {
  const SupGrid grid{24, 96, 1.0 - 1e-6};
  auto g = [](Complex z) { return std::abs(std::sin(3.0 * z.real()) * std::cos(2.0 * z.imag())); };
  const SupResult sup = disk_sup(g, grid);
  for (const Complex& z : grid.points()) CHECK(sup.value >= g(z) - 1e-15);
}

TEST_CASE("gauss_legendre nodes integrate polynomials exactly") {
  std::vector<double> x, w;
  gauss_legendre(24, x, w);
  double total = 0.0, quartic = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    total += w[i];
    quartic += w[i] * std::pow(x[i], 4);
  }
  CHECK(std::abs(total - 2.0) < 1e-13);
  CHECK(std::abs(quartic - 2.0 / 5.0) < 1e-13);
}

}  // TEST_SUITE
