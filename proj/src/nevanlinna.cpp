#include "bloch/nevanlinna.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace bloch {

namespace {

constexpr double kResidualTol = 1e-9;
constexpr double kClusterRadius = 1e-7;
constexpr double kCriticalValueTol = 1e-12;
constexpr int kMaxPolynomialDegree = 64;

std::vector<Complex> trim(std::vector<Complex> c) {
  while (c.size() > 1 && std::abs(c.back()) == 0.0) c.pop_back();
  return c;
}

std::vector<Complex> poly_add(const std::vector<Complex>& a, const std::vector<Complex>& b,
                              double sign) {
  std::vector<Complex> out(std::max(a.size(), b.size()), Complex(0.0, 0.0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += sign * b[i];
  return trim(std::move(out));
}

std::optional<std::vector<Complex>> poly_mul(const std::vector<Complex>& a,
                                             const std::vector<Complex>& b) {
  if (a.size() + b.size() > kMaxPolynomialDegree + 2) return std::nullopt;
  std::vector<Complex> out(a.size() + b.size() - 1, Complex(0.0, 0.0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return trim(std::move(out));
}

}  // namespace

Complex PolynomialMap::operator()(Complex z) const {
  Complex acc(0.0, 0.0);
  for (size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
  return acc;
}

Complex PolynomialMap::derivative_at(Complex z) const {
  Complex acc(0.0, 0.0);
  for (size_t i = coeffs.size(); i-- > 1;) acc = acc * z + static_cast<double>(i) * coeffs[i];
  return acc;
}

ExprPtr PolynomialMap::as_expr() const {
  ExprPtr out = Expr::constant(coeffs[0]);
  for (size_t i = 1; i < coeffs.size(); ++i) {
    ExprPtr term = Expr::mul(Expr::constant(coeffs[i]), Expr::pow_int(Expr::var(), static_cast<int>(i)));
    out = Expr::add(std::move(out), std::move(term));
  }
  return out;
}

PolynomialMap make_polynomial_map(std::vector<Complex> coeffs) {
  coeffs = trim(std::move(coeffs));
  if (coeffs.size() < 2) throw InvalidParameter("make_polynomial_map: degree must be >= 1");
  PolynomialMap map;
  map.coeffs = std::move(coeffs);
  map.self_map = validate_self_map(*map.as_expr());
  return map;
}

std::optional<std::vector<Complex>> as_polynomial(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Var:
      return std::vector<Complex>{Complex(0.0, 0.0), Complex(1.0, 0.0)};
    case ExprKind::Const:
      return std::vector<Complex>{e.param()};
    case ExprKind::Add:
    case ExprKind::Sub: {
      auto a = as_polynomial(*e.child(0));
      auto b = as_polynomial(*e.child(1));
      if (!a || !b) return std::nullopt;
      return poly_add(*a, *b, e.kind() == ExprKind::Add ? 1.0 : -1.0);
    }
    case ExprKind::Mul: {
      auto a = as_polynomial(*e.child(0));
      auto b = as_polynomial(*e.child(1));
      if (!a || !b) return std::nullopt;
      return poly_mul(*a, *b);
    }
    case ExprKind::Neg: {
      auto a = as_polynomial(*e.child(0));
      if (!a) return std::nullopt;
      for (auto& c : *a) c = -c;
      return a;
    }
    case ExprKind::PowInt: {
      auto a = as_polynomial(*e.child(0));
      if (!a) return std::nullopt;
      std::vector<Complex> acc{Complex(1.0, 0.0)};
      for (int k = 0; k < e.exponent(); ++k) {
        auto next = poly_mul(acc, *a);
        if (!next) return std::nullopt;
        acc = std::move(*next);
      }
      return acc;
    }
    case ExprKind::Compose: {
      auto outer = as_polynomial(*e.child(0));
      auto inner = as_polynomial(*e.child(1));
      if (!outer || !inner) return std::nullopt;
      std::vector<Complex> acc{Complex(0.0, 0.0)};
      for (size_t i = outer->size(); i-- > 0;) {
        auto shifted = poly_mul(acc, *inner);
        if (!shifted) return std::nullopt;
        acc = poly_add(*shifted, {(*outer)[i]}, 1.0);
      }
      return acc;
    }
    case ExprKind::Div:
    case ExprKind::Log:
    case ExprKind::Exp:
    case ExprKind::Mobius:
      return std::nullopt;
  }
  return std::nullopt;
}

PolynomialMap require_polynomial_map(const Expr& e) {
  auto coeffs = as_polynomial(e);
  if (!coeffs)
    throw UnsupportedSymbol("counting functions are restricted to polynomial self-maps");
  return make_polynomial_map(std::move(*coeffs));
}

PreimageSet preimages(const PolynomialMap& phi, Complex w) {
  if (std::abs(w) >= 1.0) throw PreconditionViolated("preimages: w must lie inside the disk");

  std::vector<Complex> p = phi.coeffs;
  p[0] -= w;
  const int d = static_cast<int>(p.size()) - 1;

  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 1; i < d; ++i) companion(i, i - 1) = Complex(1.0, 0.0);
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -p[static_cast<size_t>(i)] / p[static_cast<size_t>(d)];

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw IllConditioned("preimages: eigenvalue iteration failed to converge");

  std::vector<Complex> roots;
  for (int i = 0; i < d; ++i) {
    Complex z = solver.eigenvalues()(i);
    const Complex dp = phi.derivative_at(z);
    if (std::abs(dp) > 1e-12) z -= (phi(z) - w) / dp;  // one Newton polish
    if (std::abs(z) >= 1.0) continue;
    if (std::abs(phi(z) - w) > kResidualTol) {
      std::ostringstream msg;
      msg << "preimages: residual " << std::abs(phi(z) - w) << " above " << kResidualTol;
      throw IllConditioned(msg.str());
    }
    roots.push_back(z);
  }

  // Cluster coincident roots into multiplicities.
  std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  PreimageSet out;
  for (const Complex& z : roots) {
    if (!out.roots.empty() && std::abs(out.roots.back().z - z) < kClusterRadius)
      ++out.roots.back().multiplicity;
    else
      out.roots.push_back({z, 1});
  }
  return out;
}

double counting_function(const PolynomialMap& phi, Complex w, double gamma) {
  if (!(gamma > 0.0)) throw InvalidParameter("counting_function: gamma must be positive");
  if (std::abs(w) >= 1.0)
    throw PreconditionViolated("counting_function: w must lie inside the disk");
  if (std::abs(w - phi(Complex(0.0, 0.0))) < kCriticalValueTol)
    throw AtCriticalValue("counting_function: w coincides with phi(0)");

  double sum = 0.0;
  for (const auto& root : preimages(phi, w).roots)
    sum += root.multiplicity * std::pow(std::log(1.0 / std::abs(root.z)), gamma);
  return sum;
}

double littlewood_check(const PolynomialMap& phi, double gamma, double r, const DiskRule& rule) {
  const Complex at_zero = phi(Complex(0.0, 0.0));
  if (std::abs(at_zero) < kCriticalValueTol)
    throw PreconditionViolated("littlewood_check: phi(0) must be nonzero");
  if (!(r > 0.0 && r < std::abs(at_zero)))
    throw PreconditionViolated("littlewood_check: need 0 < r < |phi(0)|");

  // (1/r^2) int_{rD} N dA rescales to an integral over the unit disk.
  auto integrand = [&](Complex z) { return counting_function(phi, r * z, gamma); };
  const double mean = disk_integrate(integrand, rule);
  return mean - counting_function(phi, Complex(0.0, 0.0), gamma);
}

double change_of_variable_ratio(const Expr& f, const PolynomialMap& phi, const DiskRule& rule) {
  const ExprPtr phi_expr = phi.as_expr();
  auto lhs_integrand = [&](Complex z) { return std::norm(eval(f, eval(phi_expr, z))); };
  const double lhs = disk_integrate(lhs_integrand, rule);

  const ExprPtr df = derivative(f);
  auto rhs_integrand = [&](Complex w) {
    double counting = 0.0;
    try {
      counting = counting_function(phi, w, 2.0);
    } catch (const AtCriticalValue&) {
      return 0.0;  // measure-zero node
    }
    return std::norm(eval(df, w)) * counting;
  };
  const double rhs =
      std::norm(eval(f, phi(Complex(0.0, 0.0)))) + disk_integrate(rhs_integrand, rule);
  if (rhs == 0.0) return lhs == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
  return lhs / rhs;
}

double sublog_bound_check(const PolynomialMap& phi, int radial_samples, int angular_samples) {
  if (std::abs(phi(Complex(0.0, 0.0))) > kCriticalValueTol)
    throw PreconditionViolated("sublog_bound_check: phi must fix the origin");

  const double two_pi = 2.0 * std::numbers::pi;
  const double r_min = 1e-3, r_max = 1.0 - 1e-3;

  double delta = 0.0;
  std::vector<std::pair<double, double>> outer_samples;  // (radius, N) for |w| >= 1/2
  for (int i = 0; i < radial_samples; ++i) {
    const double u = static_cast<double>(i) / (radial_samples - 1);
    const double r = r_min * std::pow(r_max / r_min, u);
    for (int k = 0; k < angular_samples; ++k) {
      const Complex w = std::polar(r, two_pi * k / angular_samples);
      const double counting = counting_function(phi, w, 2.0);
      delta = std::max(delta, std::norm(w) * counting);
      if (r >= 0.5) outer_samples.emplace_back(r, counting);
    }
  }

  const double log2 = std::log(2.0);
  double margin = std::numeric_limits<double>::infinity();
  for (const auto& [r, counting] : outer_samples) {
    const double bound = 4.0 * delta / (log2 * log2) * std::pow(std::log(1.0 / r), 2.0);
    margin = std::min(margin, bound - counting);
  }
  return margin;
}

}  // namespace bloch
