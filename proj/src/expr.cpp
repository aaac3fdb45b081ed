#include "bloch/expr.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

namespace bloch {

namespace {

constexpr double kDenominatorFloor = 1e-300;
constexpr double kLogFloor = 1e-300;

void require(bool ok, const char* what) {
  if (!ok) throw InvalidParameter(what);
}

}  // namespace

Expr::Expr(ExprKind k, Complex param, int exponent, std::vector<ExprPtr> children)
    : kind_(k), param_(param), exponent_(exponent), children_(std::move(children)) {}

ExprPtr Expr::var() {
  static const ExprPtr z{new Expr(ExprKind::Var, Complex(), 0, {})};
  return z;
}

ExprPtr Expr::constant(Complex c) {
  require(std::isfinite(c.real()) && std::isfinite(c.imag()), "constant: non-finite value");
  return ExprPtr(new Expr(ExprKind::Const, c, 0, {}));
}

ExprPtr Expr::add(ExprPtr a, ExprPtr b) {
  require(a && b, "add: null child");
  return ExprPtr(new Expr(ExprKind::Add, Complex(), 0, {std::move(a), std::move(b)}));
}

ExprPtr Expr::sub(ExprPtr a, ExprPtr b) {
  require(a && b, "sub: null child");
  return ExprPtr(new Expr(ExprKind::Sub, Complex(), 0, {std::move(a), std::move(b)}));
}

ExprPtr Expr::mul(ExprPtr a, ExprPtr b) {
  require(a && b, "mul: null child");
  return ExprPtr(new Expr(ExprKind::Mul, Complex(), 0, {std::move(a), std::move(b)}));
}

ExprPtr Expr::div(ExprPtr a, ExprPtr b) {
  require(a && b, "div: null child");
  return ExprPtr(new Expr(ExprKind::Div, Complex(), 0, {std::move(a), std::move(b)}));
}

ExprPtr Expr::neg(ExprPtr a) {
  require(a != nullptr, "neg: null child");
  return ExprPtr(new Expr(ExprKind::Neg, Complex(), 0, {std::move(a)}));
}

ExprPtr Expr::pow_int(ExprPtr a, int n) {
  require(a != nullptr, "pow_int: null child");
  require(n >= 0, "pow_int: exponent must be >= 0");
  return ExprPtr(new Expr(ExprKind::PowInt, Complex(), n, {std::move(a)}));
}

ExprPtr Expr::compose(ExprPtr f, ExprPtr g) {
  require(f && g, "compose: null child");
  return ExprPtr(new Expr(ExprKind::Compose, Complex(), 0, {std::move(f), std::move(g)}));
}

ExprPtr Expr::log(ExprPtr a) {
  require(a != nullptr, "log: null child");
  return ExprPtr(new Expr(ExprKind::Log, Complex(), 0, {std::move(a)}));
}

ExprPtr Expr::exp(ExprPtr a) {
  require(a != nullptr, "exp: null child");
  return ExprPtr(new Expr(ExprKind::Exp, Complex(), 0, {std::move(a)}));
}

ExprPtr Expr::mobius(Complex center) {
  require(std::abs(center) < 1.0, "mobius: center must satisfy |a| < 1");
  return ExprPtr(new Expr(ExprKind::Mobius, center, 0, {}));
}

namespace {

Complex pow_by_squaring(Complex base, int n) {
  Complex acc(1.0, 0.0);
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

Complex eval_node(const Expr* f, Complex z) {
  switch (f->kind()) {
    case ExprKind::Var:
      return z;
    case ExprKind::Const:
      return f->param();
    case ExprKind::Add:
      return eval_node(f->child(0).get(), z) + eval_node(f->child(1).get(), z);
    case ExprKind::Sub:
      return eval_node(f->child(0).get(), z) - eval_node(f->child(1).get(), z);
    case ExprKind::Mul:
      return eval_node(f->child(0).get(), z) * eval_node(f->child(1).get(), z);
    case ExprKind::Div: {
      const Complex num = eval_node(f->child(0).get(), z);
      const Complex den = eval_node(f->child(1).get(), z);
      if (std::abs(den) < kDenominatorFloor) throw DivisionNearZero("eval: denominator modulus below 1e-300");
      return num / den;
    }
    case ExprKind::Neg:
      return -eval_node(f->child(0).get(), z);
    case ExprKind::PowInt:
      return pow_by_squaring(eval_node(f->child(0).get(), z), f->exponent());
    case ExprKind::Compose:
      return eval_node(f->child(0).get(), eval_node(f->child(1).get(), z));
    case ExprKind::Log: {
      const Complex arg = eval_node(f->child(0).get(), z);
      if (std::abs(arg) < kLogFloor) throw LogDomain("eval: log argument modulus below 1e-300");
      return std::log(arg);
    }
    case ExprKind::Exp:
      return std::exp(eval_node(f->child(0).get(), z));
    case ExprKind::Mobius: {
      const Complex a = f->param();
      const Complex den = Complex(1.0, 0.0) - std::conj(a) * z;
      if (std::abs(den) < kDenominatorFloor) throw DivisionNearZero("eval: mobius denominator vanished");
      return (a - z) / den;
    }
  }
  throw Error("eval: malformed expression node");
}

}  // namespace

Complex eval(const Expr& f, Complex z) {
  const Complex v = eval_node(&f, z);
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw NonFiniteValue("eval: result is not finite");
  return v;
}

namespace {

bool is_const(const ExprPtr& e, Complex c) {
  return e->kind() == ExprKind::Const && e->param() == c;
}

// Constructors that fold the trivial zero/one factors produced by the
// differentiation rules, so derivative trees stay shallow.
ExprPtr mul_s(ExprPtr a, ExprPtr b) {
  if (is_const(a, Complex(0.0, 0.0)) || is_const(b, Complex(0.0, 0.0))) return Expr::constant(0.0);
  if (is_const(a, Complex(1.0, 0.0))) return b;
  if (is_const(b, Complex(1.0, 0.0))) return a;
  return Expr::mul(std::move(a), std::move(b));
}

ExprPtr add_s(ExprPtr a, ExprPtr b) {
  if (is_const(a, Complex(0.0, 0.0))) return b;
  if (is_const(b, Complex(0.0, 0.0))) return a;
  return Expr::add(std::move(a), std::move(b));
}

ExprPtr diff(const ExprPtr& f);

ExprPtr diff_node(const Expr& f) {
  switch (f.kind()) {
    case ExprKind::Var:
      return Expr::constant(1.0);
    case ExprKind::Const:
      return Expr::constant(0.0);
    case ExprKind::Add:
      return add_s(diff(f.child(0)), diff(f.child(1)));
    case ExprKind::Sub: {
      ExprPtr db = diff(f.child(1));
      if (is_const(db, Complex(0.0, 0.0))) return diff(f.child(0));
      return Expr::sub(diff(f.child(0)), std::move(db));
    }
    case ExprKind::Mul:
      return add_s(mul_s(diff(f.child(0)), f.child(1)), mul_s(f.child(0), diff(f.child(1))));
    case ExprKind::Div: {
      // (a/b)' = (a'b - ab') / b^2
      ExprPtr num = Expr::sub(mul_s(diff(f.child(0)), f.child(1)), mul_s(f.child(0), diff(f.child(1))));
      return Expr::div(std::move(num), Expr::pow_int(f.child(1), 2));
    }
    case ExprKind::Neg:
      return Expr::neg(diff(f.child(0)));
    case ExprKind::PowInt: {
      const int n = f.exponent();
      if (n == 0) return Expr::constant(0.0);
      ExprPtr scaled = mul_s(Expr::constant(static_cast<double>(n)),
                             Expr::pow_int(f.child(0), n - 1));
      return mul_s(std::move(scaled), diff(f.child(0)));
    }
    case ExprKind::Compose:
      // (f o g)' = (f' o g) * g'
      return mul_s(Expr::compose(diff(f.child(0)), f.child(1)), diff(f.child(1)));
    case ExprKind::Log:
      return Expr::div(diff(f.child(0)), f.child(0));
    case ExprKind::Exp:
      return mul_s(Expr::exp(f.child(0)), diff(f.child(0)));
    case ExprKind::Mobius: {
      // sigma_a'(z) = -(1 - |a|^2) / (1 - conj(a) z)^2
      const Complex a = f.param();
      const double one_minus = 1.0 - std::norm(a);
      ExprPtr den = Expr::pow_int(
          Expr::sub(Expr::constant(1.0), mul_s(Expr::constant(std::conj(a)), Expr::var())), 2);
      return Expr::div(Expr::constant(Complex(-one_minus, 0.0)), std::move(den));
    }
  }
  throw Error("derivative: malformed expression node");
}

ExprPtr diff(const ExprPtr& f) { return diff_node(*f); }

}  // namespace

ExprPtr derivative(const Expr& f) { return diff_node(f); }

SelfMapReport validate_self_map(const Expr& phi, int angular_count, double probe_radius) {
  if (angular_count < 256) throw InvalidParameter("validate_self_map: angular count must be >= 256");
  if (!(probe_radius > 0.0 && probe_radius < 1.0))
    throw InvalidParameter("validate_self_map: probe radius must lie in (0,1)");

  const double two_pi = 2.0 * std::numbers::pi;
  auto modulus_at = [&](double theta) {
    return std::abs(eval(phi, std::polar(probe_radius, theta)));
  };

  double best_theta = 0.0;
  double best = -1.0;
  for (int k = 0; k < angular_count; ++k) {
    const double theta = two_pi * k / angular_count;
    const double m = modulus_at(theta);
    if (m > best) {
      best = m;
      best_theta = theta;
    }
  }

  // Golden-section refinement in angle around the best sample.
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = best_theta - two_pi / angular_count;
  double hi = best_theta + two_pi / angular_count;
  double x1 = hi - gr * (hi - lo);
  double x2 = lo + gr * (hi - lo);
  double f1 = modulus_at(x1);
  double f2 = modulus_at(x2);
  for (int it = 0; it < 80 && hi - lo > 1e-13; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = modulus_at(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = modulus_at(x1);
    }
  }
  const double refined_theta = (f1 > f2) ? x1 : x2;
  const double refined = std::max(f1, f2);
  if (refined > best) {
    best = refined;
    best_theta = refined_theta;
  }

  SelfMapReport report;
  report.sup_modulus = best;
  report.witness = std::polar(probe_radius, best_theta);
  report.boundary_contact = best > 1.0 - kBoundaryContactTol;
  report.is_self_map = best <= 1.0 + kSelfMapTol;
  if (!report.is_self_map) {
    std::ostringstream msg;
    msg << "validate_self_map: sup|phi| = " << best << " exceeds 1";
    throw NotSelfMap(msg.str());
  }
  return report;
}

std::vector<Complex> taylor_truncate(const Expr& f, int max_degree, double fit_radius) {
  if (max_degree < 0 || max_degree > 512)
    throw InvalidParameter("taylor_truncate: degree must lie in [0, 512]");
  if (!(fit_radius > 0.0 && fit_radius < 1.0))
    throw InvalidParameter("taylor_truncate: fit radius must lie in (0,1)");

  const int samples = 2048;
  const double two_pi = 2.0 * std::numbers::pi;
  std::vector<Complex> values(samples);
  for (int j = 0; j < samples; ++j)
    values[static_cast<size_t>(j)] = eval(f, std::polar(fit_radius, two_pi * j / samples));

  std::vector<Complex> coeffs(static_cast<size_t>(max_degree) + 1);
  for (int k = 0; k <= max_degree; ++k) {
    Complex acc(0.0, 0.0);
    for (int j = 0; j < samples; ++j) {
      const double angle = -two_pi * j * k / samples;
      acc += values[static_cast<size_t>(j)] * std::polar(1.0, angle);
    }
    coeffs[static_cast<size_t>(k)] = acc / (static_cast<double>(samples) * std::pow(fit_radius, k));
  }

  // Residual audit half-way into the fit circle.
  const double check_radius = fit_radius / 2.0;
  double residual = 0.0;
  for (int j = 0; j < 128; ++j) {
    const Complex z = std::polar(check_radius, two_pi * j / 128.0);
    Complex horner(0.0, 0.0);
    for (int k = max_degree; k >= 0; --k) horner = horner * z + coeffs[static_cast<size_t>(k)];
    residual = std::max(residual, std::abs(eval(f, z) - horner));
  }
  if (residual > 1e-8) {
    std::ostringstream msg;
    msg << "taylor_truncate: residual " << residual << " exceeds 1e-8";
    throw PoorConvergence(msg.str());
  }
  return coeffs;
}

}  // namespace bloch
