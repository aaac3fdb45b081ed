#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "bloch/errors.hpp"

namespace bloch {

using Complex = std::complex<double>;

enum class ExprKind {
  Var,      // the identity z
  Const,    // fixed complex value
  Add,      // a + b
  Sub,      // a - b
  Mul,      // a * b
  Div,      // a / b
  Neg,      // -a
  PowInt,   // a^n, n >= 0
  Compose,  // f(g(z))
  Log,      // principal-branch log
  Exp,      // exp
  Mobius,   // disk automorphism (c - z) / (1 - conj(c) z)
};

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Immutable expression tree for a holomorphic function on the unit disk.
// Nodes are shared; once built a tree is safe to evaluate from any thread.
class Expr {
 public:
  ExprKind kind() const { return kind_; }
  // Const value or Mobius center, depending on kind.
  Complex param() const { return param_; }
  int exponent() const { return exponent_; }
  int arity() const { return static_cast<int>(children_.size()); }
  const ExprPtr& child(int i) const { return children_[static_cast<size_t>(i)]; }

  static ExprPtr var();
  static ExprPtr constant(Complex c);
  static ExprPtr constant(double re) { return constant(Complex(re, 0.0)); }
  static ExprPtr add(ExprPtr a, ExprPtr b);
  static ExprPtr sub(ExprPtr a, ExprPtr b);
  static ExprPtr mul(ExprPtr a, ExprPtr b);
  static ExprPtr div(ExprPtr a, ExprPtr b);
  static ExprPtr neg(ExprPtr a);
  static ExprPtr pow_int(ExprPtr a, int n);
  // compose(f, g) evaluates f(g(z)).
  static ExprPtr compose(ExprPtr f, ExprPtr g);
  static ExprPtr log(ExprPtr a);
  static ExprPtr exp(ExprPtr a);
  static ExprPtr mobius(Complex center);

 private:
  Expr(ExprKind k, Complex param, int exponent, std::vector<ExprPtr> children);

  ExprKind kind_;
  Complex param_;
  int exponent_;
  std::vector<ExprPtr> children_;
};

// Pointwise value of f at z. Throws DivisionNearZero / LogDomain /
// NonFiniteValue on the documented degeneracies; otherwise exact up to
// floating round-off.
Complex eval(const Expr& f, Complex z);
inline Complex eval(const ExprPtr& f, Complex z) { return eval(*f, z); }

// Symbolic derivative: returns g with g(z) = f'(z). Total on well-formed
// trees; the Mobius node differentiates in closed form.
ExprPtr derivative(const Expr& f);
inline ExprPtr derivative(const ExprPtr& f) { return derivative(*f); }

struct SelfMapReport {
  bool is_self_map = false;
  double sup_modulus = 0.0;
  bool boundary_contact = false;
  Complex witness{0.0, 0.0};
};

// Tolerance on the sup|phi| <= 1 test and on the boundary-contact flag.
inline constexpr double kSelfMapTol = 1e-9;
inline constexpr double kBoundaryContactTol = 1e-3;

// Samples |phi| on the circle of radius probe_radius (angular_count points,
// then a local angular refinement around the best sample) and applies the
// maximum principle. Throws NotSelfMap when the sup exceeds 1 + 1e-9.
SelfMapReport validate_self_map(const Expr& phi, int angular_count = 1024,
                                double probe_radius = 1.0 - 1e-6);
inline SelfMapReport validate_self_map(const ExprPtr& phi, int angular_count = 1024,
                                       double probe_radius = 1.0 - 1e-6) {
  return validate_self_map(*phi, angular_count, probe_radius);
}

// Taylor coefficients c_0..c_max_degree recovered by discrete Fourier
// sampling on |z| = fit_radius. Throws PoorConvergence when the partial sum
// fails to reproduce f on |z| = fit_radius / 2 to 1e-8.
std::vector<Complex> taylor_truncate(const Expr& f, int max_degree,
                                     double fit_radius = 0.75);
inline std::vector<Complex> taylor_truncate(const ExprPtr& f, int max_degree,
                                            double fit_radius = 0.75) {
  return taylor_truncate(*f, max_degree, fit_radius);
}

}  // namespace bloch
