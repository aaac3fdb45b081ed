#pragma once

#include <optional>
#include <vector>

#include "bloch/expr.hpp"
#include "bloch/quadrature.hpp"

namespace bloch {

// Polynomial self-map of the disk; the only symbol class for which preimage
// counting is complete and certified.
struct PolynomialMap {
  std::vector<Complex> coeffs;  // c_0..c_d with c_d != 0
  SelfMapReport self_map;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Complex operator()(Complex z) const;
  Complex derivative_at(Complex z) const;
  ExprPtr as_expr() const;
};

// Validates the coefficient list as a self-map (throws NotSelfMap otherwise).
PolynomialMap make_polynomial_map(std::vector<Complex> coeffs);

// Attempts to read an expression tree as a polynomial (degree capped at 64).
// Div/Log/Exp/Mobius nodes make the extraction fail.
std::optional<std::vector<Complex>> as_polynomial(const Expr& e);

// as_polynomial or UnsupportedSymbol, then self-map validation.
PolynomialMap require_polynomial_map(const Expr& e);

struct PreimageSet {
  struct Root {
    Complex z;
    int multiplicity = 1;
  };
  std::vector<Root> roots;
};

// All solutions of phi(z) = w inside the open disk, with multiplicity, via
// companion-matrix eigenvalues plus one Newton polish per root. Roots with
// |z| >= 1 are discarded. Throws IllConditioned when a polished root fails
// the 1e-9 residual test.
PreimageSet preimages(const PolynomialMap& phi, Complex w);

// Sum over preimages of (log 1/|z|)^gamma, counting multiplicity; the empty
// sum is 0. Throws AtCriticalValue when w coincides with phi(0).
double counting_function(const PolynomialMap& phi, Complex w, double gamma);

// Sub-mean-value margin (1/r^2) int_{rD} N_{phi,gamma} dA - N_{phi,gamma}(0).
// Requires phi(0) != 0 and 0 < r < |phi(0)|.
double littlewood_check(const PolynomialMap& phi, double gamma, double r, const DiskRule& rule);

// ||f o phi||_{A^2}^2 divided by |f(phi(0))|^2 + int |f'|^2 N_{phi,2} dA,
// both sides by quadrature. Nodes hitting the critical value are skipped
// (measure zero).
double change_of_variable_ratio(const Expr& f, const PolynomialMap& phi, const DiskRule& rule);

// For phi fixing the origin: computes delta = sup |w|^2 N_{phi,2}(w) over a
// probe grid, then the minimum over {1/2 <= |w| < 1} of
// (4 delta / (log 2)^2) (log 1/|w|)^2 - N_{phi,2}(w).
double sublog_bound_check(const PolynomialMap& phi, int radial_samples = 48,
                          int angular_samples = 64);

}  // namespace bloch
