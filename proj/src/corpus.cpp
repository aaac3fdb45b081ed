#include "bloch/corpus.hpp"

#include <cmath>
#include <numbers>

#include "bloch/mobius.hpp"

namespace bloch {

namespace {

ExprPtr z() { return Expr::var(); }
ExprPtr c(double re, double im = 0.0) { return Expr::constant(Complex(re, im)); }
ExprPtr zpow(int n) { return Expr::pow_int(Expr::var(), n); }

ExprPtr scaled(double s, ExprPtr e) { return Expr::mul(c(s), std::move(e)); }

// c0 + c1 z + c2 z^2 + ...
ExprPtr poly(std::initializer_list<double> coeffs) {
  ExprPtr out;
  int k = 0;
  for (double coeff : coeffs) {
    ExprPtr term = (k == 0) ? c(coeff) : scaled(coeff, zpow(k));
    out = out ? Expr::add(std::move(out), std::move(term)) : std::move(term);
    ++k;
  }
  return out;
}

// The weights. All bounded on the closed disk and free of log nodes.
ExprPtr u_one() { return c(1.0); }
ExprPtr u_id() { return z(); }
ExprPtr u_one_minus_z() { return Expr::sub(c(1.0), z()); }
// (1-z)(1+z)/2, a product of affine factors.
ExprPtr u_affine_product() {
  return scaled(0.5, Expr::mul(Expr::sub(c(1.0), z()), Expr::add(c(1.0), z())));
}
ExprPtr u_affine() { return poly({0.5, 0.25}); }
ExprPtr u_square() { return zpow(2); }
ExprPtr u_exp() { return Expr::div(Expr::exp(z()), c(std::numbers::e)); }
ExprPtr u_mobius() { return make_mobius(Complex(0.5, 0.0)); }

// The self-maps.
ExprPtr phi_id() { return z(); }
ExprPtr phi_half() { return scaled(0.5, z()); }
ExprPtr phi_scaled() { return scaled(0.8, z()); }
ExprPtr phi_square() { return zpow(2); }
ExprPtr phi_square_half() { return scaled(0.5, zpow(2)); }
ExprPtr phi_cube() { return zpow(3); }
ExprPtr phi_cayley() { return scaled(0.5, Expr::add(c(1.0), z())); }        // (1+z)/2
ExprPtr phi_parabolic() { return scaled(0.5, Expr::mul(z(), Expr::add(c(1.0), z()))); }  // z(1+z)/2
ExprPtr phi_strict_poly() { return poly({0.0, 0.5, 0.3}); }                 // 0.5z + 0.3z^2
// Automorphism conjugates sigma_a o psi o sigma_a.
ExprPtr conjugate(Complex a, ExprPtr psi) {
  return Expr::compose(make_mobius(a), Expr::compose(std::move(psi), make_mobius(a)));
}
ExprPtr phi_conj_square() { return conjugate(Complex(0.3, 0.0), phi_square()); }
ExprPtr phi_conj_strict() { return conjugate(Complex(0.4, 0.0), phi_half()); }

}  // namespace

std::vector<SymbolPair> bundled_corpus() {
  std::vector<SymbolPair> corpus;
  auto add = [&](const char* label, ExprPtr u, ExprPtr phi) {
    corpus.push_back(make_symbol_pair(std::move(u), std::move(phi), label));
  };

  // Constant weight across the map families.
  add("one_id", u_one(), phi_id());
  add("one_half", u_one(), phi_half());
  add("one_scaled_id", u_one(), phi_scaled());
  add("one_square", u_one(), phi_square());
  add("one_cube", u_one(), phi_cube());
  add("one_cayley", u_one(), phi_cayley());
  add("one_parabolic", u_one(), phi_parabolic());
  add("one_strict_poly", u_one(), phi_strict_poly());
  add("one_conj_square", u_one(), phi_conj_square());
  add("one_conj_strict", u_one(), phi_conj_strict());

  // Identity weight.
  add("id_id", u_id(), phi_id());
  add("id_square", u_id(), phi_square());
  add("id_cayley", u_id(), phi_cayley());
  add("id_parabolic", u_id(), phi_parabolic());

  // Affine and product weights.
  add("one_minus_z_id", u_one_minus_z(), phi_id());
  add("one_minus_z_square", u_one_minus_z(), phi_square());
  add("one_minus_z_cayley", u_one_minus_z(), phi_cayley());
  add("affine_product_id", u_affine_product(), phi_id());
  add("affine_product_parabolic", u_affine_product(), phi_parabolic());
  add("affine_cayley", u_affine(), phi_cayley());
  add("affine_square", u_affine(), phi_square());
  add("affine_strict", u_affine(), phi_scaled());

  // Square, exponential, and automorphism weights.
  add("square_id", u_square(), phi_id());
  add("exp_square", u_exp(), phi_square());
  add("exp_id", u_exp(), phi_id());
  add("mobius_cayley", u_mobius(), phi_cayley());

  return corpus;
}

std::vector<ProductCase> product_norm_library() {
  std::vector<ProductCase> lib;
  auto add = [&](const char* label, ExprPtr g, ExprPtr phi) {
    lib.push_back({std::move(g), std::move(phi), label});
  };

  std::vector<std::pair<const char*, ExprPtr (*)()>> gs = {
      {"g=z", +[]() { return z(); }},
      {"g=z^2", +[]() { return zpow(2); }},
      {"g=z^3", +[]() { return zpow(3); }},
      {"g=z-z^2/2", +[]() { return poly({0.0, 1.0, -0.5}); }},
      {"g=sigma-shift", +[]() {
         return Expr::sub(make_mobius(Complex(0.5, 0.0)), c(0.5));
       }},
      {"g=expm1-half", +[]() { return scaled(0.5, Expr::sub(Expr::exp(z()), c(1.0))); }},
  };
  std::vector<std::pair<const char*, ExprPtr (*)()>> phis = {
      {"phi=z", phi_id},
      {"phi=z/2", phi_half},
      {"phi=z^2", phi_square},
      {"phi=z^2/2", phi_square_half},
      {"phi=z(1+z)/2", phi_parabolic},
      {"phi=0.5z+0.3z^2", phi_strict_poly},
  };
  for (const auto& [glabel, gf] : gs)
    for (const auto& [plabel, pf] : phis)
      add((std::string(glabel) + "," + plabel).c_str(), gf(), pf());
  return lib;
}

std::vector<PolynomialMap> littlewood_polynomials() {
  std::vector<PolynomialMap> out;
  out.push_back(make_polynomial_map({{0.5, 0.0}, {0.5, 0.0}}));              // (1+z)/2
  out.push_back(make_polynomial_map({{0.5, 0.0}, {0.0, 0.0}, {0.3, 0.0}}));  // 0.5 + 0.3z^2
  out.push_back(make_polynomial_map(
      {{0.3, 0.0}, {0.2, 0.0}, {0.0, 0.0}, {0.2, 0.0}}));                    // 0.3 + 0.2z + 0.2z^3
  out.push_back(make_polynomial_map({{0.4, 0.0}, {0.0, 0.0}, {-0.25, 0.0}}));  // 0.4 - 0.25z^2
  out.push_back(make_polynomial_map({{0.5, 0.0}, {0.2, 0.0}, {0.1, 0.0}}));  // 0.5 + 0.2z + 0.1z^2
  out.push_back(make_polynomial_map({{0.6, 0.0}, {0.3, 0.0}}));              // 0.6 + 0.3z
  return out;
}

std::vector<PolynomialMap> origin_fixing_polynomials() {
  std::vector<PolynomialMap> out;
  out.push_back(make_polynomial_map({{0.0, 0.0}, {1.0, 0.0}}));              // z
  out.push_back(make_polynomial_map({{0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}}));  // z^2
  out.push_back(make_polynomial_map({{0.0, 0.0}, {0.5, 0.0}}));              // z/2
  out.push_back(make_polynomial_map({{0.0, 0.0}, {0.0, 0.0}, {0.5, 0.0}}));  // z^2/2
  out.push_back(make_polynomial_map({{0.0, 0.0}, {0.5, 0.0}, {0.5, 0.0}}));  // z(1+z)/2
  return out;
}

std::vector<TestFunction> bloch_test_functions() {
  std::vector<TestFunction> out;
  out.push_back({z(), "f=z"});
  out.push_back({zpow(2), "f=z^2"});
  out.push_back({zpow(3), "f=z^3"});
  out.push_back({poly({0.0, 1.0, -0.5, 0.25}), "f=cubic"});
  out.push_back({Expr::sub(make_mobius(Complex(0.6, 0.0)), c(0.6)), "f=sigma-shift"});
  out.push_back({Expr::log(Expr::div(c(2.0), Expr::sub(c(1.0), scaled(0.8, z())))),
                 "f=log-kernel"});
  out.push_back({Expr::exp(z()), "f=exp"});
  return out;
}

}  // namespace bloch
