#pragma once

#include <vector>

#include "bloch/functionals.hpp"
#include "bloch/nevanlinna.hpp"

namespace bloch {

// The bundled sweep corpus: strict self-maps, boundary-contact maps,
// automorphism conjugates, and a spread of bounded log-free weights.
std::vector<SymbolPair> bundled_corpus();

// (g, phi) pairs with g(0) = phi(0) = 0 for the composition product audit.
struct ProductCase {
  ExprPtr g;
  ExprPtr phi;
  std::string label;
};
std::vector<ProductCase> product_norm_library();

// Polynomial self-maps with phi(0) != 0 (sub-mean-value checks).
std::vector<PolynomialMap> littlewood_polynomials();

// Polynomial self-maps fixing the origin (sub-log envelope checks).
std::vector<PolynomialMap> origin_fixing_polynomials();

// Bloch functions used for the oscillation-norm equivalence measurements.
struct TestFunction {
  ExprPtr f;
  std::string label;
};
std::vector<TestFunction> bloch_test_functions();

}  // namespace bloch
