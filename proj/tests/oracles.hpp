#pragma once

// Independent closed-form oracles used to freeze expected values. These must
// stay free of the library's quadrature/sup machinery.

#include <cmath>
#include <complex>
#include <random>

namespace oracles {

using Complex = std::complex<double>;

// sup over r in [0,1) of n r^(n-1) (1 - r^2): the Bloch seminorm of z^n by
// elementary calculus. Max at r^2 = (n-1)/(n+1).
inline double bloch_monomial_seminorm(int n) {
  if (n == 0) return 0.0;
  if (n == 1) return 1.0;
  const double r2 = (n - 1.0) / (n + 1.0);
  return n * std::pow(r2, (n - 1.0) / 2.0) * (2.0 / (n + 1.0));
}

// || sigma_a - a ||_{A^2} from the coefficient series: with t = |a|^2,
// sum_k (1-t)^2 t^(k-1) / (k+1) = (1-t)^2 (-log(1-t) - t) / t^2.
inline double sigma_shift_a2_norm(double t) {
  if (t < 1e-12) return std::sqrt(0.5);
  const double one_minus = 1.0 - t;
  return std::sqrt(one_minus * one_minus * (-std::log(one_minus) - t) / (t * t));
}

// Monomial Bergman moment: ||z^n||_{A^2}^2 = 1/(n+1).
inline double monomial_a2_norm(int n) { return 1.0 / std::sqrt(n + 1.0); }

// Central-difference derivative probe.
template <typename F>
Complex central_difference(F&& f, Complex z, double h = 1e-6) {
  return (f(z + Complex(h, 0.0)) - f(z - Complex(h, 0.0))) / (2.0 * h);
}

// Deterministic uniform double in [0, 1).
inline double rand01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// Uniform point in the closed disk of the given radius.
inline Complex random_disk_point(std::mt19937_64& gen, double radius) {
  const double r = radius * std::sqrt(rand01(gen));
  const double theta = 2.0 * 3.14159265358979323846 * rand01(gen);
  return std::polar(r, theta);
}

}  // namespace oracles
