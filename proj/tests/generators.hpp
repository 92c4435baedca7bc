#pragma once

// Hand-rolled random generators for property tests.

#include <cstdint>
#include <random>

#include "wres/scalar/exact_scalar.hpp"
#include "wres/scalar/xi_rational.hpp"

namespace wres::testgen {

inline std::mt19937_64& rng() {
  static std::mt19937_64 r(20240611);
  return r;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline Rational rational(int range = 12, int max_den = 9) {
  Rational q(uniform(-range, range), uniform(1, max_den));
  q.canonicalize();
  return q;
}

inline GaussianRational gaussian(int range = 12, int max_den = 9) {
  return {rational(range, max_den), rational(range, max_den)};
}

inline Polynomial polynomial(int max_degree) {
  std::vector<GaussianRational> c(uniform(0, max_degree) + 1);
  for (auto& v : c) v = gaussian(6, 5);
  return Polynomial(std::move(c));
}

inline XiNRational xi_rational(int max_order = 4, int max_degree = 4) {
  return XiNRational(polynomial(max_degree), uniform(0, max_order), uniform(0, max_order));
}

// numerator degree <= denominator degree - 2, at least one pole at +i
inline XiNRational integrable_rational(int max_order = 5) {
  int a = uniform(1, max_order), b = uniform(1, max_order);
  int max_deg = a + b - 2;
  std::vector<GaussianRational> c(uniform(0, max_deg) + 1);
  for (auto& v : c) v = gaussian(6, 5);
  return XiNRational(Polynomial(std::move(c)), a, b);
}

inline ExactScalar exact_scalar() {
  ExactScalar s;
  int terms = uniform(0, 3);
  for (int t = 0; t < terms; ++t) s += ExactScalar(gaussian(), uniform(0, 2), uniform(0, 2));
  return s;
}

}  // namespace wres::testgen
