#pragma once

#include <complex>
#include <map>
#include <string>
#include <utility>

#include "wres/scalar/gaussian_rational.hpp"

namespace wres {

// Finite sum of c * pi^a * Omega3^b, Omega3 = vol(S^2) kept formal.
class ExactScalar {
 public:
  using Grade = std::pair<int, int>;  // (pi power, omega power)

  ExactScalar() = default;
  ExactScalar(const GaussianRational& c, int pi_power = 0, int omega_power = 0);
  ExactScalar(int c) : ExactScalar(GaussianRational(c)) {}

  static ExactScalar pi() { return {1, 1, 0}; }
  static ExactScalar omega3() { return {1, 0, 1}; }

  const std::map<Grade, GaussianRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  GaussianRational coefficient(int pi_power, int omega_power) const;

  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator*=(const GaussianRational& c);

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator*(ExactScalar a, const GaussianRational& c) { return a *= c; }
  friend ExactScalar operator*(const GaussianRational& c, ExactScalar a) { return a *= c; }
  ExactScalar operator-() const { return *this * GaussianRational(-1); }

  friend bool operator==(const ExactScalar&, const ExactScalar&) = default;

  std::complex<double> to_complex() const;  // Omega3 -> 4 pi
  std::string to_string() const;

 private:
  void add_term(const Grade& g, const GaussianRational& c);
  std::map<Grade, GaussianRational> terms_;
};

// Omega3 -> 4 pi
ExactScalar substitute_omega(const ExactScalar& s);

}  // namespace wres
