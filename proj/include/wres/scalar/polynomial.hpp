#pragma once

#include <complex>
#include <compare>
#include <string>
#include <vector>

#include "wres/scalar/gaussian_rational.hpp"

namespace wres {

// Univariate polynomial over Q(i), coefficients low to high, no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const GaussianRational& c);
  explicit Polynomial(std::vector<GaussianRational> coeffs);

  static Polynomial monomial(int degree, const GaussianRational& c = 1);
  // (x - root)^e
  static Polynomial linear_power(const GaussianRational& root, int e);

  const std::vector<GaussianRational>& coefficients() const { return c_; }
  GaussianRational coefficient(int k) const;
  int degree() const { return int(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const GaussianRational& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const GaussianRational& s) { return a *= s; }
  Polynomial operator-() const { return *this * GaussianRational(-1); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  friend std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b);

  Polynomial derivative() const;
  GaussianRational operator()(const GaussianRational& x) const;
  std::complex<double> operator()(std::complex<double> x) const;

  // p = q * (x - root) + r, returns q; r written to remainder
  Polynomial divide_linear(const GaussianRational& root, GaussianRational* remainder = nullptr) const;
  // Euclidean division by a nonzero divisor
  Polynomial divide(const Polynomial& divisor, Polynomial* remainder) const;
  // coefficients of p(x + shift)
  Polynomial shifted(const GaussianRational& shift) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<GaussianRational> c_;
};

}  // namespace wres
