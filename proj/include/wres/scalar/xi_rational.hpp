#pragma once

#include <complex>
#include <compare>
#include <string>

#include "wres/scalar/polynomial.hpp"

namespace wres {

// N(x) / ((x - i)^a (x + i)^b), kept reduced: N(i) != 0 when a > 0, N(-i) != 0 when b > 0.
class XiNRational {
 public:
  XiNRational() = default;
  XiNRational(const GaussianRational& c) : num_(c) {}
  XiNRational(Polynomial numerator, int plus_order = 0, int minus_order = 0);

  // x^q (1 + x^2)^p, p of either sign
  static XiNRational power_form(int q, int p);

  const Polynomial& numerator() const { return num_; }
  int plus_order() const { return plus_; }    // pole order at +i
  int minus_order() const { return minus_; }  // pole order at -i
  int denominator_degree() const { return plus_ + minus_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return plus_ == 0 && minus_ == 0; }
  bool is_constant() const { return is_polynomial() && num_.degree() <= 0; }

  XiNRational& operator+=(const XiNRational& o);
  XiNRational& operator-=(const XiNRational& o);
  XiNRational& operator*=(const XiNRational& o);
  XiNRational& operator*=(const GaussianRational& s);
  friend XiNRational operator+(XiNRational a, const XiNRational& b) { return a += b; }
  friend XiNRational operator-(XiNRational a, const XiNRational& b) { return a -= b; }
  friend XiNRational operator*(XiNRational a, const XiNRational& b) { return a *= b; }
  friend XiNRational operator*(XiNRational a, const GaussianRational& s) { return a *= s; }
  XiNRational operator-() const { return *this * GaussianRational(-1); }

  friend bool operator==(const XiNRational&, const XiNRational&) = default;
  friend std::strong_ordering operator<=>(const XiNRational& a, const XiNRational& b);

  std::complex<double> operator()(std::complex<double> x) const;
  GaussianRational operator()(const GaussianRational& x) const;  // throws at a pole

  std::string to_string() const;

 private:
  void reduce();
  Polynomial num_;
  int plus_ = 0;
  int minus_ = 0;
};

XiNRational derivative(const XiNRational& f, int order = 1);

}  // namespace wres
