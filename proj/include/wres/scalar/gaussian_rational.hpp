#pragma once

#include <complex>
#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace wres {

using Rational = mpq_class;

class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// p/q with q > 0, "p" when q == 1
std::string rational_string(const Rational& q);
Rational parse_rational(const std::string& s);

// Element of Q(i).
class GaussianRational {
 public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(int re) : re_(re), im_(0) {}
  GaussianRational(long re) : re_(re), im_(0) {}
  GaussianRational(Rational re, Rational im = 0);

  static GaussianRational i() { return GaussianRational(0, 1); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational inverse() const;
  GaussianRational pow(int e) const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  // lexicographic on (re, im); only used for canonical ordering
  friend std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b);

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  // "a", "bi", "a+bi", "-(a+bi)/d" style rendering
  std::string to_string() const;

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

// Eigen expects these free functions for custom scalars.
inline const GaussianRational& conj(const GaussianRational& z) { return z; }
inline const GaussianRational& real(const GaussianRational& z) { return z; }
inline GaussianRational imag(const GaussianRational&) { return 0; }
inline GaussianRational abs2(const GaussianRational& z) { return z * z; }

}  // namespace wres
