#include "wres/scalar/gaussian_rational.hpp"

#include <ostream>
#include <sstream>

namespace wres {

std::string rational_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational '" + s + "'");
  if (q.get_den() == 0) throw ArithmeticError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

GaussianRational::GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero in Q(i)");
  Rational n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational GaussianRational::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  GaussianRational result = 1, base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(o.im_) == 0) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  if (sgn(im_) == 0) {
    im_ = re_ * o.im_;
    re_ *= o.re_;
    return *this;
  }
  Rational r = re_ * o.re_ - im_ * o.im_;
  im_ = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw ArithmeticError("division by zero in Q(i)");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b) {
  int c = cmp(a.re_, b.re_);
  if (c == 0) c = cmp(a.im_, b.im_);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return rational_string(re_);
  auto imag_part = [](const Rational& v) {
    Rational a = abs(v);
    if (a == 1) return std::string("i");
    if (a.get_den() == 1) return a.get_num().get_str() + "i";
    return a.get_num().get_str() + "i/" + a.get_den().get_str();
  };
  if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + imag_part(im_);
  // common denominator form: sign(p+qi)/d
  mpz_class d;
  mpz_lcm(d.get_mpz_t(), re_.get_den_mpz_t(), im_.get_den_mpz_t());
  Rational rs = re_ * d, is = im_ * d;
  bool neg = sgn(rs) < 0;
  if (neg) {
    rs = -rs;
    is = -is;
  }
  std::ostringstream os;
  if (neg) os << "-";
  os << "(" << rs.get_num().get_str() << (sgn(is) < 0 ? "-" : "+");
  Rational ai = abs(is);
  if (ai != 1) os << ai.get_num().get_str();
  os << "i)";
  if (d != 1) os << "/" << d.get_str();
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

}  // namespace wres
