#include "wres/scalar/xi_rational.hpp"

#include <algorithm>
#include <sstream>

namespace wres {

namespace {
const GaussianRational kI = GaussianRational::i();
const GaussianRational kMinusI = -GaussianRational::i();
}  // namespace

XiNRational::XiNRational(Polynomial numerator, int plus_order, int minus_order)
    : num_(std::move(numerator)), plus_(plus_order), minus_(minus_order) {
  if (plus_ < 0 || minus_ < 0) {
    num_ = num_ * Polynomial::linear_power(kI, std::max(0, -plus_)) * Polynomial::linear_power(kMinusI, std::max(0, -minus_));
    plus_ = std::max(0, plus_);
    minus_ = std::max(0, minus_);
  }
  reduce();
}

XiNRational XiNRational::power_form(int q, int p) {
  Polynomial xq = Polynomial::monomial(q);
  if (p >= 0) {
    Polynomial one_plus(std::vector<GaussianRational>{1, 0, 1});
    for (int k = 0; k < p; ++k) xq = xq * one_plus;
    return XiNRational(xq);
  }
  return XiNRational(xq, -p, -p);
}

void XiNRational::reduce() {
  if (num_.is_zero()) {
    plus_ = minus_ = 0;
    return;
  }
  GaussianRational rem;
  while (plus_ > 0) {
    Polynomial q = num_.divide_linear(kI, &rem);
    if (!rem.is_zero()) break;
    num_ = std::move(q);
    --plus_;
  }
  while (minus_ > 0) {
    Polynomial q = num_.divide_linear(kMinusI, &rem);
    if (!rem.is_zero()) break;
    num_ = std::move(q);
    --minus_;
  }
}

XiNRational& XiNRational::operator+=(const XiNRational& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int a = std::max(plus_, o.plus_), b = std::max(minus_, o.minus_);
  Polynomial n1 = num_ * Polynomial::linear_power(kI, a - plus_) * Polynomial::linear_power(kMinusI, b - minus_);
  Polynomial n2 = o.num_ * Polynomial::linear_power(kI, a - o.plus_) * Polynomial::linear_power(kMinusI, b - o.minus_);
  num_ = n1 + n2;
  plus_ = a;
  minus_ = b;
  reduce();
  return *this;
}

XiNRational& XiNRational::operator-=(const XiNRational& o) { return *this += -o; }

XiNRational& XiNRational::operator*=(const XiNRational& o) {
  num_ = num_ * o.num_;
  plus_ += o.plus_;
  minus_ += o.minus_;
  reduce();
  return *this;
}

XiNRational& XiNRational::operator*=(const GaussianRational& s) {
  num_ *= s;
  if (num_.is_zero()) plus_ = minus_ = 0;
  return *this;
}

std::strong_ordering operator<=>(const XiNRational& a, const XiNRational& b) {
  if (auto c = a.plus_ <=> b.plus_; c != 0) return c;
  if (auto c = a.minus_ <=> b.minus_; c != 0) return c;
  return a.num_ <=> b.num_;
}

std::complex<double> XiNRational::operator()(std::complex<double> x) const {
  const std::complex<double> i(0, 1);
  std::complex<double> den = 1;
  for (int k = 0; k < plus_; ++k) den *= x - i;
  for (int k = 0; k < minus_; ++k) den *= x + i;
  return num_(x) / den;
}

GaussianRational XiNRational::operator()(const GaussianRational& x) const {
  GaussianRational den = (x - kI).pow(plus_) * (x + kI).pow(minus_);
  return num_(x) / den;
}

std::string XiNRational::to_string() const {
  std::ostringstream os;
  os << "(" << num_.to_string("xn") << ")";
  if (plus_ > 0) os << "/(xn-i)^" << plus_;
  if (minus_ > 0) os << "/(xn+i)^" << minus_;
  return os.str();
}

XiNRational derivative(const XiNRational& f, int order) {
  if (order < 0) throw std::invalid_argument("negative derivative order");
  XiNRational g = f;
  for (int k = 0; k < order && !g.is_zero(); ++k) {
    // (N'(x-i)(x+i) - a N (x+i) - b N (x-i)) / ((x-i)^{a+1} (x+i)^{b+1})
    const Polynomial& n = g.numerator();
    int a = g.plus_order(), b = g.minus_order();
    if (a == 0 && b == 0) {
      g = XiNRational(n.derivative());
      continue;
    }
    Polynomial xm = Polynomial::linear_power(GaussianRational::i(), 1);
    Polynomial xp = Polynomial::linear_power(-GaussianRational::i(), 1);
    Polynomial top = n.derivative() * xm * xp - n * xp * GaussianRational(a) - n * xm * GaussianRational(b);
    g = XiNRational(top, a + 1, b + 1);
  }
  return g;
}

}  // namespace wres
