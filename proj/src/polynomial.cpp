#include "wres/scalar/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace wres {

Polynomial::Polynomial(const GaussianRational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

Polynomial::Polynomial(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::monomial(int degree, const GaussianRational& c) {
  if (c.is_zero()) return {};
  std::vector<GaussianRational> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear_power(const GaussianRational& root, int e) {
  Polynomial base(std::vector<GaussianRational>{-root, 1});
  Polynomial out(1);
  for (int k = 0; k < e; ++k) out = out * base;
  return out;
}

GaussianRational Polynomial::coefficient(int k) const {
  return k >= 0 && k < int(c_.size()) ? c_[k] : GaussianRational();
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const GaussianRational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& v : c_) v *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussianRational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(v));
}

std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() <=> b.c_.size();
  for (std::size_t k = 0; k < a.c_.size(); ++k) {
    auto c = a.c_[k] <=> b.c_[k];
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<GaussianRational> v(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) v[k - 1] = c_[k] * GaussianRational(long(k));
  return Polynomial(std::move(v));
}

GaussianRational Polynomial::operator()(const GaussianRational& x) const {
  GaussianRational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<double> Polynomial::operator()(std::complex<double> x) const {
  std::complex<double> acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_complex();
  return acc;
}

Polynomial Polynomial::divide_linear(const GaussianRational& root, GaussianRational* remainder) const {
  if (c_.empty()) {
    if (remainder) *remainder = 0;
    return {};
  }
  std::vector<GaussianRational> q(c_.size() - 1);
  GaussianRational carry;
  for (int k = int(c_.size()) - 1; k >= 0; --k) {
    carry = carry * root + c_[k];
    if (k > 0) q[k - 1] = carry;
  }
  if (remainder) *remainder = carry;
  return Polynomial(std::move(q));
}

Polynomial Polynomial::divide(const Polynomial& divisor, Polynomial* remainder) const {
  if (divisor.is_zero()) throw ArithmeticError("polynomial division by zero");
  Polynomial r = *this;
  int dd = divisor.degree();
  GaussianRational lead_inv = divisor.c_.back().inverse();
  std::vector<GaussianRational> q(std::max(0, degree() - dd + 1));
  while (!r.is_zero() && r.degree() >= dd) {
    int shift = r.degree() - dd;
    GaussianRational f = r.c_.back() * lead_inv;
    q[shift] = f;
    for (int k = 0; k <= dd; ++k) r.c_[k + shift] -= f * divisor.c_[k];
    r.trim();
  }
  if (remainder) *remainder = std::move(r);
  return Polynomial(std::move(q));
}

Polynomial Polynomial::shifted(const GaussianRational& shift) const {
  // Horner in the polynomial ring: p(x + s)
  Polynomial xs(std::vector<GaussianRational>{shift, 1});
  Polynomial acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * xs + Polynomial(*it);
  return acc;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    if (c_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    bool unit = c_[k] == GaussianRational(1);
    if (!unit || k == 0) os << "(" << c_[k].to_string() << ")";
    if (k > 0) os << (unit ? "" : "*") << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

}  // namespace wres
