#include "wres/sphere/sphere.hpp"

#include <mutex>
#include <sstream>

namespace wres {

namespace {

// Gamma(k/2) = q * sqrt(pi)^s
struct HalfGamma {
  Rational q;
  int sqrt_pi;
};

HalfGamma half_gamma(int k) {
  HalfGamma g = k % 2 ? HalfGamma{1, 1} : HalfGamma{1, 0};
  for (int j = k % 2 ? 1 : 2; j < k; j += 2) g.q *= Rational(j, 2);
  return g;
}

ExactScalar moment_uncached(const std::vector<int>& a) {
  const int m = int(a.size());
  int total = 0;
  for (int e : a) {
    if (e % 2) return {};
    total += e;
  }
  if (m == 3) {
    // prod (a_j - 1)!! / (3 * 5 * ... * (1 + |a|)) times the total volume
    Rational num = 1, den = 1;
    for (int e : a)
      for (int j = e - 1; j > 0; j -= 2) num *= j;
    for (int j = m; j <= m + total - 2; j += 2) den *= j;
    return ExactScalar(GaussianRational(num / den), 0, 1);
  }
  // 2 prod Gamma((a_j+1)/2) / Gamma((|a|+m)/2)
  Rational q = 2;
  int sqrt_pi = 0;
  for (int e : a) {
    HalfGamma g = half_gamma(e + 1);
    q *= g.q;
    sqrt_pi += g.sqrt_pi;
  }
  HalfGamma d = half_gamma(total + m);
  q /= d.q;
  sqrt_pi -= d.sqrt_pi;
  return ExactScalar(GaussianRational(q), sqrt_pi / 2, 0);
}

}  // namespace

ExactScalar moment(const std::vector<int>& exponent) {
  if (exponent.size() < 2) throw std::invalid_argument("moment: sphere dimension must be at least 1");
  static std::map<std::vector<int>, ExactScalar> table;
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  auto it = table.find(exponent);
  if (it == table.end()) it = table.emplace(exponent, moment_uncached(exponent)).first;
  return it->second;
}

std::string basis_label(BasisElement e) {
  switch (e) {
    case BasisElement::TangentialMetric: return "g(XT,YT)·h'(0)";
    case BasisElement::NormalProduct: return "XnYn·h'(0)";
    case BasisElement::NormalDerivative: return "Xn·∂nYn";
    case BasisElement::TangentialDerivative: return "XT(Yn)";
  }
  return "?";
}

BasisElement parse_basis_label(const std::string& s) {
  for (BasisElement e : kBasis)
    if (basis_label(e) == s) return e;
  throw std::invalid_argument("unknown basis element: " + s);
}

ExactScalar BoundaryExpression::coefficient(BasisElement e) const {
  auto it = c_.find(e);
  return it == c_.end() ? ExactScalar() : it->second;
}

void BoundaryExpression::add(BasisElement e, const ExactScalar& v) {
  if (v.is_zero()) return;
  ExactScalar& slot = c_[e];
  slot += v;
  if (slot.is_zero()) c_.erase(e);
}

BoundaryExpression& BoundaryExpression::operator+=(const BoundaryExpression& o) {
  for (const auto& [e, v] : o.c_) add(e, v);
  return *this;
}

BoundaryExpression& BoundaryExpression::operator-=(const BoundaryExpression& o) {
  for (const auto& [e, v] : o.c_) add(e, -v);
  return *this;
}

BoundaryExpression& BoundaryExpression::operator*=(const ExactScalar& s) {
  BoundaryExpression out;
  for (const auto& [e, v] : c_) out.add(e, v * s);
  return *this = out;
}

std::string BoundaryExpression::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, v] : c_) {
    if (!first) os << " + ";
    first = false;
    bool compound = v.terms().size() > 1;
    os << (compound ? "(" : "") << v.to_string() << (compound ? ")" : "") << " · " << basis_label(e);
  }
  return os.str();
}

std::map<BoundaryMonomial, ExactScalar> integrate_sphere(const SphereIntegrand& terms) {
  std::map<BoundaryMonomial, ExactScalar> out;
  for (const auto& [k, v] : terms) {
    ExactScalar value = v * moment(k.xi_prime);
    if (value.is_zero()) continue;
    ExactScalar& slot = out[k.boundary];
    slot += value;
    if (slot.is_zero()) out.erase(k.boundary);
  }
  return out;
}

BoundaryExpression contract_sphere(const SphereIntegrand& terms) {
  constexpr int n = kNormal;
  std::array<ExactScalar, kNormal> metric{}, tangential{};
  BoundaryExpression out;
  for (const auto& [b, v] : integrate_sphere(terms)) {
    const bool one_x = b.x_indices.size() == 1, one_y = b.y_indices.size() == 1, one_dy = b.dy_indices.size() == 1;
    if (b.h_prime_degree == 1 && one_x && one_y && b.dy_indices.empty() && b.x_indices[0] == b.y_indices[0]) {
      int j = b.x_indices[0];
      if (j == n)
        out.add(BasisElement::NormalProduct, v);
      else
        metric[j] = v;
      continue;
    }
    if (b.h_prime_degree == 0 && one_x && b.y_indices.empty() && one_dy && b.dy_indices[0].second == n &&
        b.dy_indices[0].first == b.x_indices[0]) {
      int j = b.x_indices[0];
      if (j == n)
        out.add(BasisElement::NormalDerivative, v);
      else
        tangential[j] = v;
      continue;
    }
    throw ContractionError("component off the output basis: " + v.to_string() + " · " + b.to_string());
  }
  for (int j = 1; j < n; ++j) {
    if (metric[j] != metric[0])
      throw ContractionError("tangential X_jY_j coefficients are not isotropic");
    if (tangential[j] != tangential[0])
      throw ContractionError("tangential X_j dY_n/dx_j coefficients are not isotropic");
  }
  out.add(BasisElement::TangentialMetric, metric[0]);
  out.add(BasisElement::TangentialDerivative, tangential[0]);
  return out;
}

}  // namespace wres
