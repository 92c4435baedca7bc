#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "wres/scalar/exact_scalar.hpp"
#include "wres/symbol/restricted.hpp"

namespace wres {

// Integral of prod xi_j^{a_j} over the unit sphere S^{m-1}, m = exponent.size().
// For m = 3 the value is a rational multiple of Omega3; otherwise a rational times a power of pi.
ExactScalar moment(const std::vector<int>& exponent);
inline ExactScalar moment(const XiPrimeMonomial& a) { return moment(std::vector<int>(a.begin(), a.end())); }

enum class BasisElement {
  TangentialMetric,      // g(X^T, Y^T) h'(0)
  NormalProduct,         // X_n Y_n h'(0)
  NormalDerivative,      // X_n dY_n/dx_n
  TangentialDerivative,  // X^T(Y_n)
};

std::string basis_label(BasisElement e);
BasisElement parse_basis_label(const std::string& s);  // throws std::invalid_argument
inline constexpr BasisElement kBasis[] = {BasisElement::TangentialMetric, BasisElement::NormalProduct,
                                          BasisElement::NormalDerivative, BasisElement::TangentialDerivative};

class BoundaryExpression {
 public:
  const std::map<BasisElement, ExactScalar>& coefficients() const { return c_; }
  ExactScalar coefficient(BasisElement e) const;
  bool is_zero() const { return c_.empty(); }

  void add(BasisElement e, const ExactScalar& v);
  BoundaryExpression& operator+=(const BoundaryExpression& o);
  BoundaryExpression& operator-=(const BoundaryExpression& o);
  BoundaryExpression& operator*=(const ExactScalar& s);
  friend BoundaryExpression operator+(BoundaryExpression a, const BoundaryExpression& b) { return a += b; }
  friend BoundaryExpression operator-(BoundaryExpression a, const BoundaryExpression& b) { return a -= b; }
  friend BoundaryExpression operator*(BoundaryExpression a, const ExactScalar& s) { return a *= s; }
  friend bool operator==(const BoundaryExpression&, const BoundaryExpression&) = default;

  std::string to_string() const;

 private:
  std::map<BasisElement, ExactScalar> c_;
};

class ContractionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// xi_n already integrated out: coefficient per (boundary monomial, xi' monomial)
using SphereIntegrand = std::map<ScalarKey, ExactScalar>;

// Integrate over |xi'| = 1 and express the result on the output basis.
// Throws ContractionError when the result has a component off the basis.
BoundaryExpression contract_sphere(const SphereIntegrand& terms);

// Concrete index form before basis matching; used by diagnostics.
std::map<BoundaryMonomial, ExactScalar> integrate_sphere(const SphereIntegrand& terms);

}  // namespace wres
