#pragma once

#include <array>
#include <complex>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>

#include "wres/clifford/generators.hpp"
#include "wres/scalar/boundary_monomial.hpp"
#include "wres/scalar/xi_rational.hpp"

namespace wres {

// The symbol calculus works at a boundary point of a 4-manifold.
inline constexpr int kDim = 4;
inline constexpr int kNormal = kDim - 1;

using XiPrimeMonomial = std::array<int, kNormal>;

class ModelingError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// boundary * xi'^a * xi_n^q * |xi|^{2p}, matrix-valued.
// tangential_weight w: d/dx_n of the term is (h'/2) w times the term (frame factor of c(xi')).
// opaque terms have no known x-derivative.
struct TermKey {
  BoundaryMonomial boundary;
  XiPrimeMonomial xi_prime{};
  int xi_n_power = 0;
  int norm_power = 0;
  int tangential_weight = 0;
  bool opaque = false;

  friend bool operator==(const TermKey&, const TermKey&) = default;
  friend auto operator<=>(const TermKey&, const TermKey&) = default;
};

TermKey operator*(const TermKey& a, const TermKey& b);

class SymbolSum {
 public:
  SymbolSum() = default;
  SymbolSum(const TermKey& key, const ExactMatrix& m) { add(key, m); }

  const std::map<TermKey, ExactMatrix>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool has_opaque() const;

  void add(const TermKey& key, const ExactMatrix& m);
  SymbolSum& operator+=(const SymbolSum& o);
  SymbolSum& operator-=(const SymbolSum& o);
  SymbolSum& operator*=(const GaussianRational& s);
  friend SymbolSum operator+(SymbolSum a, const SymbolSum& b) { return a += b; }
  friend SymbolSum operator-(SymbolSum a, const SymbolSum& b) { return a -= b; }
  friend SymbolSum operator*(SymbolSum a, const GaussianRational& s) { return a *= s; }
  friend SymbolSum operator*(const GaussianRational& s, SymbolSum a) { return a *= s; }
  friend SymbolSum operator*(const SymbolSum& a, const SymbolSum& b);

  // every term multiplied by a boundary monomial
  SymbolSum with_boundary(const BoundaryMonomial& b) const;
  SymbolSum as_opaque() const;

 private:
  std::map<TermKey, ExactMatrix> terms_;
};

// derivative in xi_j (j = kNormal is xi_n)
SymbolSum d_xi(const SymbolSum& s, int j);
// derivative in x_j at the boundary point; tangential directions vanish
SymbolSum d_x(const SymbolSum& s, int j);
inline SymbolSum x_n_derivative(const SymbolSum& s) { return d_x(s, kNormal); }

// Sample data for numeric evaluation of formal symbols.
struct SamplePoint {
  std::array<double, kNormal> xi_prime{1, 0, 0};
  std::complex<double> xi_n = 0;
  double h_prime = 1;
  std::array<double, kDim> X{};
  std::array<double, kDim> Y{};
  std::array<std::array<double, kDim>, kDim> dY{};  // dY[direction][component]
};

std::complex<double> evaluate(const BoundaryMonomial& b, const SamplePoint& pt);
NumericMatrix evaluate(const SymbolSum& s, const SamplePoint& pt);

}  // namespace wres
