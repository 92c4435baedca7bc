#pragma once

#include <map>
#include <vector>

#include "wres/symbol/symbol_sum.hpp"

namespace wres {

// Symbols restricted to |xi'| = 1: the xi_n dependence becomes a rational function.
struct RestrictedKey {
  BoundaryMonomial boundary;
  XiPrimeMonomial xi_prime{};
  XiNRational xi_n;

  friend bool operator==(const RestrictedKey&, const RestrictedKey&) = default;
  friend auto operator<=>(const RestrictedKey& a, const RestrictedKey& b) {
    if (auto c = a.boundary <=> b.boundary; c != 0) return c;
    if (auto c = a.xi_prime <=> b.xi_prime; c != 0) return c;
    return a.xi_n <=> b.xi_n;
  }
};

class RestrictedSum {
 public:
  const std::map<RestrictedKey, ExactMatrix>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const RestrictedKey& key, const ExactMatrix& m);
  RestrictedSum& operator+=(const RestrictedSum& o);
  RestrictedSum& operator-=(const RestrictedSum& o);
  RestrictedSum& operator*=(const GaussianRational& s);
  friend RestrictedSum operator+(RestrictedSum a, const RestrictedSum& b) { return a += b; }
  friend RestrictedSum operator-(RestrictedSum a, const RestrictedSum& b) { return a -= b; }
  friend RestrictedSum operator*(RestrictedSum a, const GaussianRational& s) { return a *= s; }

 private:
  std::map<RestrictedKey, ExactMatrix> terms_;
};

RestrictedSum restrict_to_sphere(const SymbolSum& s);
RestrictedSum d_xi_n(const RestrictedSum& s, int order = 1);
// apply f to every xi_n part, merging like terms
template <typename F>
RestrictedSum map_xi_n(const RestrictedSum& s, F&& f) {
  RestrictedSum out;
  for (const auto& [k, m] : s.terms()) {
    RestrictedKey kk = k;
    kk.xi_n = f(k.xi_n);
    if (!kk.xi_n.is_zero()) out.add(kk, m);
  }
  return out;
}

// True when the sum vanishes as a function on |xi'| = 1 (xi'-monomials reduced modulo |xi'|^2 = 1).
bool vanishes_on_sphere(const RestrictedSum& s);

struct ScalarKey {
  BoundaryMonomial boundary;
  XiPrimeMonomial xi_prime{};
  friend bool operator==(const ScalarKey&, const ScalarKey&) = default;
  friend auto operator<=>(const ScalarKey&, const ScalarKey&) = default;
};

// Traced integrand: sum over (boundary, xi') of rational functions of xi_n.
struct ScalarIntegrand {
  std::map<ScalarKey, XiNRational> terms;
  void add(const ScalarKey& k, const XiNRational& r);
  ScalarIntegrand& operator*=(const GaussianRational& s);
  bool is_zero() const { return terms.empty(); }
};

// tr[a * b] termwise
ScalarIntegrand trace_product(const RestrictedSum& a, const RestrictedSum& b);

NumericMatrix evaluate(const RestrictedSum& s, const SamplePoint& pt);
std::complex<double> evaluate(const ScalarIntegrand& s, const SamplePoint& pt);

}  // namespace wres
