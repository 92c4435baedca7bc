#include "wres/symbol/symbol_sum.hpp"

namespace wres {

TermKey operator*(const TermKey& a, const TermKey& b) {
  TermKey k;
  k.boundary = a.boundary * b.boundary;
  for (int j = 0; j < kNormal; ++j) k.xi_prime[j] = a.xi_prime[j] + b.xi_prime[j];
  k.xi_n_power = a.xi_n_power + b.xi_n_power;
  k.norm_power = a.norm_power + b.norm_power;
  k.tangential_weight = a.tangential_weight + b.tangential_weight;
  k.opaque = a.opaque || b.opaque;
  return k;
}

bool SymbolSum::has_opaque() const {
  for (const auto& [k, m] : terms_)
    if (k.opaque) return true;
  return false;
}

void SymbolSum::add(const TermKey& key, const ExactMatrix& m) {
  if (wres::is_zero(m)) return;
  auto [it, inserted] = terms_.try_emplace(key, m);
  if (!inserted) {
    it->second += m;
    if (wres::is_zero(it->second)) terms_.erase(it);
  }
}

SymbolSum& SymbolSum::operator+=(const SymbolSum& o) {
  for (const auto& [k, m] : o.terms_) add(k, m);
  return *this;
}

SymbolSum& SymbolSum::operator-=(const SymbolSum& o) {
  for (const auto& [k, m] : o.terms_) add(k, -m);
  return *this;
}

SymbolSum& SymbolSum::operator*=(const GaussianRational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, m] : terms_) m *= s;
  return *this;
}

SymbolSum operator*(const SymbolSum& a, const SymbolSum& b) {
  SymbolSum out;
  for (const auto& [ka, ma] : a.terms_)
    for (const auto& [kb, mb] : b.terms_) out.add(ka * kb, multiply(ma, mb));
  return out;
}

SymbolSum SymbolSum::with_boundary(const BoundaryMonomial& b) const {
  SymbolSum out;
  for (const auto& [k, m] : terms_) {
    TermKey kk = k;
    kk.boundary *= b;
    out.add(kk, m);
  }
  return out;
}

SymbolSum SymbolSum::as_opaque() const {
  SymbolSum out;
  for (const auto& [k, m] : terms_) {
    TermKey kk = k;
    kk.opaque = true;
    out.add(kk, m);
  }
  return out;
}

SymbolSum d_xi(const SymbolSum& s, int j) {
  if (j < 0 || j >= kDim) throw std::out_of_range("covector index out of range");
  SymbolSum out;
  for (const auto& [k, m] : s.terms()) {
    const int e = j < kNormal ? k.xi_prime[j] : k.xi_n_power;
    if (e > 0) {
      TermKey kk = k;
      (j < kNormal ? kk.xi_prime[j] : kk.xi_n_power) -= 1;
      out.add(kk, m * GaussianRational(e));
    }
    if (k.norm_power != 0) {
      // d|xi|^{2p} = 2p xi_j |xi|^{2p-2}
      TermKey kk = k;
      (j < kNormal ? kk.xi_prime[j] : kk.xi_n_power) += 1;
      kk.norm_power -= 1;
      out.add(kk, m * GaussianRational(2 * k.norm_power));
    }
  }
  return out;
}

SymbolSum d_x(const SymbolSum& s, int j) {
  if (j < 0 || j >= kDim) throw std::out_of_range("coordinate index out of range");
  if (j < kNormal) return {};
  SymbolSum out;
  for (const auto& [k, m] : s.terms()) {
    if (k.opaque) throw ModelingError("x_n-derivative of an opaque factor");
    // d_n |xi|^{2p} = p h'(0) |xi'|^2 |xi|^{2p-2}, |xi'| = 1
    if (k.norm_power != 0) {
      TermKey kk = k;
      kk.norm_power -= 1;
      kk.boundary *= BoundaryMonomial::h_prime();
      out.add(kk, m * GaussianRational(k.norm_power));
    }
    // d_n c(dx_j) = (h'/2) c(dx_j) for tangential j
    if (k.tangential_weight != 0) {
      TermKey kk = k;
      kk.boundary *= BoundaryMonomial::h_prime();
      out.add(kk, m * GaussianRational(Rational(k.tangential_weight, 2)));
    }
  }
  return out;
}

namespace {
std::complex<double> ipow(std::complex<double> z, int e) {
  if (e < 0) return 1.0 / ipow(z, -e);
  std::complex<double> r = 1;
  while (e-- > 0) r *= z;
  return r;
}
}  // namespace

std::complex<double> evaluate(const BoundaryMonomial& b, const SamplePoint& pt) {
  std::complex<double> v = ipow(pt.h_prime, b.h_prime_degree);
  for (int j : b.x_indices) v *= pt.X[j];
  for (int l : b.y_indices) v *= pt.Y[l];
  for (auto [d, l] : b.dy_indices) v *= pt.dY[d][l];
  return v;
}

NumericMatrix evaluate(const SymbolSum& s, const SamplePoint& pt) {
  NumericMatrix out = NumericMatrix::Zero(1 << kDim, 1 << kDim);
  double xp2 = 0;
  for (double v : pt.xi_prime) xp2 += v * v;
  const std::complex<double> norm2 = xp2 + pt.xi_n * pt.xi_n;
  for (const auto& [k, m] : s.terms()) {
    std::complex<double> w = evaluate(k.boundary, pt) * ipow(pt.xi_n, k.xi_n_power) * ipow(norm2, k.norm_power);
    for (int j = 0; j < kNormal; ++j) w *= ipow(pt.xi_prime[j], k.xi_prime[j]);
    out += to_numeric(m) * w;
  }
  return out;
}

}  // namespace wres
