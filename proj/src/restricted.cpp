#include "wres/symbol/restricted.hpp"

#include <unordered_map>

namespace wres {

void RestrictedSum::add(const RestrictedKey& key, const ExactMatrix& m) {
  if (key.xi_n.is_zero() || wres::is_zero(m)) return;
  auto [it, inserted] = terms_.try_emplace(key, m);
  if (!inserted) {
    it->second += m;
    if (wres::is_zero(it->second)) terms_.erase(it);
  }
}

RestrictedSum& RestrictedSum::operator+=(const RestrictedSum& o) {
  for (const auto& [k, m] : o.terms_) add(k, m);
  return *this;
}

RestrictedSum& RestrictedSum::operator-=(const RestrictedSum& o) {
  for (const auto& [k, m] : o.terms_) add(k, -m);
  return *this;
}

RestrictedSum& RestrictedSum::operator*=(const GaussianRational& s) {
  if (s.is_zero()) terms_.clear();
  for (auto& [k, m] : terms_) m *= s;
  return *this;
}

RestrictedSum restrict_to_sphere(const SymbolSum& s) {
  RestrictedSum out;
  for (const auto& [k, m] : s.terms())
    out.add({k.boundary, k.xi_prime, XiNRational::power_form(k.xi_n_power, k.norm_power)}, m);
  return out;
}

RestrictedSum d_xi_n(const RestrictedSum& s, int order) {
  return map_xi_n(s, [order](const XiNRational& r) { return derivative(r, order); });
}

namespace {

// xi'^a as a combination of monomials with xi_3 exponent <= 1, using xi_3^2 = 1 - xi_1^2 - xi_2^2
void reduce_monomial(const XiPrimeMonomial& a, int coef, std::map<XiPrimeMonomial, int>& out) {
  if (a[kNormal - 1] < 2) {
    out[a] += coef;
    return;
  }
  XiPrimeMonomial b = a;
  b[kNormal - 1] -= 2;
  reduce_monomial(b, coef, out);
  for (int j = 0; j < kNormal - 1; ++j) {
    XiPrimeMonomial c = b;
    c[j] += 2;
    reduce_monomial(c, -coef, out);
  }
}

}  // namespace

bool vanishes_on_sphere(const RestrictedSum& s) {
  // entrywise rational functions per (boundary, reduced monomial)
  using Entry = std::pair<BoundaryMonomial, XiPrimeMonomial>;
  std::map<Entry, std::map<std::pair<int, int>, XiNRational>> acc;
  for (const auto& [k, m] : s.terms()) {
    std::map<XiPrimeMonomial, int> red;
    reduce_monomial(k.xi_prime, 1, red);
    for (const auto& [mono, coef] : red) {
      if (coef == 0) continue;
      auto& cell = acc[{k.boundary, mono}];
      for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
          if (!m(i, j).is_zero()) cell[{int(i), int(j)}] += k.xi_n * (m(i, j) * GaussianRational(coef));
    }
  }
  for (const auto& [e, cells] : acc)
    for (const auto& [ij, r] : cells)
      if (!r.is_zero()) return false;
  return true;
}

void ScalarIntegrand::add(const ScalarKey& k, const XiNRational& r) {
  if (r.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(k, r);
  if (!inserted) {
    it->second += r;
    if (it->second.is_zero()) terms.erase(it);
  }
}

ScalarIntegrand& ScalarIntegrand::operator*=(const GaussianRational& s) {
  if (s.is_zero()) terms.clear();
  for (auto& [k, r] : terms) r *= s;
  return *this;
}

namespace {

struct MatrixIndex {
  std::vector<const ExactMatrix*> unique;
  std::unordered_map<std::size_t, std::vector<int>> buckets;
  int id(const ExactMatrix& m) {
    auto& bucket = buckets[matrix_hash(m)];
    for (int k : bucket)
      if (*unique[k] == m) return k;
    unique.push_back(&m);
    bucket.push_back(int(unique.size()) - 1);
    return int(unique.size()) - 1;
  }
};

}  // namespace

ScalarIntegrand trace_product(const RestrictedSum& a, const RestrictedSum& b) {
  MatrixIndex ia, ib;
  std::vector<std::vector<const RestrictedKey*>> ga, gb;
  for (const auto& [k, m] : a.terms()) {
    int id = ia.id(m);
    if (id >= int(ga.size())) ga.resize(id + 1);
    ga[id].push_back(&k);
  }
  for (const auto& [k, m] : b.terms()) {
    int id = ib.id(m);
    if (id >= int(gb.size())) gb.resize(id + 1);
    gb[id].push_back(&k);
  }
  ScalarIntegrand out;
  for (std::size_t p = 0; p < ga.size(); ++p)
    for (std::size_t q = 0; q < gb.size(); ++q) {
      GaussianRational t = trace_product(*ia.unique[p], *ib.unique[q]);
      if (t.is_zero()) continue;
      for (const RestrictedKey* ka : ga[p])
        for (const RestrictedKey* kb : gb[q]) {
          ScalarKey key{ka->boundary * kb->boundary, {}};
          for (int j = 0; j < kNormal; ++j) key.xi_prime[j] = ka->xi_prime[j] + kb->xi_prime[j];
          out.add(key, ka->xi_n * kb->xi_n * t);
        }
    }
  return out;
}

namespace {
double xi_prime_value(const XiPrimeMonomial& a, const SamplePoint& pt) {
  double v = 1;
  for (int j = 0; j < kNormal; ++j)
    for (int e = 0; e < a[j]; ++e) v *= pt.xi_prime[j];
  return v;
}
}  // namespace

NumericMatrix evaluate(const RestrictedSum& s, const SamplePoint& pt) {
  NumericMatrix out = NumericMatrix::Zero(1 << kDim, 1 << kDim);
  for (const auto& [k, m] : s.terms())
    out += to_numeric(m) * (evaluate(k.boundary, pt) * xi_prime_value(k.xi_prime, pt) * k.xi_n(pt.xi_n));
  return out;
}

std::complex<double> evaluate(const ScalarIntegrand& s, const SamplePoint& pt) {
  std::complex<double> v = 0;
  for (const auto& [k, r] : s.terms) v += evaluate(k.boundary, pt) * xi_prime_value(k.xi_prime, pt) * r(pt.xi_n);
  return v;
}

}  // namespace wres
