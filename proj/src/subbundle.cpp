#include "wres/clifford/subbundle.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace wres {

void SubbundleData::validate() const {
  const int k = rank();
  if (k < 1 || k > n) throw std::invalid_argument("subbundle rank must lie in [1, n]");
  std::set<int> seen;
  for (int f : f_basis) {
    if (f < 0 || f >= n) throw std::invalid_argument("subbundle frame index out of range");
    if (!seen.insert(f).second) throw std::invalid_argument("subbundle frame indices must be distinct");
  }
  if (int(s_values.size()) != n) throw std::invalid_argument("S must have one entry per frame vector");
  for (const auto& row : s_values) {
    if (int(row.size()) != k) throw std::invalid_argument("S must have one entry per complement vector");
    for (const auto& v : row)
      if (int(v.size()) != n) throw std::invalid_argument("S values must be tangent vectors");
  }
}

SubbundleData SubbundleData::zero(int n, std::vector<int> f_basis) {
  SubbundleData d;
  d.n = n;
  d.f_basis = std::move(f_basis);
  d.s_values.assign(n, std::vector<std::vector<Rational>>(d.f_basis.size(), std::vector<Rational>(n, Rational(0))));
  d.validate();
  return d;
}

SubbundleData SubbundleData::random(int n, std::uint64_t seed) {
  if (seed == 0) return zero(n, {n - 1});
  std::mt19937_64 rng(seed);
  const int k = (seed % 2) ? 1 : 2;
  std::vector<int> idx(n);
  for (int j = 0; j < n; ++j) idx[j] = j;
  std::shuffle(idx.begin(), idx.end(), rng);
  SubbundleData d = zero(n, std::vector<int>(idx.begin(), idx.begin() + k));
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  for (int i = 0; i < n; ++i)
    for (int alpha = 0; alpha < k; ++alpha)
      for (int m = k; m < n; ++m) {  // components along F only
        Rational v(num(rng), den(rng));
        v.canonicalize();
        d.s_values[i][alpha][idx[m]] = v;
      }
  return d;
}

}  // namespace wres
