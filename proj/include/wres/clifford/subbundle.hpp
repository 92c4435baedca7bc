#pragma once

#include <cstdint>
#include <vector>

#include "wres/clifford/generators.hpp"

namespace wres {

// Frame data of a subbundle F with complement spanned by f_basis, and the tensor S(e_i) f_alpha.
struct SubbundleData {
  int n = 4;
  std::vector<int> f_basis;
  // s_values[i][alpha][m]: m-th frame component of S(e_i) f_alpha
  std::vector<std::vector<std::vector<Rational>>> s_values;

  int rank() const { return int(f_basis.size()); }
  void validate() const;  // throws std::invalid_argument

  static SubbundleData zero(int n, std::vector<int> f_basis);
  // seed 0 gives S = 0; odd seeds rank 1, even seeds rank 2; values lie in F
  static SubbundleData random(int n, std::uint64_t seed);
};

// A = sum_{i,alpha} c(e_i) chat(S(e_i) f_alpha) chat(f_alpha)
template <typename Scalar>
CliffordMatrix<Scalar> build_A(const CliffordGenerators<Scalar>& g, const SubbundleData& data) {
  data.validate();
  if (data.n != g.n) throw std::invalid_argument("subbundle dimension does not match generators");
  CliffordMatrix<Scalar> a = g.zero();
  for (int i = 0; i < g.n; ++i)
    for (int alpha = 0; alpha < data.rank(); ++alpha) {
      CliffordMatrix<Scalar> chat_s = g.zero();
      bool any = false;
      for (int m = 0; m < g.n; ++m) {
        const Rational& v = data.s_values[i][alpha][m];
        if (sgn(v) == 0) continue;
        chat_s += g.c_hat[m] * scalar_from_rational<Scalar>(v);
        any = true;
      }
      if (any) a += g.c[i] * chat_s * g.c_hat[data.f_basis[alpha]];
    }
  return a;
}

}  // namespace wres
