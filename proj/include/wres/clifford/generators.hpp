#pragma once

#include <bit>
#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "wres/scalar/eigen_support.hpp"

namespace wres {

template <typename Scalar>
using CliffordMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using ExactMatrix = CliffordMatrix<GaussianRational>;
using NumericMatrix = Eigen::MatrixXcd;

template <typename Scalar>
Scalar scalar_from_rational(const Rational& q) {
  if constexpr (std::is_same_v<Scalar, GaussianRational>)
    return GaussianRational(q);
  else
    return Scalar(q.get_d());
}

// c(e_j) = eps_j - iota_j and chat(e_j) = eps_j + iota_j on the exterior algebra of C^n.
// Basis vectors are subsets of {0..n-1} encoded as bit masks.
template <typename Scalar>
struct CliffordGenerators {
  int n = 0;
  std::vector<CliffordMatrix<Scalar>> c;
  std::vector<CliffordMatrix<Scalar>> c_hat;

  int dim() const { return 1 << n; }
  int normal() const { return n - 1; }
  CliffordMatrix<Scalar> identity() const { return CliffordMatrix<Scalar>::Identity(dim(), dim()); }
  CliffordMatrix<Scalar> zero() const { return CliffordMatrix<Scalar>::Zero(dim(), dim()); }

  // c(v) and chat(v) for a coefficient vector in the frame
  template <typename Vec>
  CliffordMatrix<Scalar> c_of(const Vec& v) const {
    CliffordMatrix<Scalar> m = zero();
    for (int j = 0; j < n; ++j) m += c[j] * Scalar(v[j]);
    return m;
  }
  template <typename Vec>
  CliffordMatrix<Scalar> c_hat_of(const Vec& v) const {
    CliffordMatrix<Scalar> m = zero();
    for (int j = 0; j < n; ++j) m += c_hat[j] * Scalar(v[j]);
    return m;
  }
};

template <typename Scalar>
CliffordGenerators<Scalar> build_generators(int n) {
  if (n < 1 || n > 8) throw std::out_of_range("Clifford dimension must lie in [1, 8]");
  CliffordGenerators<Scalar> g;
  g.n = n;
  const int dim = 1 << n;
  for (int j = 0; j < n; ++j) {
    CliffordMatrix<Scalar> eps = CliffordMatrix<Scalar>::Zero(dim, dim);
    CliffordMatrix<Scalar> iota = CliffordMatrix<Scalar>::Zero(dim, dim);
    const unsigned bit = 1u << j;
    for (unsigned s = 0; s < unsigned(dim); ++s) {
      int sign = (std::popcount(s & (bit - 1)) % 2) ? -1 : 1;
      if (s & bit)
        iota(int(s ^ bit), int(s)) = Scalar(sign);
      else
        eps(int(s | bit), int(s)) = Scalar(sign);
    }
    g.c.push_back(eps - iota);
    g.c_hat.push_back(eps + iota);
  }
  return g;
}

// Sparse-aware product and trace for exact matrices; generator words are signed permutations.
ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b);
GaussianRational trace(const ExactMatrix& m);
GaussianRational trace_product(const ExactMatrix& a, const ExactMatrix& b);
bool is_zero(const ExactMatrix& m);
NumericMatrix to_numeric(const ExactMatrix& m);
std::size_t matrix_hash(const ExactMatrix& m);

template <typename Scalar>
Scalar trace(const CliffordMatrix<Scalar>& m) {
  return m.trace();
}

}  // namespace wres
