#include <functional>

#include "wres/clifford/generators.hpp"

namespace wres {

ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b) {
  const Eigen::Index rows = a.rows(), inner = a.cols(), cols = b.cols();
  ExactMatrix out = ExactMatrix::Zero(rows, cols);
  // column lists of nonzeros of b, rowwise
  std::vector<std::vector<Eigen::Index>> nz(inner);
  for (Eigen::Index k = 0; k < inner; ++k)
    for (Eigen::Index j = 0; j < cols; ++j)
      if (!b(k, j).is_zero()) nz[k].push_back(j);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index k = 0; k < inner; ++k) {
      const GaussianRational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (Eigen::Index j : nz[k]) out(i, j) += aik * b(k, j);
    }
  return out;
}

GaussianRational trace(const ExactMatrix& m) {
  GaussianRational t;
  for (Eigen::Index i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

GaussianRational trace_product(const ExactMatrix& a, const ExactMatrix& b) {
  GaussianRational t;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero() || b(k, i).is_zero()) continue;
      t += a(i, k) * b(k, i);
    }
  return t;
}

bool is_zero(const ExactMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) return false;
  return true;
}

NumericMatrix to_numeric(const ExactMatrix& m) {
  NumericMatrix out(m.rows(), m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) out(i, j) = m(i, j).to_complex();
  return out;
}

std::size_t matrix_hash(const ExactMatrix& m) {
  std::size_t h = std::size_t(m.rows()) * 1000003u;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const GaussianRational& z = m(i, j);
      if (z.is_zero()) continue;
      std::size_t e = std::hash<long>{}(long(i * m.cols() + j));
      e ^= std::hash<double>{}(z.re().get_d()) * 31u + std::hash<double>{}(z.im().get_d());
      h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
  return h;
}

}  // namespace wres
