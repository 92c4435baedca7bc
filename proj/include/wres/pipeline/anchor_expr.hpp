#pragma once

#include <complex>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "wres/clifford/generators.hpp"
#include "wres/symbol/symbol_sum.hpp"

namespace wres {

class ExpressionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Scalar or 16x16 matrix value of an anchor expression.
struct AnchorValue {
  bool matrix = false;
  std::complex<double> s = 0;
  NumericMatrix m;

  NumericMatrix as_matrix(int dim) const;
};

// Everything an expression can refer to at one sample point.
struct AnchorEnv {
  SamplePoint pt;
  CliffordGenerators<std::complex<double>> gens;
  NumericMatrix A;
  std::vector<NumericMatrix> B;  // coefficients of h'(0)
  NumericMatrix P1, P2;
};

AnchorEnv make_anchor_env(const ExactMatrix& A);

// Arithmetic over numbers, i, + - * / ^, parentheses and
//   xn, h, xi[k], X[k], Y[k], dY[j,l]              scalars (k = 4 is the normal slot)
//   XYT, XTxi, YTxi                                 sum_{j,l<4} X_j Y_l xi_j xi_l, sum X_j xi_j, sum Y_l xi_l
//   c[k], ch[k], cxi, cn, cfull, dcxi, cX, cY,
//   BX, BY, P1, P2, A, id                           matrices
//   sum_t(k, e), sum_a(k, e)                        k over 1..3 or 1..4
//   tr(e)
class AnchorExpression {
 public:
  static AnchorExpression parse(const std::string& text);  // throws ExpressionError
  AnchorValue evaluate(const AnchorEnv& env) const;
  const std::string& text() const { return text_; }

  struct Node;

 private:
  std::string text_;
  std::shared_ptr<const Node> root_;
};

}  // namespace wres
