#pragma once

#include <string>
#include <vector>

#include "wres/scalar/gaussian_rational.hpp"
#include "wres/symbol/tables.hpp"

namespace wres {

enum class OperatorPair { D2D2, D1D3 };

std::string pair_name(OperatorPair p);          // "d2d2" / "d1d3"
OperatorPair parse_pair(const std::string& s);  // throws std::invalid_argument

struct PairSpec {
  OperatorPair pair;
  SymbolName first;   // nabla nabla D^-m
  SymbolName second;  // D^-k
  // the first operator is built as compose(first_left, first_right)
  SymbolName first_left;
  SymbolName first_right;
  int first_order;
  int second_order;
};

const PairSpec& pair_spec(OperatorPair p);

struct BoundaryCase {
  std::string label;  // a(I), a(II), a(III), b, c
  int index = 0;      // 1..5
  int r = 0, l = 0, k = 0, j = 0, alpha = 0;
  GaussianRational prefactor;  // (-i)^{|alpha|+j+k+1} / (alpha! (j+k+1)!)
};

// All (r, l, k, j, alpha) with r + l - k - j - |alpha| = 1 - n, r <= p1_order, l <= p2_order.
std::vector<BoundaryCase> enumerate_cases(int p1_order, int p2_order, int n = 4);
std::vector<BoundaryCase> enumerate_cases(OperatorPair p);

}  // namespace wres
