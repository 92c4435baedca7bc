#pragma once

#include <map>
#include <string>
#include <vector>

#include "wres/symbol/symbol_sum.hpp"

namespace wres {

class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Homogeneous components from top_order down to lowest_known.
// For differential operators every negative order below lowest_known is zero.
struct OperatorSymbol {
  std::string name;
  std::map<int, SymbolSum> components;
  int top_order = 0;
  int lowest_known = 0;
  bool differential = false;

  bool knows(int r) const { return r > top_order || r >= lowest_known || (differential && r < 0); }
  bool vanishes(int r) const;
  const SymbolSum& component(int r) const;  // throws TruncationError when unknown
};

// One (a, b, alpha) summand of the composition formula at a given order.
struct CompositionTerm {
  int a = 0;
  int b = 0;
  int alpha = -1;  // -1 for alpha = 0, else the covector index j of d_xi_j * D_x_j
  SymbolSum value;
};

std::vector<CompositionTerm> composition_terms(const OperatorSymbol& p, const OperatorSymbol& q, int order);
OperatorSymbol compose(const OperatorSymbol& p, const OperatorSymbol& q, int lowest_order);

}  // namespace wres
