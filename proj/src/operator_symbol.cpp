#include "wres/symbol/operator_symbol.hpp"

namespace wres {

bool OperatorSymbol::vanishes(int r) const {
  if (r > top_order) return true;
  if (r < lowest_known) return differential && r < 0;
  auto it = components.find(r);
  return it == components.end() || it->second.is_zero();
}

const SymbolSum& OperatorSymbol::component(int r) const {
  static const SymbolSum zero;
  if (!knows(r)) throw TruncationError(name + ": order " + std::to_string(r) + " component is not available");
  auto it = components.find(r);
  return it == components.end() ? zero : it->second;
}

std::vector<CompositionTerm> composition_terms(const OperatorSymbol& p, const OperatorSymbol& q, int order) {
  // only |alpha| <= 1 is kept, so at most two orders below the top are exact
  if (order < p.top_order + q.top_order - 1)
    throw TruncationError("composition below order " + std::to_string(p.top_order + q.top_order - 1) +
                          " needs |alpha| >= 2 terms");
  std::vector<CompositionTerm> out;
  const GaussianRational minus_i(0, -1);
  for (int alpha = 0; alpha <= 1; ++alpha)
    for (int a = p.top_order; a + q.top_order - alpha >= order; --a) {
      const int b = order - a + alpha;
      if (b > q.top_order) continue;
      if (p.vanishes(a) || q.vanishes(b)) continue;
      const SymbolSum& pa = p.component(a);
      const SymbolSum& qb = q.component(b);
      if (alpha == 0) {
        out.push_back({a, b, -1, pa * qb});
        continue;
      }
      for (int j = 0; j < kDim; ++j) {
        // D_{x_j} = -i d_{x_j}; tangential x-derivatives vanish at the boundary point
        SymbolSum dq = d_x(qb, j);
        if (dq.is_zero()) continue;
        out.push_back({a, b, j, d_xi(pa, j) * dq * minus_i});
      }
    }
  return out;
}

OperatorSymbol compose(const OperatorSymbol& p, const OperatorSymbol& q, int lowest_order) {
  OperatorSymbol out;
  out.name = p.name + "*" + q.name;
  out.top_order = p.top_order + q.top_order;
  out.lowest_known = lowest_order;
  out.differential = p.differential && q.differential;
  for (int r = out.top_order; r >= lowest_order; --r) {
    SymbolSum sum;
    for (const auto& t : composition_terms(p, q, r)) sum += t.value;
    out.components[r] = std::move(sum);
  }
  return out;
}

}  // namespace wres
