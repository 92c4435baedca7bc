#include "wres/pipeline/cases.hpp"

#include <algorithm>
#include <stdexcept>

namespace wres {

std::string pair_name(OperatorPair p) { return p == OperatorPair::D2D2 ? "d2d2" : "d1d3"; }

OperatorPair parse_pair(const std::string& s) {
  if (s == "d2d2") return OperatorPair::D2D2;
  if (s == "d1d3") return OperatorPair::D1D3;
  throw std::invalid_argument("unknown operator pair: " + s);
}

const PairSpec& pair_spec(OperatorPair p) {
  static const PairSpec one{OperatorPair::D2D2, SymbolName::Nabla2DA2Inv, SymbolName::DA2Inv,
                            SymbolName::Nabla2, SymbolName::DA2Inv, 0, -2};
  static const PairSpec two{OperatorPair::D1D3, SymbolName::Nabla2DAInv, SymbolName::DA3Inv,
                            SymbolName::Nabla2, SymbolName::DAInv, 1, -3};
  return p == OperatorPair::D2D2 ? one : two;
}

namespace {

GaussianRational prefactor(int alpha, int j, int k) {
  GaussianRational v = GaussianRational(0, -1).pow(alpha + j + k + 1);
  Rational f = 1;
  for (int m = 2; m <= j + k + 1; ++m) f *= m;
  return v / GaussianRational(f);
}

}  // namespace

std::vector<BoundaryCase> enumerate_cases(int p1_order, int p2_order, int n) {
  // the orders can only drop by the total deficit available
  const int deficit = p1_order + p2_order + n - 1;
  std::vector<BoundaryCase> out;
  if (deficit < 0) return out;
  for (int alpha = 0; alpha <= std::min(1, deficit); ++alpha)
    for (int j = 0; j + alpha <= deficit; ++j)
      for (int k = 0; k + j + alpha <= deficit; ++k)
        for (int dr = 0; dr + k + j + alpha <= deficit; ++dr) {
          int dl = deficit - dr - k - j - alpha;
          BoundaryCase c;
          c.r = p1_order - dr;
          c.l = p2_order - dl;
          c.k = k;
          c.j = j;
          c.alpha = alpha;
          c.prefactor = prefactor(alpha, j, k);
          out.push_back(c);
        }
  if (deficit == 1) {
    for (auto& c : out) {
      if (c.alpha) c.label = "a(I)", c.index = 1;
      else if (c.j) c.label = "a(II)", c.index = 2;
      else if (c.k) c.label = "a(III)", c.index = 3;
      else if (c.r == 0 && c.l == -3) c.label = "b", c.index = 4;
      else c.label = "c", c.index = 5;
    }
    std::sort(out.begin(), out.end(), [](const BoundaryCase& a, const BoundaryCase& b) { return a.index < b.index; });
  } else {
    for (std::size_t m = 0; m < out.size(); ++m) {
      const auto& c = out[m];
      out[m].index = int(m) + 1;
      out[m].label = "r" + std::to_string(c.r) + "l" + std::to_string(c.l) + "k" + std::to_string(c.k) + "j" +
                     std::to_string(c.j) + "a" + std::to_string(c.alpha);
    }
  }
  return out;
}

std::vector<BoundaryCase> enumerate_cases(OperatorPair p) {
  const PairSpec& s = pair_spec(p);
  return enumerate_cases(s.first_order, s.second_order);
}

}  // namespace wres
