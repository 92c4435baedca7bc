#include "wres/symbol/tables.hpp"

#include <stdexcept>

namespace wres {

namespace {

const GaussianRational kI = GaussianRational::i();

struct NameEntry {
  SymbolName name;
  const char* text;
};

constexpr NameEntry kNames[] = {
    {SymbolName::DA, "D_A"},
    {SymbolName::DAInv, "D_A_inv"},
    {SymbolName::DA2, "D_A2"},
    {SymbolName::DA2Inv, "D_A2_inv"},
    {SymbolName::DA3, "D_A3"},
    {SymbolName::DA3Inv, "D_A3_inv"},
    {SymbolName::Nabla2, "nabla2"},
    {SymbolName::Nabla2DAInv, "nabla2_D_inv"},
    {SymbolName::Nabla2DA2Inv, "nabla2_D2_inv"},
};

TermKey key_xi(int j) {
  TermKey k;
  if (j < kNormal)
    k.xi_prime[j] = 1;
  else
    k.xi_n_power = 1;
  return k;
}

}  // namespace

SymbolName parse_symbol_name(const std::string& s) {
  for (const auto& e : kNames)
    if (s == e.text) return e.name;
  throw std::invalid_argument("unknown symbol name '" + s + "'");
}

std::string symbol_name_string(SymbolName n) {
  for (const auto& e : kNames)
    if (e.name == n) return e.text;
  return "?";
}

SymbolContext::SymbolContext(const SubbundleData& data)
    : gens(build_generators<GaussianRational>(kDim)), subbundle(data) {
  if (data.n != kDim) throw std::invalid_argument("symbol calculus is fixed at dimension 4");
  connection = build_boundary_connection(gens);
  A = build_A(gens, data);
}

SymbolSum SymbolContext::scalar(const GaussianRational& c) const { return {TermKey{}, gens.identity() * c}; }

SymbolSum SymbolContext::norm_power(int p) const {
  TermKey k;
  k.norm_power = p;
  return {k, gens.identity()};
}

SymbolSum SymbolContext::xi(int j) const { return {key_xi(j), gens.identity()}; }

SymbolSum SymbolContext::c_xi_prime() const {
  SymbolSum s;
  for (int j = 0; j < kNormal; ++j) {
    TermKey k = key_xi(j);
    k.tangential_weight = 1;
    s.add(k, gens.c[j]);
  }
  return s;
}

SymbolSum SymbolContext::c_dxn() const { return {TermKey{}, gens.c[kNormal]}; }

SymbolSum SymbolContext::c_xi() const { return c_xi_prime() + SymbolSum(key_xi(kNormal), gens.c[kNormal]); }

SymbolSum SymbolContext::dn_c_xi_prime() const {
  SymbolSum s;
  for (int j = 0; j < kNormal; ++j) {
    TermKey k = key_xi(j);
    k.boundary = BoundaryMonomial::h_prime();
    k.opaque = true;
    s.add(k, gens.c[j] * GaussianRational(Rational(1, 2)));
  }
  return s;
}

SymbolSum SymbolContext::opaque(const ExactMatrix& m, const BoundaryMonomial& b) const {
  TermKey k;
  k.boundary = b;
  k.opaque = true;
  return {k, m};
}

SymbolSum SymbolContext::c_field(char field) const {
  SymbolSum s;
  for (int j = 0; j < kDim; ++j)
    s += opaque(gens.c[j], field == 'X' ? BoundaryMonomial::x(j) : BoundaryMonomial::y(j));
  return s;
}

SymbolSum SymbolContext::B_field(char field) const {
  SymbolSum s;
  for (int j = 0; j < kDim; ++j)
    s += opaque(connection.B[j], (field == 'X' ? BoundaryMonomial::x(j) : BoundaryMonomial::y(j)) * BoundaryMonomial::h_prime());
  return s;
}

SymbolSum SymbolContext::sigma0_DA() const {
  return opaque(connection.P1, BoundaryMonomial::h_prime()) + opaque(connection.P2, BoundaryMonomial::h_prime()) +
         opaque(A);
}

SymbolTables::SymbolTables(const SubbundleData& data) : ctx_(data) {}

const OperatorSymbol& SymbolTables::get(SymbolName name) {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  auto it = cache_.find(name);
  if (it != cache_.end()) return *it->second;
  auto sym = std::make_unique<OperatorSymbol>(build(name));
  return *(cache_[name] = std::move(sym));
}

OperatorSymbol SymbolTables::build(SymbolName name) {
  const SymbolContext& c = ctx_;
  const BoundaryMonomial hp = BoundaryMonomial::h_prime();
  OperatorSymbol s;
  s.name = symbol_name_string(name);
  switch (name) {
    case SymbolName::DA:
      s.top_order = 1;
      s.lowest_known = 0;
      s.differential = true;
      s.components[1] = c.c_xi() * kI;
      s.components[0] = c.sigma0_DA();
      return s;

    case SymbolName::DAInv: {
      s.top_order = -1;
      s.lowest_known = -2;
      SymbolSum cx = c.c_xi();
      s.components[-1] = cx * c.norm_power(-1) * kI;
      s.components[-2] = cx * c.sigma0_DA() * cx * c.norm_power(-2) +
                         cx * c.c_dxn() * c.dn_c_xi_prime() * c.norm_power(-2) -
                         (cx * c.c_dxn() * cx * c.norm_power(-3)).with_boundary(hp);
      return s;
    }

    case SymbolName::DA2: {
      OperatorSymbol d = compose(get(SymbolName::DA), get(SymbolName::DA), 1);
      d.name = s.name;
      return d;
    }

    case SymbolName::DA2Inv: {
      s.top_order = -2;
      s.lowest_known = -3;
      s.components[-2] = c.norm_power(-1);
      SymbolSum bracket;
      bracket += (c.xi(kNormal) * GaussianRational(c.connection.gamma[kNormal])).with_boundary(hp);
      for (int k = 0; k < kNormal; ++k) {
        bracket -= c.xi(k) * c.opaque(c.connection.sigma[k], hp) * GaussianRational(2);
        bracket -= c.xi(k) * c.opaque(c.connection.a[k], hp) * GaussianRational(2);
      }
      for (int k = 0; k < kDim; ++k)
        bracket += c.xi(k) * c.opaque(multiply(c.gens.c[k], c.A) + multiply(c.A, c.gens.c[k]));
      s.components[-3] = bracket * c.norm_power(-2) * (-kI) -
                         (c.xi(kNormal) * c.norm_power(-3) * (kI * GaussianRational(2))).with_boundary(hp);
      return s;
    }

    case SymbolName::DA3: {
      OperatorSymbol d = compose(get(SymbolName::DA2), get(SymbolName::DA), 2);
      d.name = s.name;
      return d;
    }

    case SymbolName::DA3Inv: {
      s.top_order = -3;
      s.lowest_known = -4;
      SymbolSum cx = c.c_xi();
      const SymbolSum& p2 = get(SymbolName::DA3).component(2);
      s.components[-3] = cx * c.norm_power(-2) * kI;
      SymbolSum dc = c.dn_c_xi_prime();
      SymbolSum inner = c.norm_power(1) * c.c_dxn() * dc - (c.c_dxn() * cx * GaussianRational(2)).with_boundary(hp) +
                        c.xi(kNormal) * cx * dc * GaussianRational(2) +
                        (c.xi(kNormal) * GaussianRational(4)).with_boundary(hp);
      s.components[-4] = cx * p2 * cx * c.norm_power(-4) + cx * inner * c.norm_power(-4);
      return s;
    }

    case SymbolName::Nabla2: {
      s.top_order = 2;
      s.lowest_known = 1;
      s.differential = true;
      SymbolSum s2, s1;
      SymbolSum sym_Y = c.c_field('Y') * c.opaque(c.A) + c.opaque(c.A) * c.c_field('Y');
      SymbolSum sym_X = c.c_field('X') * c.opaque(c.A) + c.opaque(c.A) * c.c_field('X');
      for (int j = 0; j < kDim; ++j) {
        const BoundaryMonomial xj = BoundaryMonomial::x(j), yj = BoundaryMonomial::y(j);
        for (int l = 0; l < kDim; ++l) {
          s2 -= (c.xi(j) * c.xi(l)).with_boundary(xj * BoundaryMonomial::y(l));
          s1 += (c.xi(l) * kI).with_boundary(xj * BoundaryMonomial::dy(j, l));
        }
        s1 += c.B_field('Y').with_boundary(xj) * c.xi(j) * kI;
        s1 += c.B_field('X').with_boundary(yj) * c.xi(j) * kI;
        s1 -= sym_Y.with_boundary(xj) * c.xi(j) * (kI * GaussianRational(Rational(1, 2)));
        s1 -= sym_X.with_boundary(yj) * c.xi(j) * (kI * GaussianRational(Rational(1, 2)));
      }
      s.components[2] = s2;
      s.components[1] = s1;
      return s;
    }

    case SymbolName::Nabla2DAInv: {
      OperatorSymbol d = compose(get(SymbolName::Nabla2), get(SymbolName::DAInv), 0);
      d.name = s.name;
      return d;
    }

    case SymbolName::Nabla2DA2Inv: {
      OperatorSymbol d = compose(get(SymbolName::Nabla2), get(SymbolName::DA2Inv), -1);
      d.name = s.name;
      return d;
    }
  }
  throw std::invalid_argument("unknown symbol");
}

OperatorSymbol symbol_table(SymbolName name, const SubbundleData& data) {
  SymbolTables t(data);
  return t.get(name);
}

}  // namespace wres
