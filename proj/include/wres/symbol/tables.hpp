#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "wres/clifford/connection.hpp"
#include "wres/clifford/subbundle.hpp"
#include "wres/symbol/operator_symbol.hpp"

namespace wres {

enum class SymbolName { DA, DAInv, DA2, DA2Inv, DA3, DA3Inv, Nabla2, Nabla2DAInv, Nabla2DA2Inv };

SymbolName parse_symbol_name(const std::string& s);  // throws std::invalid_argument
std::string symbol_name_string(SymbolName n);

// Boundary-point data shared by every symbol: generators, connection, twist.
struct SymbolContext {
  CliffordGenerators<GaussianRational> gens;
  BoundaryConnection connection;
  SubbundleData subbundle;
  ExactMatrix A;

  explicit SymbolContext(const SubbundleData& data);

  // building blocks, all at the boundary point
  SymbolSum scalar(const GaussianRational& c) const;
  SymbolSum norm_power(int p) const;      // |xi|^{2p}
  SymbolSum xi(int j) const;              // xi_j, j = kNormal is xi_n
  SymbolSum c_xi() const;                 // c(xi)
  SymbolSum c_xi_prime() const;           // c(xi')
  SymbolSum c_dxn() const;                // c(dx_n)
  SymbolSum dn_c_xi_prime() const;        // d_{x_n} c(xi') = (h'/2) c(xi')
  SymbolSum opaque(const ExactMatrix& m, const BoundaryMonomial& b = {}) const;
  SymbolSum c_field(char field) const;    // c(X) or c(Y)
  SymbolSum B_field(char field) const;    // B(X) or B(Y)
  SymbolSum sigma0_DA() const;            // P1 + P2 + A
};

// Symbol of the named operator at the boundary point; composite entries are cached.
class SymbolTables {
 public:
  explicit SymbolTables(const SubbundleData& data);
  const SymbolContext& context() const { return ctx_; }
  const OperatorSymbol& get(SymbolName name);

 private:
  OperatorSymbol build(SymbolName name);
  SymbolContext ctx_;
  std::map<SymbolName, std::unique_ptr<OperatorSymbol>> cache_;
  std::recursive_mutex mutex_;
};

OperatorSymbol symbol_table(SymbolName name, const SubbundleData& data);

}  // namespace wres
