#pragma once

#include <array>
#include <complex>
#include <map>
#include <memory>
#include <vector>

#include "wres/clifford/subbundle.hpp"
#include "wres/pipeline/cases.hpp"
#include "wres/sphere/sphere.hpp"

namespace wres {

// Floating-point reference evaluation of a boundary case.
// Symbols come from the numerical parametrix recursion of D_A, the connection from
// finite-difference Christoffel symbols, pi+ from a contour integral around xi_n = i,
// and the xi_n / S^2 integrals from Gauss rules.
struct OracleSettings {
  double h_prime = 1;
  int xi_panels = 8;
  int xi_points = 16;
  int contour_points = 32;
  double contour_radius = 0.5;
  int sphere_theta = 6;
  int sphere_phi = 12;
  int xn_points = 16;
  double xn_radius = 0.05;
};

struct FieldSetting {
  std::array<double, 4> X{};
  std::array<double, 4> Y{};
  std::array<std::array<double, 4>, 4> dY{};  // dY[direction][component]
};

// X/Y/dY choice isolating one basis element (with h'(0) = 1)
FieldSetting basis_probe(BasisElement e);

class NumericOracle {
 public:
  explicit NumericOracle(const SubbundleData& data, OracleSettings settings = {});
  ~NumericOracle();
  NumericOracle(const NumericOracle&) = delete;
  NumericOracle& operator=(const NumericOracle&) = delete;

  // prefactor x integral for one field setting
  std::complex<double> evaluate(const BoundaryCase& c, OperatorPair pair, const FieldSetting& f) const;
  std::vector<std::complex<double>> evaluate(const BoundaryCase& c, OperatorPair pair,
                                             const std::vector<FieldSetting>& fields) const;
  // coefficient of every basis element, Omega3 = 4 pi
  std::map<BasisElement, std::complex<double>> evaluate_basis(const BoundaryCase& c, OperatorPair pair) const;

  const OracleSettings& settings() const { return settings_; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  OracleSettings settings_;
};

}  // namespace wres
