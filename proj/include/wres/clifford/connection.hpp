#pragma once

#include <vector>

#include "wres/clifford/generators.hpp"

namespace wres {

// Levi-Civita data at the boundary point for g = h(x_n)^{-1} g_boundary + dx_n^2, h(0) = 1.
// Every entry is linear in h'(0); the stored matrices are the coefficients of h'(0).
struct BoundaryConnection {
  int n = 4;
  // omega[i][s][t] = <nabla_{e_i} e_t, e_s>
  std::vector<std::vector<std::vector<Rational>>> omega;
  std::vector<ExactMatrix> sigma;  // -1/4 sum omega_{st}(e_i) c_s c_t
  std::vector<ExactMatrix> a;      //  1/4 sum omega_{st}(e_i) chat_s chat_t
  std::vector<ExactMatrix> B;      // sigma_i + a_i
  ExactMatrix P1;                  // sum_i c_i a_i
  ExactMatrix P2;                  // sum_i c_i sigma_i
  Rational c0;                     // P2 = c0 h'(0) c(dx_n)
  std::vector<Rational> gamma;     // Gamma^k = g^{ij} Gamma_ij^k
};

BoundaryConnection build_boundary_connection(const CliffordGenerators<GaussianRational>& g);

// omega values from an explicit metric by finite-difference Christoffel symbols (oracle)
std::vector<std::vector<std::vector<double>>> connection_from_metric(int n, double h_prime, double step = 1e-5);

}  // namespace wres
