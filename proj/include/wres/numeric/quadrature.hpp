#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace wres {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre on [-1, 1]
const QuadratureRule& gauss_legendre(int points);

// composite Gauss-Legendre on [a, b]
std::complex<double> integrate(const std::function<std::complex<double>(double)>& f, double a, double b,
                               int panels = 32, int points = 16);

// integral over the real line via x = tan(t); f must decay at least like |x|^{-2}
std::complex<double> integrate_real_line(const std::function<std::complex<double>(double)>& f,
                                         int panels = 64, int points = 16);

// k-th derivative at z0 by the Cauchy integral over a circle of the given radius
std::complex<double> cauchy_derivative(const std::function<std::complex<double>(std::complex<double>)>& f,
                                       std::complex<double> z0, int k, double radius = 0.5, int samples = 64);

}  // namespace wres
