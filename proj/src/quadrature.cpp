#include "wres/numeric/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace wres {

const QuadratureRule& gauss_legendre(int points) {
  static std::map<int, QuadratureRule> cache;
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  auto it = cache.find(points);
  if (it != cache.end()) return it->second;
  QuadratureRule rule;
  rule.nodes.resize(points);
  rule.weights.resize(points);
  for (int i = 0; i < points; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (points + 0.5));
    double dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1, p1 = x;
      for (int k = 2; k <= points; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (points == 1) p0 = 1, p1 = x;
      dp = points * (x * p1 - p0) / (x * x - 1);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2 / ((1 - x * x) * dp * dp);
  }
  return cache.emplace(points, std::move(rule)).first->second;
}

std::complex<double> integrate(const std::function<std::complex<double>(double)>& f, double a, double b,
                               int panels, int points) {
  const QuadratureRule& rule = gauss_legendre(points);
  const double h = (b - a) / panels;
  std::complex<double> sum = 0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    for (int i = 0; i < points; ++i) sum += rule.weights[i] * f(mid + 0.5 * h * rule.nodes[i]);
  }
  return sum * (0.5 * h);
}

std::complex<double> integrate_real_line(const std::function<std::complex<double>(double)>& f, int panels,
                                         int points) {
  const double half = std::numbers::pi / 2;
  return integrate(
      [&](double t) {
        const double c = std::cos(t);
        return f(std::tan(t)) / (c * c);
      },
      -half, half, panels, points);
}

std::complex<double> cauchy_derivative(const std::function<std::complex<double>(std::complex<double>)>& f,
                                       std::complex<double> z0, int k, double radius, int samples) {
  // f^(k)(z0) = k! / (2 pi r^k) * integral f(z0 + r e^{it}) e^{-ikt} dt, trapezoid rule
  std::complex<double> sum = 0;
  for (int s = 0; s < samples; ++s) {
    const double t = 2 * std::numbers::pi * s / samples;
    sum += f(z0 + std::polar(radius, t)) * std::polar(1.0, -k * t);
  }
  double fact = 1;
  for (int m = 2; m <= k; ++m) fact *= m;
  return sum / double(samples) * fact / std::pow(radius, k);
}

}  // namespace wres
