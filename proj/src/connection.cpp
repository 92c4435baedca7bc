#include "wres/clifford/connection.hpp"

#include <cmath>

namespace wres {

BoundaryConnection build_boundary_connection(const CliffordGenerators<GaussianRational>& g) {
  BoundaryConnection bc;
  const int n = g.n, nn = g.normal();
  bc.n = n;
  bc.omega.assign(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, Rational(0))));
  const Rational half(1, 2);
  for (int i = 0; i < nn; ++i) {
    bc.omega[i][nn][i] = half;   // <nabla_{e_i} e_i, e_n>
    bc.omega[i][i][nn] = -half;  // <nabla_{e_i} e_n, e_i>
  }
  const GaussianRational quarter(Rational(1, 4));
  for (int i = 0; i < n; ++i) {
    ExactMatrix s = g.zero(), a = g.zero();
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        const Rational& w = bc.omega[i][p][q];
        if (sgn(w) == 0) continue;
        s -= multiply(g.c[p], g.c[q]) * (quarter * GaussianRational(w));
        a += multiply(g.c_hat[p], g.c_hat[q]) * (quarter * GaussianRational(w));
      }
    bc.sigma.push_back(s);
    bc.a.push_back(a);
    bc.B.push_back(s + a);
  }
  bc.P1 = g.zero();
  bc.P2 = g.zero();
  for (int i = 0; i < n; ++i) {
    bc.P1 += multiply(g.c[i], bc.a[i]);
    bc.P2 += multiply(g.c[i], bc.sigma[i]);
  }
  // P2 is a multiple of c(dx_n): read the coefficient from a trace
  bc.c0 = (trace_product(bc.P2, g.c[nn]) / GaussianRational(-g.dim())).re();
  bc.gamma.assign(n, Rational(0));
  bc.gamma[nn] = Rational(nn, 2);
  return bc;
}

std::vector<std::vector<std::vector<double>>> connection_from_metric(int n, double h_prime, double step) {
  const int nn = n - 1;
  auto h = [&](double xn) { return 1.0 + h_prime * xn; };
  // metric and frame depend on x_n only
  auto metric = [&](double xn, int a, int b) {
    if (a != b) return 0.0;
    return a == nn ? 1.0 : 1.0 / h(xn);
  };
  auto frame = [&](double xn, int t, int a) {  // E_t^a
    if (a != t) return 0.0;
    return t == nn ? 1.0 : std::sqrt(h(xn));
  };
  auto d_n = [&](auto f) { return (f(step) - f(-step)) / (2 * step); };
  // Christoffel symbols at 0: Gamma^a_{bc} = 1/2 g^{ad} (d_b g_dc + d_c g_db - d_d g_bc)
  auto dg = [&](int d, int a, int b) {
    if (d != nn) return 0.0;
    return d_n([&](double x) { return metric(x, a, b); });
  };
  std::vector<std::vector<std::vector<double>>> gam(n, std::vector<std::vector<double>>(n, std::vector<double>(n, 0.0)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        double s = 0;
        for (int d = 0; d < n; ++d) {
          double ginv = metric(0, a, d) == 0 ? 0.0 : 1.0 / metric(0, a, d);
          s += 0.5 * ginv * (dg(b, d, c) + dg(c, d, b) - dg(d, b, c));
        }
        gam[a][b][c] = s;
      }
  std::vector<std::vector<std::vector<double>>> omega(n, std::vector<std::vector<double>>(n, std::vector<double>(n, 0.0)));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < n; ++t) {
      std::vector<double> v(n, 0.0);  // nabla_{e_i} e_t in coordinates
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          double eib = frame(0, i, b);
          if (eib == 0) continue;
          double deriv = b == nn ? d_n([&](double x) { return frame(x, t, a); }) : 0.0;
          double conn = 0;
          for (int c = 0; c < n; ++c) conn += gam[a][b][c] * frame(0, t, c);
          v[a] += eib * (deriv + conn);
        }
      for (int s = 0; s < n; ++s) {
        double dot = 0;
        for (int a = 0; a < n; ++a)
          for (int d = 0; d < n; ++d) dot += metric(0, a, d) * v[a] * frame(0, s, d);
        omega[i][s][t] = dot;
      }
    }
  return omega;
}

}  // namespace wres
