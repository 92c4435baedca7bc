#include "wres/clifford/trace_identities.hpp"

#include <functional>

namespace wres {

namespace {

// Every listed trace must vanish; returns the first nonzero value or 0.
GaussianRational first_nonzero(const std::vector<GaussianRational>& values) {
  for (const auto& v : values)
    if (!v.is_zero()) return v;
  return 0;
}

}  // namespace

std::vector<TraceIdentityResult> trace_identity_suite(const CliffordGenerators<GaussianRational>& g,
                                                      const BoundaryConnection& bc, const ExactMatrix& A) {
  const int n = g.n, nn = g.normal();
  std::vector<TraceIdentityResult> out;
  auto add = [&](std::string name, GaussianRational computed, GaussianRational expected, std::string unit = "1") {
    bool pass = computed == expected;
    out.push_back({std::move(name), std::move(computed), std::move(expected), std::move(unit), pass});
  };
  auto collect = [&](const std::function<void(std::vector<GaussianRational>&)>& fill) {
    std::vector<GaussianRational> v;
    fill(v);
    return first_nonzero(v);
  };

  add("tr[id]", trace(g.identity()), GaussianRational(g.dim()));
  add("tr[c(e_s)c(e_t)], s != t", collect([&](auto& v) {
        for (int s = 0; s < n; ++s)
          for (int t = 0; t < n; ++t)
            if (s != t) v.push_back(trace_product(g.c[s], g.c[t]));
      }),
      0);
  add("tr[chat(e_s)chat(e_t)], s != t", collect([&](auto& v) {
        for (int s = 0; s < n; ++s)
          for (int t = 0; t < n; ++t)
            if (s != t) v.push_back(trace_product(g.c_hat[s], g.c_hat[t]));
      }),
      0);
  add("tr[c(e_b)A]", collect([&](auto& v) {
        for (int b = 0; b < n; ++b) v.push_back(trace_product(g.c[b], A));
      }),
      0);
  add("tr[A c(xi')]", collect([&](auto& v) {
        for (int j = 0; j < nn; ++j) v.push_back(trace_product(A, g.c[j]));
      }),
      0);
  // P2 = c0 c(dx_n): c0 = -(n-1)/4 and tr[P2 c(dx_n)] = (n-1) 2^n / 4
  add("tr[P2 c(dx_n)]", trace_product(bc.P2, g.c[nn]), GaussianRational(Rational(nn * g.dim(), 4)), "h'(0)");
  add("c0", GaussianRational(bc.c0), GaussianRational(Rational(-nn, 4)), "h'(0)");
  {
    ExactMatrix residual = bc.P2 - g.c[nn] * GaussianRational(bc.c0);
    add("P2 - c0 c(dx_n)", is_zero(residual) ? GaussianRational(0) : GaussianRational(1), 0, "h'(0)");
  }
  add("tr[P1 c(dx_n)]", trace_product(bc.P1, g.c[nn]), 0, "h'(0)");
  {
    // d_n c(xi') = (h'/2) c(xi'); the quadratic form must be -2^n/2 delta on |xi'| = 1
    GaussianRational diag = trace_product(g.c[0], g.c[0]) * GaussianRational(Rational(1, 2));
    bool isotropic = true;
    for (int j = 0; j < nn; ++j)
      for (int k = 0; k < nn; ++k) {
        GaussianRational q = trace_product(g.c[j], g.c[k]) * GaussianRational(Rational(1, 2));
        if (q != (j == k ? diag : GaussianRational(0))) isotropic = false;
      }
    add("tr[d_n c(xi') c(xi')] at |xi'|=1", isotropic ? diag : GaussianRational(1, 1),
        GaussianRational(Rational(-g.dim(), 2)), "h'(0)");
  }
  add("tr[d_n c(xi') c(dx_n)]", collect([&](auto& v) {
        for (int j = 0; j < nn; ++j) v.push_back(trace_product(g.c[j], g.c[nn]));
      }),
      0, "h'(0)");
  add("tr[c(xi') c(dx_n)]", collect([&](auto& v) {
        for (int j = 0; j < nn; ++j) v.push_back(trace_product(g.c[j], g.c[nn]));
      }),
      0);
  add("tr[c(X) A c(xi') c(dx_n)]", collect([&](auto& v) {
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < nn; ++k)
            v.push_back(trace_product(multiply(g.c[j], A), multiply(g.c[k], g.c[nn])));
      }),
      0);
  add("tr[B(X)]", collect([&](auto& v) {
        for (int k = 0; k < n; ++k) v.push_back(trace(bc.B[k]));
      }),
      0, "h'(0)");
  add("tr[c(e_i)chat(e_i)c(dx_n)chat(e_n)]", collect([&](auto& v) {
        for (int i = 0; i < nn; ++i)
          v.push_back(trace_product(multiply(g.c[i], g.c_hat[i]), multiply(g.c[nn], g.c_hat[nn])));
      }),
      0);
  {
    ExactMatrix lhs = multiply(g.c[nn], bc.P1);
    ExactMatrix rhs = g.zero();
    for (int i = 0; i < nn; ++i)
      rhs += multiply(multiply(g.c[i], g.c_hat[i]), multiply(g.c[nn], g.c_hat[nn])) * GaussianRational(Rational(-1, 4));
    add("c(dx_n)P1 + 1/4 sum c_i chat_i c_n chat_n", is_zero(lhs - rhs) ? GaussianRational(0) : GaussianRational(1), 0,
        "h'(0)");
  }
  return out;
}

}  // namespace wres
