#include "wres/residue/halfplane.hpp"

namespace wres {

namespace {

const GaussianRational kI = GaussianRational::i();

// first `count` Taylor coefficients at u = 0 of R(u + pole) (u + pole - other)^{-e}
std::vector<GaussianRational> local_series(const Polynomial& r, const GaussianRational& pole,
                                           const GaussianRational& other, int e, int count) {
  Polynomial shifted = r.shifted(pole);
  // (u + d)^{-e} = sum_k binom(e + k - 1, k) (-1)^k d^{-e-k} u^k
  const GaussianRational d = pole - other;
  std::vector<GaussianRational> inv(count);
  GaussianRational binom = 1;
  for (int k = 0; k < count; ++k) {
    if (k > 0) binom = binom * GaussianRational(e + k - 1) / GaussianRational(k);
    inv[k] = binom * GaussianRational(k % 2 ? -1 : 1) * d.pow(-e - k);
  }
  std::vector<GaussianRational> out(count);
  for (int k = 0; k < count; ++k)
    for (int m = 0; m <= k; ++m) out[k] += shifted.coefficient(m) * inv[k - m];
  return out;
}

XiNRational pole_part(const std::vector<GaussianRational>& coeffs, const GaussianRational& pole, bool plus) {
  const int a = int(coeffs.size());
  // sum_m c_m (x - pole)^{a - m} over (x - pole)^a
  Polynomial num;
  for (int m = 1; m <= a; ++m) num += Polynomial::linear_power(pole, a - m) * coeffs[m - 1];
  return plus ? XiNRational(num, a, 0) : XiNRational(num, 0, a);
}

}  // namespace

XiNRational PartialFractionForm::plus_part() const { return pole_part(plus, kI, true); }
XiNRational PartialFractionForm::minus_part() const { return pole_part(minus, -kI, false); }

PartialFractionForm partial_fractions(const XiNRational& f) {
  PartialFractionForm pf;
  const int a = f.plus_order(), b = f.minus_order();
  Polynomial den = Polynomial::linear_power(kI, a) * Polynomial::linear_power(-kI, b);
  Polynomial rem;
  pf.polynomial = f.numerator().divide(den, &rem);
  if (a > 0) {
    auto s = local_series(rem, kI, -kI, b, a);
    pf.plus.resize(a);
    for (int m = 1; m <= a; ++m) pf.plus[m - 1] = s[a - m];
  }
  if (b > 0) {
    auto s = local_series(rem, -kI, kI, a, b);
    pf.minus.resize(b);
    for (int m = 1; m <= b; ++m) pf.minus[m - 1] = s[b - m];
  }
  return pf;
}

XiNRational pi_plus(const XiNRational& f) {
  if (f.plus_order() == 0) return {};
  return partial_fractions(f).plus_part();
}

XiNRational pi_minus(const XiNRational& f) {
  PartialFractionForm pf = partial_fractions(f);
  return pf.minus_part() + XiNRational(pf.polynomial);
}

RestrictedSum pi_plus(const RestrictedSum& s) {
  return map_xi_n(s, [](const XiNRational& r) { return pi_plus(r); });
}

GaussianRational residue_at_i(const XiNRational& f) {
  const int a = f.plus_order();
  if (a == 0) return 0;
  XiNRational depoled(f.numerator(), 0, f.minus_order());
  GaussianRational fact = 1;
  for (int k = 2; k < a; ++k) fact *= GaussianRational(k);
  return derivative(depoled, a - 1)(kI) / fact;
}

GaussianRational residue_at_i_laurent(const XiNRational& f) {
  PartialFractionForm pf = partial_fractions(f);
  return pf.plus.empty() ? GaussianRational(0) : pf.plus[0];
}

ExactScalar line_integral(const XiNRational& f) {
  if (f.is_zero()) return {};
  if (f.numerator().degree() > f.denominator_degree() - 2)
    throw DecayError("integrand does not decay like |xi_n|^{-2}: " + f.to_string());
  return ExactScalar(GaussianRational(0, 2) * residue_at_i(f), 1, 0);
}

}  // namespace wres
