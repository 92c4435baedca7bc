#include <doctest.h>

#include <cmath>
#include <numbers>

#include "generators.hpp"
#include "wres/numeric/quadrature.hpp"
#include "wres/residue/halfplane.hpp"

using namespace wres;

namespace {
const GaussianRational I = GaussianRational::i();

XiNRational over(int a, int b, const Polynomial& num = Polynomial(1)) { return XiNRational(num, a, b); }

// vanishing at infinity: numerator degree below denominator degree
XiNRational proper_rational(int max_order) {
  int a = testgen::uniform(0, max_order), b = testgen::uniform(0, max_order);
  if (a + b == 0) return {};
  std::vector<GaussianRational> c(testgen::uniform(1, a + b));
  for (auto& v : c) v = testgen::gaussian(6, 5);
  return XiNRational(Polynomial(std::move(c)), a, b);
}
}  // namespace

TEST_CASE("partial fractions of small rationals") {
  auto pf = partial_fractions(over(1, 1));
  REQUIRE(pf.plus.size() == 1);
  REQUIRE(pf.minus.size() == 1);
  CHECK(pf.plus[0] == GaussianRational(0, Rational(-1, 2)));
  CHECK(pf.minus[0] == GaussianRational(0, Rational(1, 2)));
  CHECK(pf.polynomial.is_zero());

  pf = partial_fractions(over(2, 2, Polynomial::monomial(1)));
  REQUIRE(pf.plus.size() == 2);
  CHECK(pf.plus[1] == GaussianRational(0, Rational(-1, 4)));
  CHECK(pf.plus[0].is_zero());

  pf = partial_fractions(over(0, 1));
  CHECK(pf.plus.empty());
  CHECK(pi_plus(over(0, 1)).is_zero());
}

TEST_CASE("reconstruction from partial fractions") {
  for (int t = 0; t < 1000; ++t) {
    XiNRational f = testgen::xi_rational(6, 8);
    auto pf = partial_fractions(f);
    CHECK(pf.reconstruct() == f);
    CHECK(pf.plus_part().minus_order() == 0);
    CHECK(pf.minus_part().plus_order() == 0);
    if (!pf.plus.empty()) CHECK(!pf.plus.back().is_zero());
  }
}

TEST_CASE("projection identities") {
  for (int t = 0; t < 200; ++t) {
    XiNRational f = proper_rational(6), g = proper_rational(6);
    GaussianRational s = testgen::gaussian();
    XiNRational pf = pi_plus(f);
    CHECK(pi_plus(pf) == pf);
    CHECK(pf + pi_minus(f) == f);
    CHECK(pi_plus(f + g * s) == pf + pi_plus(g) * s);
    CHECK(pi_plus(derivative(f)) == derivative(pf));
    CHECK(pi_minus(pi_minus(f)) == pi_minus(f));
  }
}

TEST_CASE("projection of the top symbol of nabla2 D^-2") {
  // pi+[-1/(1+x^2)] = i/(2(x-i))
  XiNRational f = over(1, 1) * GaussianRational(-1);
  CHECK(pi_plus(f) == over(1, 0) * GaussianRational(0, Rational(1, 2)));
  // pi+[x^2/(1+x^2)] = -pi+[1/(1+x^2)] once the constant is dropped
  XiNRational g = over(1, 1, Polynomial::monomial(2));
  CHECK(pi_plus(g) == pi_plus(f));
}

TEST_CASE("residue by derivative agrees with Laurent coefficient") {
  for (int t = 0; t < 300; ++t) {
    XiNRational f = testgen::xi_rational(6, 8);
    CHECK(residue_at_i(f) == residue_at_i_laurent(f));
  }
}

TEST_CASE("line integral examples") {
  CHECK(line_integral(over(1, 1)) == ExactScalar::pi());
  CHECK(line_integral(over(5, 2)) == ExactScalar(GaussianRational(0, Rational(-5, 32)), 1, 0));
  CHECK(line_integral(over(2, 2, Polynomial::monomial(1))).is_zero());
  CHECK(line_integral(XiNRational()).is_zero());
  CHECK_THROWS_AS(line_integral(over(1, 0)), DecayError);
  CHECK_THROWS_AS(line_integral(over(1, 1, Polynomial::monomial(1))), DecayError);
}

TEST_CASE("line integral against quadrature") {
  for (int t = 0; t < 100; ++t) {
    XiNRational f = testgen::integrable_rational(5);
    std::complex<double> exact = substitute_omega(line_integral(f)).to_complex();
    std::complex<double> numeric = integrate_real_line([&](double x) { return f(std::complex<double>(x, 0)); });
    double scale = std::max(std::abs(exact), 1e-12);
    CHECK(std::abs(exact - numeric) / scale <= 1e-8);
  }
}

TEST_CASE("integral of a derivative vanishes") {
  for (int t = 0; t < 200; ++t) {
    XiNRational f = proper_rational(5);
    CHECK(line_integral(derivative(f)).is_zero());
  }
}

TEST_CASE("projection acts termwise on restricted sums") {
  RestrictedSum s;
  ExactMatrix m = ExactMatrix::Identity(16, 16);
  s.add({BoundaryMonomial::h_prime(), {2, 0, 0}, over(1, 1)}, m);
  s.add({BoundaryMonomial::h_prime(), {2, 0, 0}, over(0, 2)}, m);
  RestrictedSum p = pi_plus(s);
  REQUIRE(p.size() == 1);
  CHECK(p.terms().begin()->first.xi_n == pi_plus(over(1, 1)));
}
