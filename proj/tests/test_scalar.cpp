#include <doctest.h>

#include <cmath>
#include <numbers>

#include "generators.hpp"
#include "wres/scalar/boundary_monomial.hpp"

using namespace wres;
namespace tg = wres::testgen;

namespace {

const GaussianRational I = GaussianRational::i();

// d^k f / dx^k at x0 by the Cauchy integral on a small circle
std::complex<double> cauchy_derivative(const XiNRational& f, std::complex<double> x0, int k, double r = 0.3) {
  const int N = 64;
  std::complex<double> sum = 0;
  for (int m = 0; m < N; ++m) {
    std::complex<double> e = std::polar(1.0, 2 * std::numbers::pi * m / N);
    sum += f(x0 + r * e) / std::pow(r * e, k);
  }
  return sum * std::tgamma(k + 1.0) / double(N);
}

}  // namespace

TEST_CASE("gaussian rational arithmetic") {
  CHECK((GaussianRational(1) + I) * (GaussianRational(1) - I) == GaussianRational(2));
  CHECK((GaussianRational(0, 2)).pow(-6) == GaussianRational(Rational(-1, 64)));
  GaussianRational z(Rational(-542, 16), Rational(-71, 16));
  CHECK((z + (-z)).is_zero());
  CHECK_THROWS_AS(GaussianRational(1) / GaussianRational(0), ArithmeticError);
  CHECK(GaussianRational(Rational(4, 8)).re().get_den() == 2);
}

TEST_CASE("rendering") {
  CHECK(GaussianRational(Rational(-542, 16), Rational(-71, 16)).to_string() == "-(542+71i)/16");
  CHECK(GaussianRational(Rational(-15, 8)).to_string() == "-15/8");
  CHECK(GaussianRational(0, Rational(-5, 4)).to_string() == "-5i/4");
  CHECK(GaussianRational(0, 1).to_string() == "i");
  CHECK(rational_string(parse_rational("-6/4")) == "-3/2");
  CHECK_THROWS(parse_rational("1.5"));
}

TEST_CASE("field axioms on random triples") {
  for (int t = 0; t < 1000; ++t) {
    GaussianRational a = tg::gaussian(), b = tg::gaussian(), c = tg::gaussian();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("xi rational derivative examples") {
  XiNRational inv = XiNRational::power_form(0, -1);
  XiNRational d2 = derivative(inv, 2);
  XiNRational expected(Polynomial(std::vector<GaussianRational>{-2, 0, 6}), 3, 3);
  CHECK(d2 == expected);
  CHECK(derivative(inv, 1) == XiNRational(Polynomial::monomial(1, -2), 2, 2));
  CHECK(derivative(inv, 0) == inv);
}

TEST_CASE("xi rational derivative agrees with contour differentiation") {
  for (int t = 0; t < 200; ++t) {
    XiNRational f = tg::xi_rational();
    int k = tg::uniform(1, 3);
    std::complex<double> x0(tg::uniform(-20, 20) / 10.0, 0.0);
    std::complex<double> exact = derivative(f, k)(x0);
    std::complex<double> approx = cauchy_derivative(f, x0, k);
    CHECK(std::abs(exact - approx) <= 1e-7 * std::max(1.0, std::abs(exact)));
  }
}

TEST_CASE("Leibniz rule for xi rationals") {
  for (int t = 0; t < 300; ++t) {
    XiNRational f = tg::xi_rational(), g = tg::xi_rational();
    CHECK(derivative(f * g) == derivative(f) * g + f * derivative(g));
  }
}

TEST_CASE("reduction canonicality") {
  for (int t = 0; t < 300; ++t) {
    XiNRational f = tg::xi_rational(), g = tg::xi_rational(), h = tg::xi_rational();
    CHECK((f + g) * h == f * h + g * h);
    CHECK((f * g) * h == f * (h * g));
    // (x - i) / (x - i)^2 == 1 / (x - i)
    XiNRational u(Polynomial::linear_power(I, 1), 2, 0);
    CHECK(u == XiNRational(Polynomial(1), 1, 0));
    CHECK((f - f).is_zero());
  }
  XiNRational a = XiNRational::power_form(2, -1) + XiNRational::power_form(0, -1);
  CHECK(a == XiNRational(1));
}

TEST_CASE("omega substitution") {
  CHECK(substitute_omega(ExactScalar(1, 1, 1)) == ExactScalar(4, 2, 0));
  CHECK(substitute_omega(ExactScalar(GaussianRational(Rational(-15, 8)), 1, 1)) ==
        ExactScalar(GaussianRational(Rational(-15, 2)), 2, 0));
  CHECK(substitute_omega(ExactScalar()).is_zero());
  for (int t = 0; t < 300; ++t) {
    ExactScalar a = tg::exact_scalar(), b = tg::exact_scalar();
    CHECK(substitute_omega(a * b) == substitute_omega(a) * substitute_omega(b));
    CHECK(substitute_omega(a + b) == substitute_omega(a) + substitute_omega(b));
    CHECK(substitute_omega(substitute_omega(a)) == substitute_omega(a));
  }
}

TEST_CASE("exact scalar bookkeeping") {
  ExactScalar s = ExactScalar(2, 1, 1) + ExactScalar(-2, 1, 1);
  CHECK(s.is_zero());
  ExactScalar t = ExactScalar(3, 2, 0) * ExactScalar::omega3();
  CHECK(t.coefficient(2, 1) == GaussianRational(3));
  CHECK(std::abs(ExactScalar(1, 1, 1).to_complex() - std::complex<double>(4 * std::numbers::pi * std::numbers::pi)) <
        1e-12);
}

TEST_CASE("boundary monomial is a commutative monoid") {
  BoundaryMonomial a = BoundaryMonomial::x(2) * BoundaryMonomial::h_prime();
  BoundaryMonomial b = BoundaryMonomial::y(3) * BoundaryMonomial::dy(3, 3);
  CHECK(a * b == b * a);
  CHECK((a * b) * BoundaryMonomial::x(0) == a * (b * BoundaryMonomial::x(0)));
  CHECK(a * BoundaryMonomial::one() == a);
  CHECK((a * b).degree() == 4);
  CHECK(BoundaryMonomial::x(0).to_string() == "X1");
}
