#include <doctest.h>

#include <chrono>
#include <random>

#include "wres/symbol/restricted.hpp"
#include "wres/symbol/tables.hpp"
#include "wres/clifford/generators.hpp"

using namespace wres;

namespace {

SymbolTables& tables() {
  static SymbolTables t(SubbundleData::random(4, 5));
  return t;
}

bool is_identity_on_sphere(const SymbolSum& s, const SymbolContext& c) {
  return vanishes_on_sphere(restrict_to_sphere(s - c.scalar(1)));
}

}  // namespace

TEST_CASE("composition with the inverse is the identity through two orders") {
  auto& t = tables();
  const auto& c = t.context();
  auto t0 = std::chrono::steady_clock::now();
  OperatorSymbol one = compose(t.get(SymbolName::DA), t.get(SymbolName::DAInv), -1);
  CHECK(is_identity_on_sphere(one.component(0), c));
  CHECK(vanishes_on_sphere(restrict_to_sphere(one.component(-1))));
  OperatorSymbol two = compose(t.get(SymbolName::DA2), t.get(SymbolName::DA2Inv), -1);
  CHECK(is_identity_on_sphere(two.component(0), c));
  CHECK(vanishes_on_sphere(restrict_to_sphere(two.component(-1))));
  OperatorSymbol three = compose(t.get(SymbolName::DA3), t.get(SymbolName::DA3Inv), -1);
  CHECK(is_identity_on_sphere(three.component(0), c));
  CHECK(vanishes_on_sphere(restrict_to_sphere(three.component(-1))));
  MESSAGE("seconds: " << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
}

namespace {

SamplePoint random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1, 1);
  SamplePoint pt;
  double a = u(rng) * 3.14159, b = u(rng) * 1.5;
  pt.xi_prime = {std::cos(a) * std::cos(b), std::sin(a) * std::cos(b), std::sin(b)};
  pt.xi_n = 2 * u(rng);
  pt.h_prime = 1 + 0.5 * u(rng);
  for (int j = 0; j < kDim; ++j) {
    pt.X[j] = u(rng);
    pt.Y[j] = u(rng);
    for (int l = 0; l < kDim; ++l) pt.dY[j][l] = u(rng);
  }
  return pt;
}

bool same(const SymbolSum& a, const SymbolSum& b) { return (a - b).is_zero(); }

NumericMatrix c_of_xi(const SamplePoint& pt) {
  auto g = build_generators<std::complex<double>>(kDim);
  NumericMatrix m = g.c[kNormal] * pt.xi_n;
  for (int j = 0; j < kNormal; ++j) m += g.c[j] * pt.xi_prime[j];
  return m;
}

}  // namespace

TEST_CASE("leading symbols match their closed forms at random points") {
  auto& t = tables();
  std::mt19937_64 rng(7);
  const std::complex<double> I(0, 1);
  for (int s = 0; s < 20; ++s) {
    SamplePoint pt = random_point(rng);
    std::complex<double> norm2 = 1.0 + pt.xi_n * pt.xi_n;
    NumericMatrix cx = c_of_xi(pt);
    NumericMatrix id = NumericMatrix::Identity(16, 16);
    CHECK((evaluate(t.get(SymbolName::DA).component(1), pt) - I * cx).norm() < 1e-12);
    CHECK((evaluate(t.get(SymbolName::DAInv).component(-1), pt) - I * cx / norm2).norm() < 1e-12);
    CHECK((evaluate(t.get(SymbolName::DA2).component(2), pt) - norm2 * id).norm() < 1e-12);
    CHECK((evaluate(t.get(SymbolName::DA2Inv).component(-2), pt) - id / norm2).norm() < 1e-12);
    CHECK((evaluate(t.get(SymbolName::DA3Inv).component(-3), pt) - I * cx / (norm2 * norm2)).norm() < 1e-12);
  }
}

TEST_CASE("Leibniz rule for symbol derivatives") {
  auto& t = tables();
  const SymbolSum& p = t.get(SymbolName::DAInv).component(-2);
  const SymbolSum& q = t.get(SymbolName::DA2Inv).component(-3);
  for (int j = 0; j < kDim; ++j) {
    CAPTURE(j);
    CHECK(same(d_xi(p * q, j), d_xi(p, j) * q + p * d_xi(q, j)));
  }
  const SymbolSum& u = t.get(SymbolName::DAInv).component(-1);
  const SymbolSum& v = t.get(SymbolName::DA3Inv).component(-3);
  REQUIRE(!u.has_opaque());
  REQUIRE(!v.has_opaque());
  CHECK(same(x_n_derivative(u * v), x_n_derivative(u) * v + u * x_n_derivative(v)));
  CHECK(d_x(p, 0).is_zero());
}

TEST_CASE("composition is linear in each factor") {
  auto& t = tables();
  const OperatorSymbol& p = t.get(SymbolName::DA);
  OperatorSymbol q = t.get(SymbolName::DA2Inv);
  OperatorSymbol q3 = q;
  for (auto& [r, s] : q3.components) s *= GaussianRational(3);
  OperatorSymbol a = compose(p, q, -2), b = compose(p, q3, -2);
  for (int r = -1; r >= -2; --r) CHECK(same(b.component(r), a.component(r) * GaussianRational(3)));
  for (int r = -1; r >= -2; --r) {
    SymbolSum sum;
    for (const auto& term : composition_terms(p, q, r)) sum += term.value;
    CHECK(same(sum, a.component(r)));
  }
}

TEST_CASE("symbol name errors") {
  CHECK(parse_symbol_name("D_A_inv") == SymbolName::DAInv);
  CHECK(symbol_name_string(SymbolName::Nabla2DA2Inv) == "nabla2_D2_inv");
  CHECK_THROWS_AS(parse_symbol_name("D_A_squared"), std::invalid_argument);
  CHECK_THROWS_AS(SymbolTables(SubbundleData::zero(3, {2})), std::invalid_argument);
}

TEST_CASE("opaque factors have no x-derivative") {
  auto& t = tables();
  SymbolSum o = t.get(SymbolName::DAInv).component(-1).as_opaque();
  CHECK(o.has_opaque());
  CHECK_THROWS_AS(x_n_derivative(o), ModelingError);
  CHECK_NOTHROW(d_xi(o, kNormal));
  CHECK_THROWS_AS(d_xi(o, kDim), std::out_of_range);
}

TEST_CASE("truncated components are reported") {
  auto& t = tables();
  const OperatorSymbol& inv = t.get(SymbolName::DAInv);
  CHECK_THROWS_AS(inv.component(inv.lowest_known - 1), TruncationError);
  CHECK(inv.component(inv.top_order + 1).is_zero());
  CHECK(t.get(SymbolName::DA).component(-5).is_zero());
  CHECK_THROWS_AS(compose(inv, t.get(SymbolName::DA2Inv), -10), TruncationError);
}
