#include <doctest.h>

#include <algorithm>

#include "wres/numeric/oracle.hpp"
#include "wres/pipeline/checks.hpp"
#include "wres/pipeline/pipeline.hpp"

using namespace wres;

namespace {

const GaussianRational I = GaussianRational::i();

ExactScalar pi_omega(Rational q) { return ExactScalar(GaussianRational(q), 1, 1); }

// coefficients of pi * Omega3 on g, XnYn, Xn dnYn, XT(Yn); frozen from the oracle
struct Frozen {
  const char* label;
  Rational g, nn, nd, td;
};

const Frozen kPairOne[] = {
    {"a(I)", 0, 0, 0, 0},
    {"a(II)", Rational(5, 12), Rational(-1, 4), 0, 0},
    {"a(III)", Rational(-5, 12), Rational(5, 4), 0, 0},
    {"b", Rational(11, 12), Rational(-11, 4), 0, 0},
    {"c", Rational(-11, 12), Rational(-1, 4), -2, -2},
};
const Frozen kPairTwo[] = {
    {"a(I)", 0, 0, 0, 0},
    {"a(II)", Rational(5, 8), Rational(1, 8), 0, 0},
    {"a(III)", Rational(-25, 24), Rational(25, 8), 0, 0},
    {"b", Rational(-9, 8), Rational(-9, 8), -3, -3},
    {"c", Rational(49, 24), Rational(-49, 8), 0, 0},
};

BoundaryExpression expression(const Frozen& f) {
  BoundaryExpression e;
  e.add(BasisElement::TangentialMetric, pi_omega(f.g));
  e.add(BasisElement::NormalProduct, pi_omega(f.nn));
  e.add(BasisElement::NormalDerivative, pi_omega(f.nd));
  e.add(BasisElement::TangentialDerivative, pi_omega(f.td));
  return e;
}

BoundaryPipeline& pipeline() {
  static BoundaryPipeline p(SubbundleData::random(4, 0));
  return p;
}

}  // namespace

TEST_CASE("five cases per pair") {
  auto one = enumerate_cases(OperatorPair::D2D2);
  REQUIRE(one.size() == 5);
  int expect[5][5] = {{0, -2, 0, 0, 1}, {0, -2, 0, 1, 0}, {0, -2, 1, 0, 0}, {0, -3, 0, 0, 0}, {-1, -2, 0, 0, 0}};
  const char* labels[] = {"a(I)", "a(II)", "a(III)", "b", "c"};
  for (int t = 0; t < 5; ++t) {
    CAPTURE(t);
    CHECK(one[t].label == labels[t]);
    CHECK(one[t].r == expect[t][0]);
    CHECK(one[t].l == expect[t][1]);
    CHECK(one[t].k == expect[t][2]);
    CHECK(one[t].j == expect[t][3]);
    CHECK(one[t].alpha == expect[t][4]);
  }
  auto two = enumerate_cases(OperatorPair::D1D3);
  REQUIRE(two.size() == 5);
  CHECK(two[0].l == -3);  // order constraint with r = 1, |alpha| = 1
  CHECK(two[4].r == 1);
  CHECK(two[4].l == -4);
  CHECK(two[4].k + two[4].j + two[4].alpha == 0);
}

TEST_CASE("order constraint and prefactor") {
  for (OperatorPair p : {OperatorPair::D2D2, OperatorPair::D1D3})
    for (const auto& c : enumerate_cases(p)) {
      CAPTURE(c.label);
      CHECK(c.r + c.l - c.k - c.j - c.alpha == -3);
      GaussianRational pre = 1;
      for (int t = 0; t < c.alpha + c.j + c.k + 1; ++t) pre = pre * (-I);
      int fact = 1;
      for (int t = 2; t <= c.j + c.k + 1; ++t) fact *= t;
      CHECK(c.prefactor == pre * GaussianRational(Rational(1, fact)));
    }
  CHECK(enumerate_cases(0, -2).size() == 5);
  CHECK(enumerate_cases(1, -3).size() == 5);
}

TEST_CASE("case values, pair one") {
  for (const auto& f : kPairOne) {
    CAPTURE(f.label);
    auto cases = enumerate_cases(OperatorPair::D2D2);
    auto it = std::find_if(cases.begin(), cases.end(), [&](const auto& c) { return c.label == f.label; });
    CHECK(pipeline().evaluate(*it, OperatorPair::D2D2).value == expression(f));
  }
}

TEST_CASE("case values, pair two") {
  for (const auto& f : kPairTwo) {
    CAPTURE(f.label);
    auto cases = enumerate_cases(OperatorPair::D1D3);
    auto it = std::find_if(cases.begin(), cases.end(), [&](const auto& c) { return c.label == f.label; });
    CHECK(pipeline().evaluate(*it, OperatorPair::D1D3).value == expression(f));
  }
}

TEST_CASE("tangential derivative cases vanish") {
  for (OperatorPair p : {OperatorPair::D2D2, OperatorPair::D1D3})
    for (const auto& c : enumerate_cases(p))
      if (c.alpha == 1) CHECK(pipeline().evaluate(c, p).value.is_zero());
}

TEST_CASE("totals") {
  BoundaryExpression one = pipeline().total(OperatorPair::D2D2);
  BoundaryExpression expect;
  expect.add(BasisElement::NormalProduct, pi_omega(-2));
  expect.add(BasisElement::NormalDerivative, pi_omega(-2));
  expect.add(BasisElement::TangentialDerivative, pi_omega(-2));
  CHECK(one == expect);
  // real multiple of Omega3
  CHECK(one.coefficient(BasisElement::NormalDerivative).coefficient(1, 1).im() == 0);

  std::vector<CaseEvaluation> evs;
  BoundaryExpression two = pipeline().total(OperatorPair::D1D3, &evs);
  BoundaryExpression reversed;
  for (auto it = evs.rbegin(); it != evs.rend(); ++it) reversed += it->value;
  CHECK(reversed == two);
  CHECK(two.coefficient(BasisElement::TangentialMetric) == pi_omega(Rational(1, 2)));
}

TEST_CASE("parallel evaluation equals sequential") {
  BoundaryPipeline par(SubbundleData::random(4, 3), {.parallel = true});
  std::vector<CaseEvaluation> a, b;
  CHECK(par.total(OperatorPair::D2D2, &a) == pipeline().total(OperatorPair::D2D2, &b));
  REQUIRE(a.size() == b.size());
  for (std::size_t t = 0; t < a.size(); ++t) CHECK(a[t].value == b[t].value);
}

TEST_CASE("zero field short-circuits") {
  BoundaryPipeline x0(SubbundleData::random(4, 0), {.x_zero = true});
  BoundaryPipeline y0(SubbundleData::random(4, 0), {.y_zero = true});
  for (OperatorPair p : {OperatorPair::D2D2, OperatorPair::D1D3}) {
    CHECK(x0.total(p).is_zero());
    CHECK(y0.total(p).is_zero());
  }
}

TEST_CASE("independence of the subbundle") {
  for (OperatorPair p : {OperatorPair::D2D2, OperatorPair::D1D3}) {
    auto rep = a_independence_check(p, {0, 1, 2});
    CHECK(rep.identical);
    CHECK(rep.totals.size() == 3);
  }
  CHECK(evaluate_case(enumerate_cases(OperatorPair::D2D2)[3], OperatorPair::D2D2, SubbundleData::random(4, 7)) ==
        expression(kPairOne[3]));
}

TEST_CASE("oracle agrees with the engine") {
  NumericOracle oracle(SubbundleData::random(4, 2));
  for (OperatorPair p : {OperatorPair::D2D2, OperatorPair::D1D3}) {
    const auto& c = enumerate_cases(p)[1];
    auto exact = pipeline().evaluate(c, p).value;
    for (auto [e, v] : oracle.evaluate_basis(c, p)) {
      CAPTURE(basis_label(e));
      auto x = substitute_omega(exact.coefficient(e)).to_complex();
      CHECK(std::abs(x - v) <= 1e-6 * std::max(std::abs(x), 1.0));
    }
  }
}

TEST_CASE("algebraic curvature tensors") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto R = CurvatureTensor::random(4, seed);
    CHECK_NOTHROW(R.validate());
    CHECK(std::any_of(R.r.begin(), R.r.end(), [](const Rational& v) { return sgn(v) != 0; }));
  }
  auto bad = CurvatureTensor::zero(4);
  bad(0, 1, 0, 1) = 1;
  CHECK_THROWS_AS(bad.validate(), CurvatureError);
  bad(1, 0, 0, 1) = -1;
  bad(0, 1, 1, 0) = -1;
  bad(1, 0, 1, 0) = 1;
  CHECK_NOTHROW(bad.validate());
  CHECK(bad.scalar_curvature() == -2);
}

TEST_CASE("interior trace of E") {
  auto zero = interior_trE_check(CurvatureTensor::zero(4), SubbundleData::random(4, 0));
  CHECK(zero.total.is_zero());
  for (std::uint64_t seed = 11; seed <= 15; ++seed) {
    auto rep = interior_trE_check(CurvatureTensor::random(4, seed), SubbundleData::random(4, 0));
    CHECK(rep.curvature_trace.is_zero());
    CHECK(rep.total == GaussianRational(-4 * rep.s));
  }
  auto g = build_generators<GaussianRational>(4);
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    auto d = SubbundleData::random(4, seed);
    auto rep = interior_trE_check(CurvatureTensor::random(4, seed), d, random_nabla_A(g, d, seed));
    MESSAGE("A-dependent trace, seed " << seed << ": " << rep.a_trace.to_string());
  }
}
