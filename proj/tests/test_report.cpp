#include <doctest.h>

#include <algorithm>

#include <json.hpp>

#include "wres/pipeline/report.hpp"

using namespace wres;

namespace {

using cd = std::complex<double>;

AnchorEnv env_at(double xn, double h) {
  AnchorEnv env = make_anchor_env(ExactMatrix::Zero(16, 16));
  env.pt.xi_prime = {0.6, 0.8, 0};
  env.pt.xi_n = xn;
  env.pt.h_prime = h;
  env.pt.X = {1, 2, 3, 4};
  env.pt.Y = {-1, 0.5, 2, 3};
  env.pt.dY[0][3] = 7;
  return env;
}

cd scalar(const std::string& text, const AnchorEnv& env) {
  AnchorValue v = AnchorExpression::parse(text).evaluate(env);
  REQUIRE(!v.matrix);
  return v.s;
}

const FixtureFile& fixtures() {
  static const FixtureFile f = FixtureFile::load(default_fixture_path());
  return f;
}

BoundaryPipeline& pipeline() {
  static BoundaryPipeline p(SubbundleData::random(4, 0));
  return p;
}

const RunReport& pair_one() {
  static const RunReport r = build_report(pipeline(), OperatorPair::D2D2, {}, &fixtures(), nullptr, {});
  return r;
}

}  // namespace

TEST_CASE("anchor expressions: arithmetic and atoms") {
  auto env = env_at(0.5, 2);
  CHECK(scalar("1+2*3", env) == cd(7));
  CHECK(scalar("2^3 - 1/4", env) == cd(7.75));
  CHECK(scalar("-i*i", env) == cd(1));
  CHECK(std::abs(scalar("1/(xn-i)", env) - 1.0 / cd(0.5, -1)) < 1e-14);
  CHECK(scalar("h*xn", env) == cd(1));
  CHECK(scalar("X[4]*Y[4]", env) == cd(12));
  CHECK(std::abs(scalar("XTxi", env) - cd(0.6 + 1.6)) < 1e-14);
  CHECK(std::abs(scalar("YTxi", env) - cd(-0.6 + 0.4)) < 1e-14);
  CHECK(std::abs(scalar("XYT - XTxi*YTxi", env)) < 1e-14);
  CHECK(scalar("dY[1,4]", env) == cd(7));
  CHECK(scalar("xi[4]", env) == cd(0.5));
  CHECK(std::abs(scalar("sum_t(k, xi[k]^2)", env) - 1.0) < 1e-14);
}

TEST_CASE("anchor expressions: Clifford values") {
  auto env = env_at(0.3, 1);
  CHECK(std::abs(scalar("tr(id)", env) - 16.0) < 1e-12);
  CHECK(std::abs(scalar("tr(cn*cn)", env) + 16.0) < 1e-12);
  CHECK(std::abs(scalar("tr(cfull*cfull)", env) + 16.0 * (1 + 0.09)) < 1e-12);
  CHECK(std::abs(scalar("tr(sum_a(k, xi[k]*c[k]) - cfull)", env)) < 1e-12);
  CHECK(std::abs(scalar("tr(ch[1]*ch[1])", env) - 16.0) < 1e-12);
  CHECK(std::abs(scalar("tr(P2*cn)", env) - 12.0) < 1e-12);
  CHECK(std::abs(scalar("tr(dcxi*cxi)", env) + 8.0) < 1e-12);
  AnchorValue v = AnchorExpression::parse("2 + cn").evaluate(env);
  CHECK(v.matrix);
  CHECK(std::abs(v.m.trace() - cd(32)) < 1e-12);
}

TEST_CASE("anchor expressions: errors") {
  CHECK_THROWS_AS(AnchorExpression::parse("1 +"), ExpressionError);
  CHECK_THROWS_AS(AnchorExpression::parse("(1"), ExpressionError);
  CHECK_THROWS_AS(AnchorExpression::parse("foo"), ExpressionError);
  CHECK_THROWS_AS(AnchorExpression::parse("c[5]"), ExpressionError);
  CHECK_THROWS_AS(AnchorExpression::parse("xi[k]"), ExpressionError);
  CHECK_THROWS_AS(AnchorExpression::parse("1/cn"), ExpressionError);
  CHECK_THROWS_AS(AnchorExpression::parse("dY[1]"), ExpressionError);
}

TEST_CASE("fixture file") {
  const FixtureFile& f = fixtures();
  CHECK(f.version >= 1);
  for (OperatorPair p : {OperatorPair::D2D2, OperatorPair::D1D3}) {
    const PairFixture* pf = f.pair(p);
    REQUIRE(pf);
    CHECK(pf->cases.size() == 5);
    REQUIRE(pf->total);
    CHECK(!pf->total->quote.empty());
    for (const auto& c : pf->cases) {
      CAPTURE(c.label);
      CHECK(!c.citation.empty());
      CHECK(!c.quote.empty());
      for (const auto& a : c.anchors) {
        CHECK(!a.quote.empty());
        CHECK(a.id.rfind(pair_name(p) + "." + c.label + ".", 0) == 0);
      }
    }
    CHECK(pf->find("a(I)")->expected.is_zero());
  }
  // a basis term of the second case of pair one
  BoundaryExpression a2 = f.pair(OperatorPair::D2D2)->find("a(II)")->expected;
  CHECK(a2.coefficient(BasisElement::NormalProduct) == ExactScalar(GaussianRational(Rational(-15, 8)), 1, 1));
}

TEST_CASE("malformed fixture files") {
  CHECK_THROWS_AS(FixtureFile::parse("{"), FixtureError);
  CHECK_THROWS_AS(FixtureFile::parse("{\"version\": 1}"), FixtureError);
  CHECK_THROWS_AS(FixtureFile::parse(R"({"version":1,"pairs":{"d9":{"cases":[]}}})"), FixtureError);
  CHECK_THROWS_AS(
      FixtureFile::parse(
          R"({"version":1,"pairs":{"d2d2":{"cases":[{"label":"b","citation":"x","quote":"q","expected":[{"monomial":"nope","pi_power":1,"omega_power":1,"re":"1","im":"0"}]}]}}})"),
      FixtureError);
  CHECK_THROWS_AS(
      FixtureFile::parse(
          R"({"version":1,"pairs":{"d2d2":{"cases":[{"label":"b","citation":"x","quote":"q","expected":[],"anchors":[{"id":"a","citation":"c","quote":"q","stage":"bogus","expr":"1"}]}]}}})"),
      FixtureError);
  CHECK_THROWS_AS(
      FixtureFile::parse(
          R"({"version":1,"pairs":{"d2d2":{"cases":[{"label":"b","citation":"x","quote":"q","expected":[],"anchors":[{"id":"a","citation":"c","quote":"q","stage":"trace","expr":"1 +"}]}]}}})"),
      FixtureError);
  CHECK_THROWS_AS(FixtureFile::load("/nonexistent/fixtures.json"), FixtureError);
  auto ok = FixtureFile::parse(R"({"version":3,"pairs":{}})");
  CHECK(ok.version == 3);
  CHECK(ok.pair(OperatorPair::D2D2) == nullptr);
}

TEST_CASE("published values are self-consistent") {
  for (OperatorPair p : {OperatorPair::D2D2, OperatorPair::D1D3}) {
    const PairFixture* pf = fixtures().pair(p);
    BoundaryExpression sum;
    for (const auto& c : pf->cases) sum += c.expected;
    CHECK(sum == pf->total->expected);
  }
}

TEST_CASE("mismatch protocol localizes divergences") {
  const RunReport& r = pair_one();
  REQUIRE(r.cases.size() == 5);
  CHECK(r.cases[0].match);
  CHECK(!r.cases[0].first_divergence);
  for (std::size_t t = 1; t < 5; ++t) {
    const auto& c = r.cases[t];
    CAPTURE(c.label);
    CHECK(!c.match);
    REQUIRE(c.first_divergence);
    auto first_fail = std::find_if(c.anchors.begin(), c.anchors.end(), [](const auto& a) { return !a.pass; });
    REQUIRE(first_fail != c.anchors.end());
    CHECK(*c.first_divergence == first_fail->id);
  }
  CHECK(*r.cases[1].first_divergence == "d2d2.a(II).projected");
  CHECK(r.cases[1].anchors[0].pass);  // the second factor agrees
  CHECK(!r.total.match);
  CHECK(r.total.first_divergence == std::optional<std::string>("a(II)"));
  CHECK(!r.all_match());
}

TEST_CASE("reports round-trip through JSON") {
  const RunReport& r = pair_one();
  CHECK(parse_json_report(emit_json(r)) == r);
  RunReport empty;
  empty.pair = "d1d3";
  empty.fixtures_version = 1;
  std::string text = emit_json(empty);
  CHECK(text.find("\"cases\": []") != std::string::npos);
  CHECK(parse_json_report(text) == empty);
  CHECK_THROWS_AS(parse_json_report("[]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_json_report("{\"pair\": 1}"), std::invalid_argument);
}

TEST_CASE("JSON basis terms") {
  auto r = build_report(pipeline(), OperatorPair::D2D2, {"a(II)"}, &fixtures(), nullptr, {.adjudicate = false});
  auto j = nlohmann::json::parse(emit_json(r));
  const auto& fx = j["cases"][0]["fixture"];
  bool found = false;
  for (const auto& t : fx)
    if (t["monomial"] == "XnYn·h'(0)") {
      found = true;
      CHECK(t["pi_power"] == 1);
      CHECK(t["omega_power"] == 1);
      CHECK(t["re"] == "-15/8");
      CHECK(t["im"] == "0");
    }
  CHECK(found);
  CHECK(j["total"]["fixture"].is_null());
}

TEST_CASE("CSV has one row per basis term") {
  const RunReport& r = pair_one();
  std::size_t terms = 0;
  for (const auto& c : r.cases)
    for (const auto& [b, v] : c.computed.coefficients()) terms += v.terms().size();
  for (const auto& [b, v] : r.total.computed.coefficients()) terms += v.terms().size();
  std::string csv = emit_csv(r);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == long(terms + 1));
  CHECK(csv.rfind("pair,section,label,monomial,pi_power,omega_power,re,im,match,first_divergence\n", 0) == 0);
  CHECK(csv.find("\"g(XT,YT)·h'(0)\"") != std::string::npos);
}

TEST_CASE("text rendering") {
  BoundaryExpression e;
  e.add(BasisElement::NormalProduct, ExactScalar(GaussianRational(Rational(-542, 16), Rational(-71, 16)), 1, 1));
  CHECK(render_terms(e) == "-(542+71i)/16 · XnYn·h'(0)·π·Ω3");
  CHECK(render_terms(BoundaryExpression()) == "0");
  std::string text = emit_text(pair_one());
  CHECK(text.find("first divergence d2d2.a(II).projected") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  BoundaryPipeline other(SubbundleData::random(4, 0));
  auto again = build_report(other, OperatorPair::D2D2, {}, &fixtures(), nullptr, {});
  CHECK(emit_json(again) == emit_json(pair_one()));
  CHECK(emit_csv(again) == emit_csv(pair_one()));
}

TEST_CASE("case selection") {
  auto r = build_report(pipeline(), OperatorPair::D1D3, {"a(I)"}, &fixtures(), nullptr, {});
  REQUIRE(r.cases.size() == 1);
  CHECK(r.cases[0].computed.is_zero());
  CHECK(r.cases[0].match);
  CHECK(r.all_match());
  CHECK(!r.total.fixture);
  CHECK_THROWS_AS(build_report(pipeline(), OperatorPair::D1D3, {"z"}, &fixtures(), nullptr, {}), std::invalid_argument);
}

TEST_CASE("omega substitution of a report") {
  RunReport r = substitute_omega(pair_one());
  for (const auto& c : r.cases)
    for (const auto& [b, v] : c.computed.coefficients())
      for (const auto& [grade, coef] : v.terms()) CHECK(grade.second == 0);
  CHECK(r.cases[4].computed.coefficient(BasisElement::TangentialMetric) ==
        r.cases[4].fixture->coefficient(BasisElement::TangentialMetric));
}
