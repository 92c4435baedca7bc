// One line per acceptance criterion; exit status 0 only when all pass.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "generators.hpp"
#include "wres/clifford/trace_identities.hpp"
#include "wres/numeric/oracle.hpp"
#include "wres/numeric/quadrature.hpp"
#include "wres/pipeline/checks.hpp"
#include "wres/pipeline/report.hpp"
#include "wres/residue/halfplane.hpp"
#include "wres/symbol/restricted.hpp"
#include "wres/symbol/tables.hpp"

using namespace wres;
namespace tg = wres::testgen;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

bool relations_hold(const CliffordGenerators<GaussianRational>& g) {
  ExactMatrix id = g.identity();
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) {
      GaussianRational d = i == j ? 2 : 0;
      if (multiply(g.c[i], g.c[j]) + multiply(g.c[j], g.c[i]) != id * (-d)) return false;
      if (multiply(g.c_hat[i], g.c_hat[j]) + multiply(g.c_hat[j], g.c_hat[i]) != id * d) return false;
      if (!is_zero(multiply(g.c[i], g.c_hat[j]) + multiply(g.c_hat[j], g.c[i]))) return false;
    }
  return true;
}

Outcome clifford_relations() {
  for (int n : {4, 2, 6})
    if (!relations_hold(build_generators<GaussianRational>(n))) return {false, "relations fail for n = " + std::to_string(n)};
  return {true, "n = 4, 2, 6"};
}

Outcome trace_suite() {
  auto g = build_generators<GaussianRational>(4);
  auto bc = build_boundary_connection(g);
  if (trace(g.identity()) != GaussianRational(16)) return {false, "tr[id] != 16"};
  int checked = 0;
  for (std::uint64_t seed = 0; seed <= 20; ++seed) {
    ExactMatrix A = build_A(g, SubbundleData::random(4, seed));
    for (const auto& r : trace_identity_suite(g, bc, A)) {
      ++checked;
      if (!r.pass) return {false, r.name + " with seed " + std::to_string(seed)};
    }
  }
  if (trace_product(bc.P2, g.c[kNormal]) != GaussianRational(12)) return {false, "tr[P2 c(dxn)]"};
  return {true, std::to_string(checked) + " identities over 21 subbundles"};
}

XiNRational proper_rational(int max_order) {
  int a = tg::uniform(0, max_order), b = tg::uniform(0, max_order);
  if (a + b == 0) return {};
  std::vector<GaussianRational> c(tg::uniform(1, a + b));
  for (auto& v : c) v = tg::gaussian(6, 5);
  return XiNRational(Polynomial(std::move(c)), a, b);
}

Outcome residue_engine() {
  for (int t = 0; t < 1000; ++t) {
    XiNRational f = tg::xi_rational(6, 8);
    if (partial_fractions(f).reconstruct() != f) return {false, "reconstruction"};
    XiNRational p = proper_rational(6);
    XiNRational pp = pi_plus(p);
    if (pi_plus(pp) != pp) return {false, "idempotence"};
    if (pp + pi_minus(p) != p) return {false, "pi+ + pi- != id"};
  }
  double worst = 0;
  for (int t = 0; t < 100; ++t) {
    XiNRational f = tg::integrable_rational(5);
    auto exact = substitute_omega(line_integral(f)).to_complex();
    auto num = integrate_real_line([&](double x) { return f(std::complex<double>(x, 0)); });
    worst = std::max(worst, std::abs(exact - num) / std::max(std::abs(exact), 1e-12));
  }
  std::ostringstream os;
  os << "worst quadrature deviation " << worst;
  return {worst <= 1e-8, os.str()};
}

Outcome composition() {
  SymbolTables t(SubbundleData::random(4, 5));
  const auto& c = t.context();
  std::pair<SymbolName, SymbolName> pairs[] = {{SymbolName::DA, SymbolName::DAInv}, {SymbolName::DA2, SymbolName::DA2Inv}};
  for (auto [p, q] : pairs) {
    OperatorSymbol one = compose(t.get(p), t.get(q), -1);
    if (!vanishes_on_sphere(restrict_to_sphere(one.component(0) - c.scalar(1)))) return {false, "order 0"};
    if (!vanishes_on_sphere(restrict_to_sphere(one.component(-1)))) return {false, "order -1"};
  }
  return {true, "orders 0 and -1"};
}

const FixtureFile& fixtures() {
  static const FixtureFile f = FixtureFile::load(default_fixture_path());
  return f;
}

Outcome reproduction(OperatorPair pair) {
  BoundaryPipeline pipe(SubbundleData::random(4, 0));
  NumericOracle oracle(SubbundleData::random(4, 0));
  RunReport r = build_report(pipe, pair, {}, &fixtures(), &oracle, {});
  std::ostringstream os;
  bool ok = true;
  for (const auto& c : r.cases) {
    if (c.label == "a(I)" && !c.computed.is_zero()) ok = false;
    if (c.match) {
      os << c.label << " match; ";
      continue;
    }
    bool adjudicated = c.first_divergence && c.numeric && c.numeric->engine_confirmed;
    ok = ok && adjudicated;
    os << c.label << " diverges at " << c.first_divergence.value_or("?")
       << (adjudicated ? ", oracle confirms engine; " : ", NOT adjudicated; ");
  }
  if (!r.total.match && !r.total.first_divergence) ok = false;
  os << "total " << (r.total.match ? "match" : "localized to case " + r.total.first_divergence.value_or("?"));
  return {ok, os.str()};
}

Outcome self_consistency() {
  std::ostringstream os;
  bool ok = true;
  for (OperatorPair p : {OperatorPair::D2D2, OperatorPair::D1D3}) {
    const PairFixture* pf = fixtures().pair(p);
    if (!pf || !pf->total) return {false, "missing fixture for " + pair_name(p)};
    BoundaryExpression sum;
    for (const auto& c : pf->cases) sum += c.expected;
    bool exact = sum == pf->total->expected;
    ok = ok && exact;
    os << pair_name(p) << (exact ? " sums exactly" : " does not sum: " + (sum - pf->total->expected).to_string()) << "; ";
  }
  return {ok, os.str()};
}

Outcome independence() {
  std::ostringstream os;
  bool ok = true;
  for (OperatorPair p : {OperatorPair::D2D2, OperatorPair::D1D3}) {
    auto rep = a_independence_check(p, {0, 1, 2, 3, 4});
    ok = ok && rep.identical;
    os << pair_name(p) << (rep.identical ? " identical" : " differs") << "; ";
  }
  return {ok, os.str() + "seeds 0..4, ranks 1 and 2, S = 0 included"};
}

Outcome interior() {
  bool ok = true;
  for (int t = 0; t < 20; ++t) {
    auto R = CurvatureTensor::random(4, 1000 + t);
    auto rep = interior_trE_check(R, SubbundleData::random(4, 0));
    if (rep.total != GaussianRational(-4 * rep.s)) ok = false;
  }
  auto g = build_generators<GaussianRational>(4);
  std::ostringstream os;
  os << "tr(E) = -4s on 20 tensors; A-terms trace for random S:";
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    auto d = SubbundleData::random(4, seed);
    auto rep = interior_trE_check(CurvatureTensor::random(4, seed), d, random_nabla_A(g, d, seed));
    os << " " << rep.a_trace.to_string();
  }
  return {ok, os.str()};
}

Outcome cross_validation() {
  double worst = 0;
  bool ok = true;
  for (OperatorPair p : {OperatorPair::D2D2, OperatorPair::D1D3}) {
    BoundaryPipeline pipe(SubbundleData::random(4, 0));
    NumericOracle oracle(SubbundleData::random(4, 0));
    ReportOptions opt;
    opt.numeric_check = true;
    RunReport r = build_report(pipe, p, {}, nullptr, &oracle, opt);
    for (const auto& c : r.cases) {
      worst = std::max(worst, c.numeric->engine_error);
      ok = ok && c.numeric->engine_confirmed;
    }
  }
  std::ostringstream os;
  os << "10 cases, worst relative deviation " << worst;
  return {ok, os.str()};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "Clifford relations", 1, clifford_relations},
      {2, "trace identities", 1, trace_suite},
      {3, "projection and residue engine", 10, residue_engine},
      {4, "composition identity", 5, composition},
      {5, "case reproduction d2d2", 60, [] { return reproduction(OperatorPair::D2D2); }},
      {6, "case reproduction d1d3", 120, [] { return reproduction(OperatorPair::D1D3); }},
      {7, "fixture self-consistency", 1, self_consistency},
      {8, "A-independence", 300, independence},
      {9, "interior trace of E", 30, interior},
      {10, "numerical cross-validation", 300, cross_validation},
  };
  bool all = true;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = secs < c.limit;
    bool pass = o.pass && in_time;
    all = all && pass;
    std::printf("criterion %d %s: %s (%.2f s of %.0f s) %s%s\n", c.id, c.name, pass ? "PASS" : "FAIL", secs, c.limit,
                o.detail.c_str(), in_time ? "" : " [over time]");
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
