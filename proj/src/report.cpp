#include "wres/pipeline/report.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "wres/numeric/oracle.hpp"
#include "wres/numeric/quadrature.hpp"

namespace wres {

using cd = std::complex<double>;

bool RunReport::all_match() const {
  for (const auto& c : cases)
    if (!c.match) return false;
  return true;
}

namespace {

constexpr double kAnchorTolerance = 1e-8;
constexpr int kPointSamples = 6;
constexpr int kSphereSamples = 3;

// restricted sum with numeric matrices, for repeated evaluation
struct CompiledSum {
  struct Term {
    BoundaryMonomial boundary;
    XiPrimeMonomial xi_prime;
    XiNRational xi_n;
    NumericMatrix m;
  };
  std::vector<Term> terms;

  explicit CompiledSum(const RestrictedSum& s) {
    for (const auto& [k, m] : s.terms()) terms.push_back({k.boundary, k.xi_prime, k.xi_n, to_numeric(m)});
  }
  NumericMatrix operator()(const SamplePoint& pt) const {
    NumericMatrix out = NumericMatrix::Zero(1 << kDim, 1 << kDim);
    for (const auto& t : terms) {
      cd w = evaluate(t.boundary, pt) * t.xi_n(pt.xi_n);
      for (int j = 0; j < kNormal; ++j)
        for (int e = 0; e < t.xi_prime[j]; ++e) w *= pt.xi_prime[j];
      if (w != cd(0)) out += t.m * w;
    }
    return out;
  }
};

SamplePoint random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1, 1);
  std::normal_distribution<double> g;
  SamplePoint p;
  double r = 0;
  do {
    for (auto& x : p.xi_prime) x = g(rng);
    r = std::sqrt(p.xi_prime[0] * p.xi_prime[0] + p.xi_prime[1] * p.xi_prime[1] + p.xi_prime[2] * p.xi_prime[2]);
  } while (r < 1e-6);
  for (auto& x : p.xi_prime) x /= r;
  p.xi_n = 2 * u(rng);
  p.h_prime = 1 + 0.5 * u(rng);
  for (auto& x : p.X) x = u(rng);
  for (auto& y : p.Y) y = u(rng);
  for (auto& row : p.dY)
    for (auto& v : row) v = u(rng);
  return p;
}

// product Gauss rule on S^2: cos(theta) Gauss-Legendre times uniform phi
template <typename F>
auto sphere_integral(SamplePoint pt, F&& f) {
  const QuadratureRule& rule = gauss_legendre(8);
  constexpr int kPhi = 16;
  decltype(f(pt)) acc{};
  bool first = true;
  for (std::size_t a = 0; a < rule.nodes.size(); ++a) {
    const double z = rule.nodes[a], s = std::sqrt(1 - z * z);
    for (int b = 0; b < kPhi; ++b) {
      const double phi = 2 * M_PI * (b + 0.5) / kPhi;
      pt.xi_prime = {s * std::cos(phi), s * std::sin(phi), z};
      auto v = f(pt) * (rule.weights[a] * 2 * M_PI / kPhi);
      if (first) {
        acc = v;
        first = false;
      } else {
        acc += v;
      }
    }
  }
  return acc;
}

double rel_error(const NumericMatrix& a, const NumericMatrix& b) {
  return (a - b).norm() / std::max({1.0, a.norm(), b.norm()});
}
double rel_error(cd a, cd b) { return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}); }

bool is_first_side(const std::string& stage) {
  return stage == "derived" || stage == "projected" || stage == "first" || stage == "parts_first" ||
         stage == "piece_projected";
}

class StageSource {
 public:
  StageSource(BoundaryPipeline& pipe, const CaseEvaluation& ev, OperatorPair pair) : pipe_(pipe), ev_(ev), pair_(pair) {}

  const CaseEvaluation& piece(const PieceSelector& sel) {
    auto key = std::make_tuple(sel.a, sel.b, sel.alpha);
    auto it = pieces_.find(key);
    if (it != pieces_.end()) return it->second;
    SymbolSum sum;
    for (const auto& t : pipe_.first_pieces(ev_.bcase, pair_)) {
      bool alpha_ok = sel.alpha == kAnyAlpha ? t.alpha >= 0 : t.alpha == sel.alpha;
      if (t.a == sel.a && t.b == sel.b && alpha_ok) sum += t.value;
    }
    return pieces_.emplace(key, pipe_.evaluate_with(ev_.bcase, pair_, sum)).first->second;
  }

  RestrictedSum matrix_stage(const std::string& stage, const AnchorSpec& a) {
    const CaseEvaluation& src = stage.rfind("piece_", 0) == 0 ? piece(*a.piece) : ev_;
    if (src.factors.size() != 1) throw std::invalid_argument("matrix anchors need a case without tangential derivative");
    const CaseFactors& f = src.factors[0];
    if (stage == "derived") return f.derived;
    if (stage == "projected" || stage == "piece_projected") return f.projected;
    if (stage == "first") return f.first;
    if (stage == "parts_first") return d_xi_n(f.first, 1);
    if (stage == "second") return f.second;
    if (stage == "second_base") return f.second_base;
    throw std::invalid_argument("not a matrix stage: " + stage);
  }

  ScalarIntegrand scalar_stage(const std::string& stage, const AnchorSpec& a) {
    if (stage == "trace") return ev_.trace;
    if (stage == "piece_trace") return piece(*a.piece).trace;
    if (stage == "parts") {
      ScalarIntegrand out;
      for (const auto& f : ev_.factors) {
        if (f.second.is_zero()) continue;
        for (const auto& [k, r] : trace_product(d_xi_n(f.first, 1), f.second_base).terms) out.add(k, r);
      }
      return out;
    }
    throw std::invalid_argument("not a scalar stage: " + stage);
  }

 private:
  BoundaryPipeline& pipe_;
  const CaseEvaluation& ev_;
  OperatorPair pair_;
  std::map<std::tuple<int, int, int>, CaseEvaluation> pieces_;
};

AnchorResult check_one(StageSource& src, const AnchorSpec& a, const CaseEvaluation& ev, const CaseFixture& fx,
                       AnchorEnv& env) {
  AnchorResult r;
  r.id = a.id;
  r.citation = a.citation;
  std::ostringstream detail;
  if (a.stage == "value" || a.stage == "piece_value") {
    const BoundaryExpression& got = a.stage == "value" ? ev.value : src.piece(*a.piece).value;
    const BoundaryExpression& want = a.stage == "value" ? fx.expected : a.expected;
    r.pass = same_value(got, want);
    if (!r.pass) r.detail = "computed " + render_terms(got) + "; published " + render_terms(want);
    return r;
  }
  std::mt19937_64 rng(0x5eedULL);
  const bool scalar_stage = a.stage == "trace" || a.stage == "parts" || a.stage == "piece_trace";
  auto anchor_at = [&](const SamplePoint& pt) {
    env.pt = pt;
    return a.expr->evaluate(env);
  };
  if (scalar_stage) {
    ScalarIntegrand s = src.scalar_stage(a.stage, a);
    auto engine = [&](const SamplePoint& pt) { return evaluate(s, pt); };
    auto anchor = [&](const SamplePoint& pt) {
      AnchorValue v = anchor_at(pt);
      if (v.matrix) throw ExpressionError("trace anchor evaluates to a matrix: " + a.id);
      return v.s;
    };
    const int samples = a.mode == AnchorMode::Sphere ? kSphereSamples : kPointSamples;
    for (int k = 0; k < samples; ++k) {
      SamplePoint pt = random_point(rng);
      cd e, p;
      if (a.mode == AnchorMode::Sphere) {
        e = sphere_integral(pt, engine);
        p = sphere_integral(pt, anchor);
      } else {
        e = engine(pt);
        p = anchor(pt);
      }
      double err = rel_error(e, p);
      if (err > r.max_error) {
        r.max_error = err;
        detail.str("");
        detail << "at xi_n = " << pt.xi_n.real() << ": computed " << e << ", published " << p;
      }
    }
  } else {
    CompiledSum m(src.matrix_stage(a.stage, a));
    const int dim = 1 << kDim;
    if (a.mode == AnchorMode::Paired) {
      CompiledSum partner(src.matrix_stage(a.partner, a));
      const bool left = is_first_side(a.stage);
      auto pairing = [&](const NumericMatrix& x, const SamplePoint& pt) {
        NumericMatrix q = partner(pt);
        return left ? (x * q).trace() : (q * x).trace();
      };
      for (int k = 0; k < kSphereSamples; ++k) {
        SamplePoint pt = random_point(rng);
        cd e = sphere_integral(pt, [&](const SamplePoint& p) { return pairing(m(p), p); });
        cd p = sphere_integral(pt, [&](const SamplePoint& q) { return pairing(anchor_at(q).as_matrix(dim), q); });
        double err = rel_error(e, p);
        if (err > r.max_error) {
          r.max_error = err;
          detail.str("");
          detail << "paired with " << a.partner << " at xi_n = " << pt.xi_n.real() << ": computed " << e
                 << ", published " << p;
        }
      }
    } else {
      const int samples = a.mode == AnchorMode::Sphere ? kSphereSamples : kPointSamples;
      for (int k = 0; k < samples; ++k) {
        SamplePoint pt = random_point(rng);
        NumericMatrix e, p;
        if (a.mode == AnchorMode::Sphere) {
          e = sphere_integral(pt, [&](const SamplePoint& q) { return NumericMatrix(m(q)); });
          p = sphere_integral(pt, [&](const SamplePoint& q) { return anchor_at(q).as_matrix(dim); });
        } else {
          e = m(pt);
          p = anchor_at(pt).as_matrix(dim);
        }
        double err = rel_error(e, p);
        if (err > r.max_error) {
          r.max_error = err;
          detail.str("");
          detail << "at xi_n = " << pt.xi_n.real() << ": |computed - published| / scale = " << err;
        }
      }
    }
  }
  r.pass = r.max_error <= kAnchorTolerance;
  if (!r.pass) r.detail = detail.str();
  return r;
}

}  // namespace

std::vector<AnchorResult> check_anchors(BoundaryPipeline& pipe, const CaseEvaluation& ev, OperatorPair pair,
                                        const CaseFixture& fixture) {
  StageSource src(pipe, ev, pair);
  AnchorEnv env = make_anchor_env(pipe.tables().context().A);
  std::vector<AnchorResult> out;
  for (const auto& a : fixture.anchors) out.push_back(check_one(src, a, ev, fixture, env));
  return out;
}

NumericCheck numeric_check(const NumericOracle& oracle, const CaseEvaluation& ev, OperatorPair pair,
                           const std::optional<BoundaryExpression>& fixture, double tolerance) {
  NumericCheck nc;
  for (const auto& [e, v] : oracle.evaluate_basis(ev.bcase, pair)) {
    cd engine = substitute_omega(ev.value.coefficient(e)).to_complex();
    nc.engine_error = std::max(nc.engine_error, std::abs(v - engine) / std::max(1.0, std::abs(engine)));
    if (fixture) {
      cd f = substitute_omega(fixture->coefficient(e)).to_complex();
      nc.fixture_error = std::max(nc.fixture_error, std::abs(v - f) / std::max(1.0, std::abs(f)));
    }
  }
  nc.engine_confirmed = nc.engine_error <= tolerance;
  nc.fixture_confirmed = fixture && nc.fixture_error <= tolerance;
  return nc;
}

RunReport build_report(BoundaryPipeline& pipe, OperatorPair pair, const std::vector<std::string>& labels,
                       const FixtureFile* fixtures, const NumericOracle* oracle, const ReportOptions& options) {
  RunReport rep;
  rep.pair = pair_name(pair);
  rep.fixtures_version = fixtures ? fixtures->version : 0;
  const PairFixture* pf = fixtures ? fixtures->pair(pair) : nullptr;

  std::vector<BoundaryCase> selected;
  for (const auto& c : enumerate_cases(pair))
    if (labels.empty() || std::find(labels.begin(), labels.end(), c.label) != labels.end()) selected.push_back(c);
  for (const auto& l : labels) {
    bool known = false;
    for (const auto& c : enumerate_cases(pair)) known |= c.label == l;
    if (!known) throw std::invalid_argument("unknown case label " + l);
  }

  BoundaryExpression total;
  for (const auto& c : selected) {
    CaseEvaluation ev = pipe.evaluate(c, pair);
    CaseReport cr;
    cr.label = c.label;
    cr.computed = ev.value;
    total += ev.value;
    const CaseFixture* fx = pf ? pf->find(c.label) : nullptr;
    if (fx) {
      cr.fixture = fx->expected;
      cr.match = same_value(ev.value, fx->expected);
      if (!cr.match) {
        cr.anchors = check_anchors(pipe, ev, pair, *fx);
        for (const auto& a : cr.anchors)
          if (!a.pass) {
            cr.first_divergence = a.id;
            break;
          }
        if (!cr.first_divergence) cr.first_divergence = pair_name(pair) + "." + c.label + ".value";
      }
    } else {
      cr.match = false;
      cr.first_divergence = pair_name(pair) + "." + c.label + ".fixture-missing";
    }
    if (oracle && (options.numeric_check || (!cr.match && options.adjudicate)))
      cr.numeric = numeric_check(*oracle, ev, pair, cr.fixture, options.tolerance);
    rep.cases.push_back(std::move(cr));
  }

  rep.total.computed = total;
  if (pf && pf->total && selected.size() == enumerate_cases(pair).size()) {
    rep.total.fixture = pf->total->expected;
    rep.total.match = same_value(total, pf->total->expected);
    if (!rep.total.match) {
      for (const auto& c : rep.cases)
        if (!c.match) {
          rep.total.first_divergence = c.label;
          break;
        }
      if (!rep.total.first_divergence) rep.total.first_divergence = pair_name(pair) + ".total";
    }
  } else {
    rep.total.match = rep.all_match();
  }
  return rep;
}

}  // namespace wres
