#include "wres/pipeline/pipeline.hpp"

#include <future>

namespace wres {

BoundaryPipeline::BoundaryPipeline(const SubbundleData& data, PipelineOptions options)
    : tables_(std::make_unique<SymbolTables>(data)), options_(options) {}

namespace {

SymbolSum repeat(SymbolSum s, int times, SymbolSum (*op)(const SymbolSum&)) {
  for (int t = 0; t < times; ++t) s = op(s);
  return s;
}

}  // namespace

CaseEvaluation BoundaryPipeline::evaluate(const BoundaryCase& c, OperatorPair pair) {
  if (options_.x_zero || options_.y_zero) {
    CaseEvaluation ev;
    ev.bcase = c;
    return ev;
  }
  return evaluate_with(c, pair, tables_->get(pair_spec(pair).first).component(c.r));
}

std::vector<CompositionTerm> BoundaryPipeline::first_pieces(const BoundaryCase& c, OperatorPair pair) {
  const PairSpec& spec = pair_spec(pair);
  return composition_terms(tables_->get(spec.first_left), tables_->get(spec.first_right), c.r);
}

CaseEvaluation BoundaryPipeline::evaluate_with(const BoundaryCase& c, OperatorPair pair, const SymbolSum& s1) {
  CaseEvaluation ev;
  ev.bcase = c;
  if (options_.x_zero || options_.y_zero) return ev;
  const SymbolSum& s2 = tables_->get(pair_spec(pair).second).component(c.l);

  std::vector<int> directions{-1};
  if (c.alpha == 1) directions = {0, 1, 2};
  for (int dir : directions) {
    CaseFactors f;
    f.direction = dir;
    SymbolSum second = dir >= 0 ? d_x(s2, dir) : s2;
    second = repeat(second, c.k, x_n_derivative);
    f.second_base = restrict_to_sphere(second);
    if (c.j > 0) f.second_base = d_xi_n(f.second_base, c.j);
    f.second = d_xi_n(f.second_base, 1);
    if (!f.second.is_zero()) {
      SymbolSum first = repeat(s1, c.j, x_n_derivative);
      if (dir >= 0) first = d_xi(first, dir);
      f.derived = restrict_to_sphere(first);
      f.projected = pi_plus(f.derived);
      f.first = c.k ? d_xi_n(f.projected, c.k) : f.projected;
      ScalarIntegrand t = trace_product(f.first, f.second);
      for (const auto& [key, r] : t.terms) ev.trace.add(key, r);
    }
    ev.factors.push_back(std::move(f));
  }
  for (const auto& [key, r] : ev.trace.terms) {
    ExactScalar v = line_integral(r);
    if (!v.is_zero()) ev.xi_integrated[key] += v;
  }
  ev.value = contract_sphere(ev.xi_integrated) * ExactScalar(c.prefactor);
  return ev;
}

BoundaryExpression BoundaryPipeline::total(OperatorPair pair, std::vector<CaseEvaluation>* cases) {
  std::vector<BoundaryCase> list = enumerate_cases(pair);
  std::vector<CaseEvaluation> evals;
  if (options_.parallel) {
    std::vector<std::future<CaseEvaluation>> futures;
    for (const auto& c : list) futures.push_back(std::async(std::launch::async, [this, c, pair] { return evaluate(c, pair); }));
    for (auto& f : futures) evals.push_back(f.get());
  } else {
    for (const auto& c : list) evals.push_back(evaluate(c, pair));
  }
  BoundaryExpression sum;
  for (const auto& e : evals) sum += e.value;
  if (cases) *cases = std::move(evals);
  return sum;
}

BoundaryExpression evaluate_case(const BoundaryCase& c, OperatorPair pair, const SubbundleData& data) {
  return BoundaryPipeline(data).evaluate(c, pair).value;
}

BoundaryExpression assemble_total(OperatorPair pair, const SubbundleData& data) {
  return BoundaryPipeline(data).total(pair);
}

}  // namespace wres
