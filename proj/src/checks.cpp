#include "wres/pipeline/checks.hpp"

#include <random>

namespace wres {

IndependenceReport a_independence_check(OperatorPair pair, const std::vector<std::uint64_t>& seeds, bool parallel) {
  IndependenceReport rep;
  rep.seeds = seeds;
  PipelineOptions opt;
  opt.parallel = parallel;
  for (auto seed : seeds) {
    BoundaryPipeline pipe(SubbundleData::random(4, seed), opt);
    std::vector<CaseEvaluation> evs;
    rep.totals.push_back(pipe.total(pair, &evs));
    std::vector<BoundaryExpression> vals;
    for (const auto& ev : evs) vals.push_back(ev.value);
    rep.cases.push_back(std::move(vals));
  }
  rep.identical = true;
  for (std::size_t s = 1; s < seeds.size(); ++s)
    if (rep.totals[s] != rep.totals[0] || rep.cases[s] != rep.cases[0]) rep.identical = false;
  return rep;
}

Rational CurvatureTensor::scalar_curvature() const {
  Rational s = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s += (*this)(i, j, j, i);
  return s;
}

void CurvatureTensor::validate() const {
  if (int(r.size()) != n * n * n * n) throw CurvatureError("curvature tensor has the wrong size");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const Rational& v = (*this)(i, j, k, l);
          if (v != -(*this)(j, i, k, l) || v != -(*this)(i, j, l, k))
            throw CurvatureError("curvature tensor is not antisymmetric in each pair");
          if (v != (*this)(k, l, i, j)) throw CurvatureError("curvature tensor lacks pair symmetry");
          if (v + (*this)(j, k, i, l) + (*this)(k, i, j, l) != 0)
            throw CurvatureError("curvature tensor violates the first Bianchi identity");
        }
}

CurvatureTensor CurvatureTensor::zero(int n) {
  CurvatureTensor t;
  t.n = n;
  t.r.assign(n * n * n * n, Rational(0));
  return t;
}

CurvatureTensor CurvatureTensor::random(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-5, 5);
  CurvatureTensor a = zero(n);
  for (auto& v : a.r) v = num(rng);
  // antisymmetrize each pair, then symmetrize the pairs
  CurvatureTensor b = zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          auto anti = [&](int p, int q, int u, int w) -> Rational { return a(p, q, u, w) - a(q, p, u, w) - a(p, q, w, u) + a(q, p, w, u); };
          b(i, j, k, l) = anti(i, j, k, l) + anti(k, l, i, j);
        }
  // remove the totally antisymmetric part (Bianchi projection)
  CurvatureTensor c = zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Rational v = b(i, j, k, l) - (b(i, j, k, l) + b(j, k, i, l) + b(k, i, j, l)) / 3;
          v.canonicalize();
          c(i, j, k, l) = v;
        }
  c.validate();
  return c;
}

std::vector<ExactMatrix> random_nabla_A(const CliffordGenerators<GaussianRational>& g, const SubbundleData& data,
                                        std::uint64_t seed) {
  std::vector<ExactMatrix> out;
  for (int j = 0; j < g.n; ++j) {
    // same frame, fresh S values: the derivative of S along e_j
    SubbundleData d = SubbundleData::random(g.n, seed * 31 + j + 1);
    d.f_basis = data.f_basis;
    d.s_values.assign(g.n, std::vector<std::vector<Rational>>(data.rank(), std::vector<Rational>(g.n, Rational(0))));
    std::mt19937_64 rng(seed * 131 + j);
    std::uniform_int_distribution<int> num(-4, 4);
    for (int i = 0; i < g.n; ++i)
      for (int alpha = 0; alpha < data.rank(); ++alpha)
        for (int m = 0; m < g.n; ++m)
          if (std::find(data.f_basis.begin(), data.f_basis.end(), m) == data.f_basis.end())
            d.s_values[i][alpha][m] = num(rng);
    out.push_back(build_A(g, d));
  }
  return out;
}

InteriorTraceReport interior_trE_check(const CurvatureTensor& R, const SubbundleData& data,
                                       const std::vector<ExactMatrix>& nabla_A) {
  R.validate();
  auto g = build_generators<GaussianRational>(R.n);
  if (!nabla_A.empty() && int(nabla_A.size()) != R.n) throw std::invalid_argument("one derivative of A per frame vector");
  InteriorTraceReport rep;
  rep.s = R.scalar_curvature();

  ExactMatrix curv = g.zero();
  for (int i = 0; i < R.n; ++i)
    for (int j = 0; j < R.n; ++j) {
      if (i == j) continue;
      ExactMatrix hh = multiply(g.c_hat[i], g.c_hat[j]);
      for (int k = 0; k < R.n; ++k)
        for (int l = 0; l < R.n; ++l) {
          if (k == l || sgn(R(i, j, k, l)) == 0) continue;
          curv += multiply(hh, multiply(g.c[k], g.c[l])) * GaussianRational(R(i, j, k, l));
        }
    }
  rep.curvature_trace = trace(curv) * GaussianRational(Rational(1, 8));
  rep.scalar_trace = GaussianRational(-rep.s / 4 * g.dim());

  ExactMatrix A = build_A(g, data);
  ExactMatrix aterms = -multiply(A, A);
  for (int j = 0; j < R.n; ++j) {
    ExactMatrix t = multiply(g.c[j], A) + multiply(A, g.c[j]);
    aterms -= multiply(t, t) * GaussianRational(Rational(1, 4));
    if (!nabla_A.empty())
      aterms += (multiply(nabla_A[j], g.c[j]) - multiply(g.c[j], nabla_A[j])) * GaussianRational(Rational(1, 2));
  }
  rep.a_trace = trace(aterms);
  rep.total = rep.curvature_trace + rep.scalar_trace + rep.a_trace;
  return rep;
}

}  // namespace wres
