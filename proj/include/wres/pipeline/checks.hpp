#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "wres/clifford/subbundle.hpp"
#include "wres/pipeline/pipeline.hpp"

namespace wres {

struct IndependenceReport {
  std::vector<std::uint64_t> seeds;
  std::vector<std::vector<BoundaryExpression>> cases;  // per seed, in case order
  std::vector<BoundaryExpression> totals;
  bool identical = false;
};

// Recompute every case of the pair for each SubbundleData::random(4, seed).
IndependenceReport a_independence_check(OperatorPair pair, const std::vector<std::uint64_t>& seeds,
                                        bool parallel = false);

class CurvatureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Algebraic curvature tensor R_{ijkl} in an orthonormal frame.
struct CurvatureTensor {
  int n = 4;
  std::vector<Rational> r;  // n^4 entries

  const Rational& operator()(int i, int j, int k, int l) const { return r[((i * n + j) * n + k) * n + l]; }
  Rational& operator()(int i, int j, int k, int l) { return r[((i * n + j) * n + k) * n + l]; }

  Rational scalar_curvature() const;  // s = sum_{i,j} R_{ijji}
  void validate() const;              // throws CurvatureError

  static CurvatureTensor zero(int n);
  // random integer array projected onto the curvature symmetries
  static CurvatureTensor random(int n, std::uint64_t seed);
};

struct InteriorTraceReport {
  GaussianRational curvature_trace;  // tr of (1/8) sum R_ijkl chat_i chat_j c_k c_l
  GaussianRational scalar_trace;     // tr of -(1/4)s
  GaussianRational a_trace;          // tr of the A-dependent terms
  GaussianRational total;            // tr(E)
  Rational s;
};

// nabla_A[j] is the covariant derivative of A along e_j; empty means zero.
InteriorTraceReport interior_trE_check(const CurvatureTensor& R, const SubbundleData& data,
                                       const std::vector<ExactMatrix>& nabla_A = {});

// derivative of A along each frame vector built from random S-derivatives
std::vector<ExactMatrix> random_nabla_A(const CliffordGenerators<GaussianRational>& g, const SubbundleData& data,
                                        std::uint64_t seed);

}  // namespace wres
