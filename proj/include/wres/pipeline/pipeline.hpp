#pragma once

#include <memory>
#include <vector>

#include "wres/pipeline/cases.hpp"
#include "wres/residue/halfplane.hpp"
#include "wres/sphere/sphere.hpp"

namespace wres {

// Factors of one tangential direction of a case (a single entry unless |alpha| = 1).
struct CaseFactors {
  int direction = -1;           // xi'/x' direction of the alpha derivative, -1 without one
  RestrictedSum derived;        // d_{x_n}^j d_{xi'}^alpha sigma_r, before projection
  RestrictedSum projected;      // pi+ of the above
  RestrictedSum first;          // d_{xi_n}^k of the projection
  RestrictedSum second;         // d_{x'}^alpha d_{xi_n}^{j+1} d_{x_n}^k sigma_l
  RestrictedSum second_base;    // the same with one xi_n-derivative fewer
};

struct CaseEvaluation {
  BoundaryCase bcase;
  std::vector<CaseFactors> factors;
  ScalarIntegrand trace;        // tr[first * second], summed over directions
  SphereIntegrand xi_integrated;
  BoundaryExpression value;     // prefactor included
};

struct PipelineOptions {
  bool x_zero = false;  // X = 0 or Y = 0 makes every case vanish
  bool y_zero = false;
  bool parallel = false;
};

class BoundaryPipeline {
 public:
  explicit BoundaryPipeline(const SubbundleData& data, PipelineOptions options = {});

  SymbolTables& tables() { return *tables_; }
  const PipelineOptions& options() const { return options_; }

  CaseEvaluation evaluate(const BoundaryCase& c, OperatorPair pair);
  // same chain with the first factor's order-r component replaced by `first`
  CaseEvaluation evaluate_with(const BoundaryCase& c, OperatorPair pair, const SymbolSum& first);
  // summands of sigma_r(first operator) from the composition formula
  std::vector<CompositionTerm> first_pieces(const BoundaryCase& c, OperatorPair pair);
  // sum over all cases of the pair
  BoundaryExpression total(OperatorPair pair, std::vector<CaseEvaluation>* cases = nullptr);

 private:
  std::unique_ptr<SymbolTables> tables_;
  PipelineOptions options_;
};

BoundaryExpression evaluate_case(const BoundaryCase& c, OperatorPair pair, const SubbundleData& data);
BoundaryExpression assemble_total(OperatorPair pair, const SubbundleData& data);

}  // namespace wres
