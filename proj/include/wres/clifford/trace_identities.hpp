#pragma once

#include <string>
#include <vector>

#include "wres/clifford/connection.hpp"

namespace wres {

struct TraceIdentityResult {
  std::string name;
  GaussianRational computed;  // coefficient of the stated unit (1 or h'(0))
  GaussianRational expected;
  std::string unit;
  bool pass = false;
};

// Brute-force matrix evaluation of the trace identities used by the boundary cases.
std::vector<TraceIdentityResult> trace_identity_suite(const CliffordGenerators<GaussianRational>& g,
                                                      const BoundaryConnection& bc, const ExactMatrix& A);

}  // namespace wres
