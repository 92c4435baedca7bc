#pragma once

#include <Eigen/Core>

#include "wres/scalar/gaussian_rational.hpp"

namespace Eigen {

template <>
struct NumTraits<wres::GaussianRational> : GenericNumTraits<wres::GaussianRational> {
  using Real = wres::GaussianRational;
  using NonInteger = wres::GaussianRational;
  using Nested = wres::GaussianRational;
  using Literal = wres::GaussianRational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 40,
    MulCost = 120
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  static inline Real highest() { return 0; }
  static inline Real lowest() { return 0; }
};

}  // namespace Eigen
