#pragma once

#include <stdexcept>
#include <vector>

#include "wres/scalar/exact_scalar.hpp"
#include "wres/scalar/xi_rational.hpp"
#include "wres/symbol/restricted.hpp"

namespace wres {

class DecayError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct PartialFractionForm {
  std::vector<GaussianRational> plus;   // plus[m-1] multiplies (x - i)^{-m}
  std::vector<GaussianRational> minus;  // minus[m-1] multiplies (x + i)^{-m}
  Polynomial polynomial;

  XiNRational plus_part() const;
  XiNRational minus_part() const;
  XiNRational reconstruct() const { return plus_part() + minus_part() + XiNRational(polynomial); }
};

// Laurent expansion at each pole
PartialFractionForm partial_fractions(const XiNRational& f);

// Cauchy projection onto the part with poles at +i; polynomial parts are dropped
XiNRational pi_plus(const XiNRational& f);
// complement: poles at -i plus the polynomial part
XiNRational pi_minus(const XiNRational& f);
RestrictedSum pi_plus(const RestrictedSum& s);

// residue at +i by differentiating (x - i)^m f
GaussianRational residue_at_i(const XiNRational& f);
// residue at +i read from the Laurent expansion
GaussianRational residue_at_i_laurent(const XiNRational& f);

// integral over the real line, closed in the upper half-plane
ExactScalar line_integral(const XiNRational& f);

}  // namespace wres
