#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wres/pipeline/anchor_expr.hpp"
#include "wres/pipeline/cases.hpp"
#include "wres/sphere/sphere.hpp"

namespace wres {

class FixtureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// composition summand sigma_a(left) * sigma_b(right), alpha = -1 for none, kAnyAlpha for all d_xi_j D_x_j terms
inline constexpr int kAnyAlpha = -2;
struct PieceSelector {
  int a = 0;
  int b = 0;
  int alpha = -1;
};

enum class AnchorMode { Pointwise, Sphere, Paired };

// One published intermediate of a case, to be compared with the engine's value of `stage`.
//   derived, projected, first, parts_first      first factor (parts_first = d_xi_n of first)
//   second, second_base                          second factor (second_base has one xi_n-derivative fewer)
//   trace, parts                                 tr[first * second], tr[parts_first * second_base]
//   piece_projected, piece_trace, piece_value    the same restricted to one composition summand
//   value                                        the case value itself
struct AnchorSpec {
  std::string id;
  std::string citation;
  std::string quote;
  std::string stage;
  AnchorMode mode = AnchorMode::Pointwise;
  std::string partner;  // paired mode: stage multiplied on the other side before tracing
  std::optional<AnchorExpression> expr;
  std::optional<PieceSelector> piece;
  BoundaryExpression expected;  // piece_value
  std::string note;
};

struct CaseFixture {
  std::string label;
  std::string citation;
  std::string quote;
  BoundaryExpression expected;
  std::vector<AnchorSpec> anchors;
  std::string note;
};

struct TotalFixture {
  std::string citation;
  std::string quote;
  BoundaryExpression expected;
};

struct PairFixture {
  std::vector<CaseFixture> cases;
  std::optional<TotalFixture> total;

  const CaseFixture* find(const std::string& label) const;
};

struct FixtureFile {
  int version = 0;
  std::map<OperatorPair, PairFixture> pairs;

  const PairFixture* pair(OperatorPair p) const;
  static FixtureFile parse(const std::string& text);   // throws FixtureError
  static FixtureFile load(const std::string& path);    // throws FixtureError
};

std::string default_fixture_path();

// exact comparison after Omega3 -> 4 pi
bool same_value(const BoundaryExpression& a, const BoundaryExpression& b);

}  // namespace wres
