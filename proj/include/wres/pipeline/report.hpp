#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wres/pipeline/fixtures.hpp"
#include "wres/pipeline/pipeline.hpp"

namespace wres {

class NumericOracle;

struct AnchorResult {
  std::string id;
  std::string citation;
  bool pass = false;
  double max_error = 0;  // relative; 0 for exact stages
  std::string detail;

  friend bool operator==(const AnchorResult&, const AnchorResult&) = default;
};

// floating-point oracle against the exact value and the fixture, per basis element
struct NumericCheck {
  double engine_error = 0;   // max relative deviation oracle vs engine
  double fixture_error = 0;  // same against the fixture (0 when no fixture)
  bool engine_confirmed = false;
  bool fixture_confirmed = false;

  friend bool operator==(const NumericCheck&, const NumericCheck&) = default;
};

struct CaseReport {
  std::string label;
  BoundaryExpression computed;
  std::optional<BoundaryExpression> fixture;
  bool match = false;
  std::optional<std::string> first_divergence;
  std::vector<AnchorResult> anchors;
  std::optional<NumericCheck> numeric;

  friend bool operator==(const CaseReport&, const CaseReport&) = default;
};

struct TotalReport {
  BoundaryExpression computed;
  std::optional<BoundaryExpression> fixture;
  bool match = false;
  std::optional<std::string> first_divergence;  // label of the first mismatching case

  friend bool operator==(const TotalReport&, const TotalReport&) = default;
};

struct RunReport {
  std::string pair;
  std::vector<CaseReport> cases;
  TotalReport total;
  int fixtures_version = 0;

  bool all_match() const;
  friend bool operator==(const RunReport&, const RunReport&) = default;
};

// Compare every anchored intermediate of a case with the engine, in fixture order.
std::vector<AnchorResult> check_anchors(BoundaryPipeline& pipe, const CaseEvaluation& ev, OperatorPair pair,
                                        const CaseFixture& fixture);

// Oracle vs engine and fixture; tolerance is relative to max(|value|, 1).
NumericCheck numeric_check(const NumericOracle& oracle, const CaseEvaluation& ev, OperatorPair pair,
                           const std::optional<BoundaryExpression>& fixture, double tolerance);

struct ReportOptions {
  bool numeric_check = false;  // run the oracle on every case
  bool adjudicate = true;      // run the oracle on mismatching cases
  double tolerance = 1e-6;
};

// Evaluate the selected cases (all when empty), localize mismatches and assemble the total.
RunReport build_report(BoundaryPipeline& pipe, OperatorPair pair, const std::vector<std::string>& labels,
                       const FixtureFile* fixtures, const NumericOracle* oracle, const ReportOptions& options);

// text rendering of one coefficient and basis element, e.g. "-(542+71i)/16 · XnYn·h'(0)·π·Ω3"
std::string render_terms(const BoundaryExpression& e);

std::string emit_text(const RunReport& r);
std::string emit_json(const RunReport& r);
std::string emit_csv(const RunReport& r);
RunReport parse_json_report(const std::string& text);  // throws std::invalid_argument

// Omega3 -> 4 pi in every computed and fixture value
BoundaryExpression substitute_omega(const BoundaryExpression& e);
RunReport substitute_omega(RunReport r);

}  // namespace wres
