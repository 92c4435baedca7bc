#include <iostream>

#include <CLI11.hpp>

#include "wres/numeric/oracle.hpp"
#include "wres/pipeline/report.hpp"

using namespace wres;

int main(int argc, char** argv) {
  CLI::App app{"Boundary coefficients of the sub-signature residue"};
  std::string pair_text = "d2d2";
  std::vector<std::string> cases;
  std::string emit = "text";
  bool numeric = false, subst = false;
  double tolerance = 1e-6;
  std::uint64_t seed = 0;
  std::string fixtures = default_fixture_path();
  app.add_option("--pair", pair_text, "operator pair")->check(CLI::IsMember({"d2d2", "d1d3"}));
  app.add_option("--case", cases, "case label or all (repeatable)");
  app.add_option("--emit", emit, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_flag("--numeric-check", numeric, "confirm every case with the floating-point oracle");
  app.add_option("--tolerance", tolerance, "oracle tolerance, relative")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "subbundle seed (0 gives S = 0)");
  app.add_flag("--subst-omega", subst, "print Omega3 as 4 pi");
  app.add_option("--fixtures", fixtures, "fixture file");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    OperatorPair pair = parse_pair(pair_text);
    std::vector<std::string> labels;
    for (const auto& c : cases)
      if (c == "all") {
        labels.clear();
        break;
      } else {
        labels.push_back(c);
      }
    FixtureFile fx = FixtureFile::load(fixtures);
    SubbundleData data = SubbundleData::random(4, seed);
    BoundaryPipeline pipe(data, {.parallel = true});
    NumericOracle oracle(data);
    ReportOptions opt;
    opt.numeric_check = numeric;
    opt.tolerance = tolerance;
    RunReport rep = build_report(pipe, pair, labels, &fx, &oracle, opt);
    const bool ok = rep.all_match();
    if (subst) rep = substitute_omega(rep);
    if (emit == "json")
      std::cout << emit_json(rep);
    else if (emit == "csv")
      std::cout << emit_csv(rep);
    else
      std::cout << emit_text(rep);
    return ok ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
