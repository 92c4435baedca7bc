#include "wres/pipeline/fixtures.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json_terms.hpp"

#ifndef WRES_DATA_DIR
#define WRES_DATA_DIR "data"
#endif

namespace wres {

using nlohmann::json;

json terms_to_json(const BoundaryExpression& e) {
  json out = json::array();
  for (const auto& [b, v] : e.coefficients())
    for (const auto& [grade, c] : v.terms())
      out.push_back({{"monomial", basis_label(b)},
                     {"pi_power", grade.first},
                     {"omega_power", grade.second},
                     {"re", rational_string(c.re())},
                     {"im", rational_string(c.im())}});
  return out;
}

BoundaryExpression terms_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("basis terms must be an array");
  BoundaryExpression e;
  for (const auto& t : j) {
    GaussianRational c(parse_rational(t.at("re").get<std::string>()), parse_rational(t.at("im").get<std::string>()));
    e.add(parse_basis_label(t.at("monomial").get<std::string>()),
          ExactScalar(c, t.at("pi_power").get<int>(), t.at("omega_power").get<int>()));
  }
  return e;
}

namespace {

std::string opt_string(const json& j, const char* key) { return j.contains(key) ? j.at(key).get<std::string>() : ""; }

AnchorMode parse_mode(const std::string& s) {
  if (s.empty() || s == "pointwise") return AnchorMode::Pointwise;
  if (s == "sphere") return AnchorMode::Sphere;
  if (s == "paired") return AnchorMode::Paired;
  throw std::invalid_argument("unknown anchor mode " + s);
}

const char* const kStages[] = {"derived",     "projected",       "first",       "parts_first", "second",
                               "second_base", "trace",           "parts",       "piece_projected",
                               "piece_trace", "piece_value",     "value"};

AnchorSpec parse_anchor(const json& j) {
  AnchorSpec a;
  a.id = j.at("id").get<std::string>();
  a.citation = j.at("citation").get<std::string>();
  a.quote = j.at("quote").get<std::string>();
  a.stage = j.at("stage").get<std::string>();
  if (std::find(std::begin(kStages), std::end(kStages), a.stage) == std::end(kStages))
    throw std::invalid_argument("unknown stage " + a.stage + " in " + a.id);
  a.mode = parse_mode(opt_string(j, "mode"));
  a.partner = opt_string(j, "partner");
  a.note = opt_string(j, "note");
  if (a.mode == AnchorMode::Paired && a.partner.empty()) throw std::invalid_argument("paired anchor without partner: " + a.id);
  if (j.contains("expr")) a.expr = AnchorExpression::parse(j.at("expr").get<std::string>());
  if (j.contains("piece")) {
    const json& p = j.at("piece");
    PieceSelector s;
    s.a = p.at("a").get<int>();
    s.b = p.at("b").get<int>();
    const json& al = p.at("alpha");
    if (al.is_string()) {
      if (al.get<std::string>() != "any") throw std::invalid_argument("alpha must be an integer or \"any\"");
      s.alpha = kAnyAlpha;
    } else {
      s.alpha = al.get<int>();
    }
    a.piece = s;
  }
  if (j.contains("expected")) a.expected = terms_from_json(j.at("expected"));
  const bool needs_expr = a.stage != "value" && a.stage != "piece_value";
  if (needs_expr && !a.expr) throw std::invalid_argument("anchor without expression: " + a.id);
  if (a.stage.rfind("piece_", 0) == 0 && !a.piece) throw std::invalid_argument("piece anchor without selector: " + a.id);
  return a;
}

}  // namespace

const CaseFixture* PairFixture::find(const std::string& label) const {
  for (const auto& c : cases)
    if (c.label == label) return &c;
  return nullptr;
}

const PairFixture* FixtureFile::pair(OperatorPair p) const {
  auto it = pairs.find(p);
  return it == pairs.end() ? nullptr : &it->second;
}

FixtureFile FixtureFile::parse(const std::string& text) {
  try {
    json j = json::parse(text);
    FixtureFile f;
    f.version = j.at("version").get<int>();
    for (const auto& [name, pj] : j.at("pairs").items()) {
      PairFixture pf;
      for (const auto& cj : pj.at("cases")) {
        CaseFixture c;
        c.label = cj.at("label").get<std::string>();
        c.citation = cj.at("citation").get<std::string>();
        c.quote = cj.at("quote").get<std::string>();
        c.expected = terms_from_json(cj.at("expected"));
        c.note = opt_string(cj, "note");
        if (cj.contains("anchors"))
          for (const auto& aj : cj.at("anchors")) c.anchors.push_back(parse_anchor(aj));
        pf.cases.push_back(std::move(c));
      }
      if (pj.contains("total")) {
        const json& tj = pj.at("total");
        pf.total = TotalFixture{tj.at("citation").get<std::string>(), tj.at("quote").get<std::string>(),
                                terms_from_json(tj.at("expected"))};
      }
      f.pairs[parse_pair(name)] = std::move(pf);
    }
    return f;
  } catch (const FixtureError&) {
    throw;
  } catch (const std::exception& e) {
    throw FixtureError(std::string("malformed fixture file: ") + e.what());
  }
}

FixtureFile FixtureFile::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FixtureError("cannot open fixture file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::string default_fixture_path() { return std::string(WRES_DATA_DIR) + "/fixtures.json"; }

bool same_value(const BoundaryExpression& a, const BoundaryExpression& b) {
  BoundaryExpression d = a - b;
  for (const auto& [e, v] : d.coefficients())
    if (!substitute_omega(v).is_zero()) return false;
  return true;
}

}  // namespace wres
