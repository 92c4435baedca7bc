#include <sstream>

#include "json_terms.hpp"
#include "wres/pipeline/report.hpp"

namespace wres {

using nlohmann::json;

std::string render_terms(const BoundaryExpression& e) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, v] : e.coefficients())
    for (const auto& [grade, c] : v.terms()) {
      if (!first) os << " + ";
      first = false;
      os << c.to_string() << " · " << basis_label(b);
      if (grade.first == 1) os << "·π";
      if (grade.first > 1 || grade.first < 0) os << "·π^" << grade.first;
      if (grade.second == 1) os << "·Ω3";
      if (grade.second > 1 || grade.second < 0) os << "·Ω3^" << grade.second;
    }
  return os.str();
}

std::string emit_text(const RunReport& r) {
  std::ostringstream os;
  os << "pair " << r.pair << " (fixtures v" << r.fixtures_version << ")\n";
  for (const auto& c : r.cases) {
    os << "case " << c.label << ": " << render_terms(c.computed) << "\n";
    if (c.fixture) os << "  fixture: " << render_terms(*c.fixture) << "\n";
    os << "  match: " << (c.match ? "yes" : "no");
    if (c.first_divergence) os << ", first divergence " << *c.first_divergence;
    os << "\n";
    for (const auto& a : c.anchors) {
      os << "  anchor " << a.id << " [" << a.citation << "]: " << (a.pass ? "agrees" : "differs");
      if (!a.pass && !a.detail.empty()) os << " (" << a.detail << ")";
      os << "\n";
    }
    if (c.numeric) {
      os << "  oracle: engine deviation " << c.numeric->engine_error
         << (c.numeric->engine_confirmed ? " (confirmed)" : " (NOT confirmed)");
      if (c.fixture)
        os << ", fixture deviation " << c.numeric->fixture_error
           << (c.numeric->fixture_confirmed ? " (confirmed)" : " (rejected)");
      os << "\n";
    }
  }
  os << "total: " << render_terms(r.total.computed) << "\n";
  if (r.total.fixture) os << "  fixture: " << render_terms(*r.total.fixture) << "\n";
  os << "  match: " << (r.total.match ? "yes" : "no");
  if (r.total.first_divergence) os << ", first divergent case " << *r.total.first_divergence;
  os << "\n";
  return os.str();
}

namespace {

json optional_terms(const std::optional<BoundaryExpression>& e) { return e ? terms_to_json(*e) : json(nullptr); }
json optional_string(const std::optional<std::string>& s) { return s ? json(*s) : json(nullptr); }

std::optional<BoundaryExpression> read_terms(const json& j) {
  if (j.is_null()) return std::nullopt;
  return terms_from_json(j);
}
std::optional<std::string> read_string(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<std::string>();
}

}  // namespace

std::string emit_json(const RunReport& r) {
  json cases = json::array();
  for (const auto& c : r.cases) {
    json anchors = json::array();
    for (const auto& a : c.anchors)
      anchors.push_back(
          {{"id", a.id}, {"citation", a.citation}, {"pass", a.pass}, {"max_error", a.max_error}, {"detail", a.detail}});
    json numeric = nullptr;
    if (c.numeric)
      numeric = {{"engine_error", c.numeric->engine_error},
                 {"fixture_error", c.numeric->fixture_error},
                 {"engine_confirmed", c.numeric->engine_confirmed},
                 {"fixture_confirmed", c.numeric->fixture_confirmed}};
    cases.push_back({{"label", c.label},
                     {"basis_terms", terms_to_json(c.computed)},
                     {"fixture", optional_terms(c.fixture)},
                     {"match", c.match},
                     {"first_divergence", optional_string(c.first_divergence)},
                     {"anchors", anchors},
                     {"numeric", numeric}});
  }
  json total = {{"basis_terms", terms_to_json(r.total.computed)},
                {"fixture", optional_terms(r.total.fixture)},
                {"match", r.total.match},
                {"first_divergence", optional_string(r.total.first_divergence)}};
  json out = {{"pair", r.pair}, {"cases", cases}, {"total", total}, {"fixtures_version", r.fixtures_version}};
  return out.dump(2) + "\n";
}

RunReport parse_json_report(const std::string& text) {
  try {
    json j = json::parse(text);
    RunReport r;
    r.pair = j.at("pair").get<std::string>();
    r.fixtures_version = j.at("fixtures_version").get<int>();
    for (const auto& cj : j.at("cases")) {
      CaseReport c;
      c.label = cj.at("label").get<std::string>();
      c.computed = terms_from_json(cj.at("basis_terms"));
      c.fixture = read_terms(cj.at("fixture"));
      c.match = cj.at("match").get<bool>();
      c.first_divergence = read_string(cj.at("first_divergence"));
      for (const auto& aj : cj.at("anchors"))
        c.anchors.push_back({aj.at("id").get<std::string>(), aj.at("citation").get<std::string>(),
                             aj.at("pass").get<bool>(), aj.at("max_error").get<double>(),
                             aj.at("detail").get<std::string>()});
      const json& nj = cj.at("numeric");
      if (!nj.is_null())
        c.numeric = NumericCheck{nj.at("engine_error").get<double>(), nj.at("fixture_error").get<double>(),
                                 nj.at("engine_confirmed").get<bool>(), nj.at("fixture_confirmed").get<bool>()};
      r.cases.push_back(std::move(c));
    }
    const json& tj = j.at("total");
    r.total.computed = terms_from_json(tj.at("basis_terms"));
    r.total.fixture = read_terms(tj.at("fixture"));
    r.total.match = tj.at("match").get<bool>();
    r.total.first_divergence = read_string(tj.at("first_divergence"));
    return r;
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void csv_rows(std::ostream& os, const std::string& section, const std::string& label, const BoundaryExpression& e,
              bool match, const std::optional<std::string>& divergence) {
  for (const auto& [b, v] : e.coefficients())
    for (const auto& [grade, c] : v.terms())
      os << section << "," << csv_field(label) << "," << csv_field(basis_label(b)) << "," << grade.first << ","
         << grade.second << "," << rational_string(c.re()) << "," << rational_string(c.im()) << ","
         << (match ? "true" : "false") << "," << csv_field(divergence.value_or("")) << "\n";
}

}  // namespace

std::string emit_csv(const RunReport& r) {
  std::ostringstream os;
  os << "pair,section,label,monomial,pi_power,omega_power,re,im,match,first_divergence\n";
  std::ostringstream body;
  for (const auto& c : r.cases) csv_rows(body, "case", c.label, c.computed, c.match, c.first_divergence);
  csv_rows(body, "total", "total", r.total.computed, r.total.match, r.total.first_divergence);
  std::istringstream lines(body.str());
  for (std::string line; std::getline(lines, line);) os << r.pair << "," << line << "\n";
  return os.str();
}

BoundaryExpression substitute_omega(const BoundaryExpression& e) {
  BoundaryExpression out;
  for (const auto& [b, v] : e.coefficients()) out.add(b, substitute_omega(v));
  return out;
}

RunReport substitute_omega(RunReport r) {
  for (auto& c : r.cases) {
    c.computed = substitute_omega(c.computed);
    if (c.fixture) c.fixture = substitute_omega(*c.fixture);
  }
  r.total.computed = substitute_omega(r.total.computed);
  if (r.total.fixture) r.total.fixture = substitute_omega(*r.total.fixture);
  return r;
}

}  // namespace wres
