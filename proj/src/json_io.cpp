#include "biharm/json_io.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace biharm {

namespace {

constexpr std::array<const char*, 4> kMultFields{"m1", "m2", "n1", "n2"};

// "line 3: " for the first occurrence of "key" in the source, if any.
std::string where(const std::string& text, const std::string& key) {
  const auto pos = text.find('"' + key + '"');
  if (pos == std::string::npos) return {};
  return "line " + std::to_string(1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(pos), '\n')) +
         ": ";
}

std::string line_col(const std::string& text, std::size_t byte) {
  byte = std::min(byte, text.size());
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

Json surds(const std::vector<QuadraticSurd>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(to_json(x));
  return a;
}

Json strings(const std::vector<QuadraticSurd>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(x.str());
  return a;
}

Json mults_array(const Multiplicities& m) { return Json::array({m.m1, m.m2, m.n1, m.n2}); }

}  // namespace

Json to_json(const QuadraticSurd& x) { return Json{{"p", x.p()}, {"q", x.q()}, {"d", x.d()}, {"r", x.r()}}; }

QuadraticSurd surd_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("surd: expected an object {p, q, d, r}");
  std::array<std::int64_t, 4> v{};
  const std::array<const char*, 4> keys{"p", "q", "d", "r"};
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (!j.contains(keys[i]) || !j[keys[i]].is_number_integer())
      throw InputError(std::string("surd: field '") + keys[i] + "' must be an integer");
    v[i] = j[keys[i]].get<std::int64_t>();
  }
  for (const auto& [k, _] : j.items())
    if (std::find_if(keys.begin(), keys.end(), [&](const char* s) { return k == s; }) == keys.end())
      throw InputError("surd: unknown field '" + k + "'");
  try {
    QuadraticSurd x(v[0], v[1], v[2], v[3]);
    if (x.p() != v[0] || x.q() != v[1] || x.d() != v[2] || x.r() != v[3])
      throw InputError("surd: not in canonical form, expected " + to_json(x).dump());
    return x;
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("surd: ") + e.what());
  } catch (const std::domain_error& e) {
    throw InputError(std::string("surd: ") + e.what());
  }
}

Json to_json(const Multiplicities& m) { return Json{{"m1", m.m1}, {"m2", m.m2}, {"n1", m.n1}, {"n2", m.n2}}; }

Json triad_to_json(TriadKind kind, const Multiplicities& m) {
  Json j{{"kind", std::string(kind_name(kind))}};
  j.update(to_json(m));
  return j;
}

Json triad_to_json(const SymmetricTriad1D& t) { return triad_to_json(t.kind(), t.mults()); }

TriadInput triad_input_from_json(const Json& j, const std::string& text) {
  if (!j.is_object()) throw InputError("triad document: expected a JSON object");
  for (const auto& [k, _] : j.items()) {
    const bool known = k == "kind" || std::find_if(kMultFields.begin(), kMultFields.end(),
                                                   [&](const char* f) { return k == f; }) != kMultFields.end();
    if (!known) throw InputError(where(text, k) + "unknown field '" + k + "'");
  }
  if (!j.contains("kind")) throw InputError("triad document: missing field 'kind'");
  if (!j["kind"].is_string()) throw InputError(where(text, "kind") + "field 'kind' must be a string");

  TriadInput in;
  try {
    in.kind = parse_kind(j["kind"].get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InputError(where(text, "kind") + "field 'kind': " + e.what());
  }
  std::array<int*, 4> slots{&in.mults.m1, &in.mults.m2, &in.mults.n1, &in.mults.n2};
  for (std::size_t i = 0; i < kMultFields.size(); ++i) {
    const char* f = kMultFields[i];
    if (!j.contains(f)) continue;
    const Json& v = j[f];
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0 || v.get<std::int64_t>() > std::numeric_limits<int>::max())
      throw InputError(where(text, f) + "field '" + f + "' must be a nonnegative integer");
    *slots[i] = v.get<int>();
  }
  return in;
}

TriadInput parse_triad_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("triad document: " + line_col(text, e.byte) + ": invalid JSON");
  }
  return triad_input_from_json(j, text);
}

Json to_json(const ValidationReport& r) {
  Json conds = Json::array();
  for (const auto& c : r.entries) {
    Json e{{"condition", c.condition}, {"ok", c.ok}};
    if (!c.witness.empty()) e["witness"] = c.witness;
    conds.push_back(std::move(e));
  }
  Json j{{"passed", r.passed()}, {"conditions", std::move(conds)}};
  if (auto f = r.first_failure()) j["first_failure"] = f->condition;
  return j;
}

Json solve_json(const SymmetricTriad1D& t, const ClassificationResult& r) {
  return Json{{"triad", triad_to_json(t)},
              {"harmonic", to_json(r.harmonic_t)},
              {"biharmonic", surds(r.biharmonic_t)},
              {"proper", surds(r.proper_biharmonic_t)},
              {"case", std::string(case_label_name(r.case_label))},
              {"angles_rad", r.angles_radians}};
}

Json classify_json(const SymmetricTriad1D& t, const ClassificationResult& r) {
  Json j = solve_json(t, r);
  j["theorem_group"] = theorem_group(r.case_label);
  j["variable"] = std::string(variable_name(t));
  j["harmonic_angles_rad"] = r.harmonic_angles;
  j["display"] = Json{{"harmonic", r.harmonic_t.str()},
                      {"biharmonic", strings(r.biharmonic_t)},
                      {"proper", strings(r.proper_biharmonic_t)}};
  return j;
}

Json to_json(const CatalogEntry& e) {
  const auto& m = e.triad.mults();
  return Json{{"group_g", e.group_g},
              {"group_k1", e.group_k1},
              {"group_k2", e.group_k2},
              {"kind", std::string(kind_name(e.triad.kind()))},
              {"m1", m.m1},
              {"m2", m.m2},
              {"n1", m.n1},
              {"n2", m.n2},
              {"params", Json(e.params)},
              {"theorem_case", e.theorem_case}};
}

Json catalog_table_json(const std::vector<CatalogEntry>& entries) {
  Json a = Json::array();
  for (const auto& e : entries) a.push_back(to_json(e));
  return a;
}

Json to_json(const CatalogReport& r) {
  Json fams = Json::array();
  for (const auto& f : r.families) {
    Json cert{{"argument", f.certificate.argument}};
    cert["label"] = f.certificate.label ? Json(std::string(case_label_name(*f.certificate.label))) : Json(nullptr);
    fams.push_back(Json{{"theorem_case", f.theorem_case},
                        {"expected", std::string(case_label_name(f.expected))},
                        {"instances", f.instances},
                        {"mismatches", f.mismatches},
                        {"certificate", std::move(cert)}});
  }
  Json rows = Json::array();
  for (const auto& e : r.entries) {
    Json row = to_json(e.entry);
    row["case"] = std::string(case_label_name(e.result.case_label));
    row["proper"] = surds(e.result.proper_biharmonic_t);
    row["matches"] = e.matches;
    rows.push_back(std::move(row));
  }
  return Json{{"max_param", r.max_param},
              {"ok", r.ok()},
              {"family_count", r.families.size()},
              {"group_sizes", r.group_sizes},
              {"families", std::move(fams)},
              {"mismatches", r.mismatches},
              {"entries", std::move(rows)}};
}

Json to_json(const OracleReport& r) {
  Json samples = Json::array();
  for (const auto& s : r.samples)
    samples.push_back(Json{{"s", s.s},
                           {"b_numeric", s.b_numeric},
                           {"b_closed", s.b_closed},
                           {"tension_numeric", s.tension_numeric},
                           {"tension_closed", s.tension_closed},
                           {"rel_dev", s.rel_dev},
                           {"bracket_residual", s.bracket_residual}});
  Json j{{"case", r.case_name},
         {"b", r.b},
         {"c", r.c},
         {"recovered_mults", mults_array(r.recovered)},
         {"catalog_mults", mults_array(r.catalog)},
         {"max_rel_dev", r.max_rel_dev},
         {"samples", std::move(samples)},
         {"pass", r.pass},
         {"tolerance", r.tolerance},
         {"recovered_alpha_norm_sq", r.recovered_alpha_norm_sq},
         {"expected_alpha_norm_sq", r.expected_alpha_norm_sq},
         {"adapted_basis_residual", r.adapted_basis_residual},
         {"dimension_sum", r.dimension_sum},
         {"dim", r.dim}};
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

}  // namespace biharm
