#pragma once

#include "biharm/classification.hpp"
#include "biharm/oracle.hpp"
#include "biharm/root_system.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace biharm {

using Json = nlohmann::ordered_json;

/// A malformed input document. The message carries a line number or the
/// offending field.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json to_json(const QuadraticSurd& x);
/// Accepts {p, q, d, r}; the value must already be canonical.
QuadraticSurd surd_from_json(const Json& j);

Json to_json(const Multiplicities& m);
/// {kind, m1, m2, n1, n2}: the triad input document.
Json triad_to_json(TriadKind kind, const Multiplicities& m);
Json triad_to_json(const SymmetricTriad1D& t);

struct TriadInput {
  TriadKind kind = TriadKind::IIIB1;
  Multiplicities mults;
};

/// Parses a triad document. Unknown fields, a missing kind and non-integer
/// multiplicities are rejected. Multiplicities default to 0.
TriadInput triad_input_from_json(const Json& j, const std::string& text = {});
/// Parses text first; syntax errors report line and column.
TriadInput parse_triad_document(const std::string& text);

Json to_json(const ValidationReport& r);

/// {harmonic, biharmonic, proper, case, angles_rad} plus the triad.
Json solve_json(const SymmetricTriad1D& t, const ClassificationResult& r);
/// solve_json plus variable, theorem group and decimal views.
Json classify_json(const SymmetricTriad1D& t, const ClassificationResult& r);

/// Row of the exported catalog table.
Json to_json(const CatalogEntry& e);
Json catalog_table_json(const std::vector<CatalogEntry>& entries);
Json to_json(const CatalogReport& r);

Json to_json(const OracleReport& r);

}  // namespace biharm
