#pragma once

#include "biharm/polynomial.hpp"
#include "biharm/triad1d.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace biharm {

using ParamValues = std::map<std::string, int>;

struct ParamSpec {
  ParamPolynomial::Var var;
  int min;
};

/// One numbered case of the classification theorem: a (possibly
/// parametrized) family of commutative compact symmetric triads with its
/// rank-one triad kind and multiplicities as polynomials in b, c, q.
struct CatalogFamily {
  std::string theorem_case;  // "1-1" .. "3-8"
  std::string source;        // where the multiplicities come from
  std::string group_g, group_k1, group_k2;  // templates; {expr} is evaluated
  TriadKind kind;
  std::vector<ParamSpec> params;
  std::array<ParamPolynomial, 4> mults;  // m1, m2, n1, n2
  /// Parameters where this polynomial vanishes belong to another case.
  std::optional<ParamPolynomial> nonzero;

  /// 1, 2 or 3: the leading digit of the case label.
  int group() const;
  bool admits(const ParamValues& params) const;
};

/// One instantiated row.
struct CatalogEntry {
  std::string group_g, group_k1, group_k2;
  ParamValues params;
  SymmetricTriad1D triad;
  std::string theorem_case;
  std::string source;
};

/// The 18 cases, in theorem order.
const std::vector<CatalogFamily>& catalog_families();

/// Every admissible instantiation with each parameter <= max_param.
/// Zero multiplicities reduce the triad kind (b = 0 in 2-2 and 2-3 gives the
/// isotropy actions on CP^c and HP^c).
std::vector<CatalogEntry> instantiate(const CatalogFamily& family, int max_param);
std::vector<CatalogEntry> catalog(int max_param);

/// The row at exactly these parameter values (extra keys are ignored), or
/// nullopt when a parameter is missing or the point is not admissible.
std::optional<CatalogEntry> instantiate_at(const CatalogFamily& family, const ParamValues& values);

/// Throws std::invalid_argument for an unknown label.
const CatalogFamily& find_family(const std::string& theorem_case);

/// Renders "SO({1+b+c})" as "SO(1+b+c)" (symbolic) or with values substituted.
std::string render_group(const std::string& tmpl, const ParamValues* values);

std::string param_name(ParamPolynomial::Var v);

}  // namespace biharm
