#pragma once

#include "biharm/catalog.hpp"
#include "biharm/kernels.hpp"
#include "biharm/solver.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace biharm {

/// Expected label for a case such as "2-5".
CaseLabel expected_label(const std::string& theorem_case);

/// Parameter-free proof of a family's label: the sign of the biharmonic
/// discriminant and of Q(1) as polynomials in (b, c, q), shifted so that the
/// parameter minima sit at the origin.
struct FamilyCertificate {
  std::optional<CaseLabel> label;  // nullopt when the simple argument does not apply
  std::string argument;
};

FamilyCertificate certify_family(const CatalogFamily& family);

struct ClassifiedEntry {
  CatalogEntry entry;
  ClassificationResult result;
  bool matches = false;
};

struct FamilySummary {
  std::string theorem_case;
  CaseLabel expected = CaseLabel::HarmonicOnly;
  std::size_t instances = 0;
  std::size_t mismatches = 0;
  FamilyCertificate certificate;
  bool certified() const { return certificate.label && *certificate.label == expected; }
};

struct CatalogReport {
  int max_param = 0;
  std::vector<ClassifiedEntry> entries;
  std::vector<FamilySummary> families;
  /// Families per observed group 1, 2, 3. A family counts toward the group
  /// its instances fall in only when they all agree.
  std::array<int, 3> group_sizes{0, 0, 0};
  std::vector<std::string> mismatches;

  bool ok() const;
};

/// Classifies every catalog instance with parameters <= max_param and
/// compares against the stored case labels.
CatalogReport classify_catalog(int max_param, Exec exec = Exec::Parallel);

}  // namespace biharm
