#include "biharm/classification.hpp"

#include <stdexcept>

namespace biharm {

namespace {

using P = ParamPolynomial;

// Coefficients of the biharmonic quadratic as polynomials in the parameters;
// mirrors biharmonic_quadratic.
std::array<P, 3> quadratic_polys(TriadKind kind, const std::array<P, 4>& m) {
  const P &m1 = m[0], &m2 = m[1], &n1 = m[2], &n2 = m[3];
  switch (kind) {
    case TriadKind::IIIB1: return {n1, -(m1 + n1), m1};
    case TriadKind::IBC1: return {n1 + m2, -(m1 + n1 + 6 * m2), m1 + m2};
    case TriadKind::IIBC1: return {n2, -n2, m1};
    case TriadKind::IIIBC1: return {n2, -(m2 + n2), m1 + m2};
    case TriadKind::IsoA1: return {0, 1, -1};
    case TriadKind::IsoBC1: return {m1 + m2, -(m1 + 6 * m2), m2};
  }
  throw std::logic_error("unknown triad kind");
}

std::string params_str(const ParamValues& v) {
  std::string s;
  for (const auto& [k, x] : v) s += (s.empty() ? "" : ", ") + k + "=" + std::to_string(x);
  return s.empty() ? "no parameters" : s;
}

}  // namespace

CaseLabel expected_label(const std::string& theorem_case) {
  if (theorem_case.empty()) throw std::invalid_argument("empty case label");
  switch (theorem_case.front()) {
    case '1': return CaseLabel::UniqueProper;
    case '2': return CaseLabel::TwoProper;
    case '3': return CaseLabel::HarmonicOnly;
  }
  throw std::invalid_argument("unknown case label '" + theorem_case + "'");
}

FamilyCertificate certify_family(const CatalogFamily& fam) {
  std::array<std::int64_t, 3> offset{0, 0, 0};
  for (const auto& param : fam.params) offset[param.var] = param.min;

  if (fam.kind == TriadKind::IsoA1)
    return {CaseLabel::TwoProper, "cot^2 s = 1 at s = pi/4 and 3pi/4; harmonic at cot^2 s = 0"};

  if (fam.kind == TriadKind::IIIB1) {
    // Roots are always {1, m1/n1}; 1 is proper iff m1 != n1.
    const P diff = fam.mults[0] - fam.mults[2];
    if (diff.is_zero()) return {CaseLabel::HarmonicOnly, "m1 - n1 = 0: both roots equal the harmonic value"};
    if (diff.orthant_sign() != 0 && diff == P(diff.constant_term()))
      return {CaseLabel::UniqueProper, "m1 - n1 = " + diff.str() + " != 0"};
    if (fam.nonzero && (diff == *fam.nonzero || diff == -*fam.nonzero))
      return {CaseLabel::UniqueProper, "m1 - n1 = " + diff.str() + ", excluded from vanishing by the family"};
    return {std::nullopt, "sign of m1 - n1 = " + diff.str() + " not decided"};
  }

  const auto [a, b, c] = quadratic_polys(fam.kind, fam.mults);
  const P disc = b * b - 4 * a * c;
  const P q1 = a + b + c;
  const std::string shifted = " (parameters shifted to their minima)";

  int disc_sign = disc.shifted(offset).orthant_sign();
  std::string why = "disc = " + disc.str();
  if (disc_sign == 0 && fam.kind == TriadKind::IBC1) {
    const P gap = disc - (fam.mults[0] - fam.mults[2]) * (fam.mults[0] - fam.mults[2]);
    if (gap.shifted(offset).orthant_sign() > 0) {
      disc_sign = 1;
      why += ", disc - (m1 - n1)^2 = " + gap.str();
    }
  }
  if (disc_sign < 0) return {CaseLabel::HarmonicOnly, why + " < 0" + shifted};
  if (disc_sign == 0) return {std::nullopt, why + ": sign not decided"};

  // Two distinct real roots. Positive coefficients pattern (+, -, +) makes
  // them positive; the product equals the harmonic value, so a root is
  // harmonic iff the other one is 1, i.e. iff Q(1) = 0.
  const bool positive = a.shifted(offset).orthant_sign() > 0 && (-b).shifted(offset).orthant_sign() > 0 &&
                        c.shifted(offset).orthant_sign() > 0;
  const int q1_sign = q1.shifted(offset).orthant_sign();
  if (!positive || q1_sign == 0) return {std::nullopt, why + " > 0 but root positivity or Q(1) not decided"};
  return {CaseLabel::TwoProper, why + " > 0" + shifted + "; Q(1) = " + q1.str() + " != 0"};
}

bool CatalogReport::ok() const {
  if (!mismatches.empty()) return false;
  for (const auto& f : families)
    if (f.instances == 0 || f.mismatches != 0 || !f.certified()) return false;
  return true;
}

CatalogReport classify_catalog(int max_param, Exec exec) {
  CatalogReport report;
  report.max_param = max_param;

  std::vector<CatalogEntry> entries;
  for (const auto& fam : catalog_families()) {
    auto rows = instantiate(fam, max_param);
    FamilySummary summary;
    summary.theorem_case = fam.theorem_case;
    summary.expected = expected_label(fam.theorem_case);
    summary.instances = rows.size();
    summary.certificate = certify_family(fam);
    if (!summary.certified())
      report.mismatches.push_back("case " + fam.theorem_case + ": symbolic argument does not confirm " +
                                  std::string(case_label_name(summary.expected)) + " (" +
                                  summary.certificate.argument + ")");
    report.families.push_back(std::move(summary));
    entries.insert(entries.end(), rows.begin(), rows.end());
  }

  std::vector<SymmetricTriad1D> triads;
  triads.reserve(entries.size());
  for (const auto& e : entries) triads.push_back(e.triad);
  auto results = classify_batch(triads, exec);

  for (std::size_t i = 0; i < entries.size(); ++i) {
    ClassifiedEntry row{std::move(entries[i]), std::move(results[i]), false};
    const CaseLabel want = expected_label(row.entry.theorem_case);
    row.matches = row.result.case_label == want;
    if (!row.matches) {
      for (auto& f : report.families)
        if (f.theorem_case == row.entry.theorem_case) ++f.mismatches;
      report.mismatches.push_back("case " + row.entry.theorem_case + " (" + params_str(row.entry.params) +
                                  "): expected " + std::string(case_label_name(want)) + ", got " +
                                  std::string(case_label_name(row.result.case_label)));
    }
    report.entries.push_back(std::move(row));
  }

  for (const auto& f : report.families)
    if (f.instances > 0 && f.mismatches == 0) ++report.group_sizes[theorem_group(f.expected) - 1];
  return report;
}

}  // namespace biharm
