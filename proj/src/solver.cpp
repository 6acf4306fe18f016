#include "biharm/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace biharm {

namespace {

double cot(double x) { return std::cos(x) / std::sin(x); }

void require_regular(const SymmetricTriad1D& t, double s) {
  if (const auto wall = singular_wall(t, s))
    throw std::domain_error("singular point s=" + std::to_string(s) + ": " + *wall);
}

}  // namespace

Rational norm_alpha_sq(const Multiplicities& m) {
  const std::int64_t total = std::int64_t{m.m1} + 4 * std::int64_t{m.m2} + m.n1 + 4 * std::int64_t{m.n2};
  if (total <= 0) throw std::invalid_argument("total multiplicity m1 + 4 m2 + n1 + 4 n2 must be positive");
  return Rational(1, 2 * total);
}

double b_norm_sq(const SymmetricTriad1D& t, double s) {
  require_regular(t, s);
  const auto& m = t.mults();
  const double a = to_double(norm_alpha_sq(t));
  double acc = m.m1 * std::pow(cot(s), 2) * a;
  if (m.m2) acc += m.m2 * std::pow(cot(2 * s), 2) * 4 * a;
  if (m.n1) acc += m.n1 * std::pow(std::tan(s), 2) * a;
  if (m.n2) acc += m.n2 * std::pow(std::tan(2 * s), 2) * 4 * a;
  return acc;
}

double tension_coeff(const SymmetricTriad1D& t, double s) {
  require_regular(t, s);
  const auto& m = t.mults();
  double k = -m.m1 * cot(s);
  if (m.m2) k -= 2.0 * m.m2 * cot(2 * s);
  if (m.n1) k += m.n1 * std::tan(s);
  if (m.n2) k += 2.0 * m.n2 * std::tan(2 * s);
  return k;
}

GeometryReport evaluate(const SymmetricTriad1D& t, double s) {
  return {s, b_norm_sq(t, s), tension_coeff(t, s), true};
}

bool uses_cot_variable(const SymmetricTriad1D& t) { return t.is_isotropy(); }

std::string_view variable_name(const SymmetricTriad1D& t) {
  return uses_cot_variable(t) ? "cot^2<alpha,H>" : "tan^2<alpha~,H>";
}

double variable_at(const SymmetricTriad1D& t, double s) {
  if (uses_cot_variable(t)) return std::pow(cot(s), 2);
  return std::pow(std::tan(t.tilde_factor() * s), 2);
}

std::vector<double> angles_for(const SymmetricTriad1D& t, double value) {
  if (value < 0) return {};
  if (uses_cot_variable(t)) {
    const double s = std::atan2(1.0, std::sqrt(value));
    if (t.kind() == TriadKind::IsoA1 && value > 0) return {s, std::numbers::pi - s};
    return {s};
  }
  return {std::atan(std::sqrt(value)) / t.tilde_factor()};
}

IntQuadratic biharmonic_quadratic(const SymmetricTriad1D& t) {
  const std::int64_t m1 = t.mults().m1, m2 = t.mults().m2, n1 = t.mults().n1, n2 = t.mults().n2;
  switch (t.kind()) {
    case TriadKind::IIIB1: return {n1, -(m1 + n1), m1};
    case TriadKind::IBC1: return {n1 + m2, -(m1 + n1 + 6 * m2), m1 + m2};
    case TriadKind::IIBC1: return {n2, -n2, m1};
    case TriadKind::IIIBC1: return {n2, -(m2 + n2), m1 + m2};
    case TriadKind::IsoA1: return {0, 1, -1};
    case TriadKind::IsoBC1: return {m1 + m2, -(m1 + 6 * m2), m2};
  }
  throw std::logic_error("unknown triad kind");
}

QuadraticSurd solve_harmonic(const SymmetricTriad1D& t) {
  const std::int64_t m1 = t.mults().m1, m2 = t.mults().m2, n1 = t.mults().n1, n2 = t.mults().n2;
  switch (t.kind()) {
    case TriadKind::IIIB1: return Rational(m1, n1);
    case TriadKind::IBC1: return Rational(m1 + m2, n1 + m2);
    case TriadKind::IIBC1: return Rational(m1, n2);
    case TriadKind::IIIBC1: return Rational(m1 + m2, n2);
    case TriadKind::IsoA1: return Rational(0);
    case TriadKind::IsoBC1: return Rational(m2, m1 + m2);
  }
  throw std::logic_error("unknown triad kind");
}

std::vector<QuadraticSurd> solve_biharmonic(const SymmetricTriad1D& t) {
  auto roots = biharmonic_quadratic(t).real_roots();
  std::erase_if(roots, [](const QuadraticSurd& r) { return r.sign() <= 0; });
  return roots;
}

std::string_view case_label_name(CaseLabel label) {
  switch (label) {
    case CaseLabel::HarmonicOnly: return "harmonic-only";
    case CaseLabel::UniqueProper: return "unique-proper";
    case CaseLabel::TwoProper: return "two-proper";
  }
  throw std::logic_error("unknown case label");
}

int theorem_group(CaseLabel label) {
  switch (label) {
    case CaseLabel::UniqueProper: return 1;
    case CaseLabel::TwoProper: return 2;
    case CaseLabel::HarmonicOnly: return 3;
  }
  throw std::logic_error("unknown case label");
}

ClassificationResult classify(const SymmetricTriad1D& t) {
  ClassificationResult out;
  out.harmonic_t = solve_harmonic(t);
  out.biharmonic_t = solve_biharmonic(t);
  for (const auto& r : out.biharmonic_t)
    if (!(r == out.harmonic_t)) out.proper_biharmonic_t.push_back(r);
  out.harmonic_angles = angles_for(t, out.harmonic_t.to_double());
  for (const auto& r : out.proper_biharmonic_t) {
    const auto a = angles_for(t, r.to_double());
    out.angles_radians.insert(out.angles_radians.end(), a.begin(), a.end());
  }
  std::sort(out.angles_radians.begin(), out.angles_radians.end());
  switch (out.angles_radians.size()) {
    case 0: out.case_label = CaseLabel::HarmonicOnly; break;
    case 1: out.case_label = CaseLabel::UniqueProper; break;
    case 2: out.case_label = CaseLabel::TwoProper; break;
    default: throw std::logic_error("more than two proper biharmonic orbits in a cell");
  }
  return out;
}

}  // namespace biharm
