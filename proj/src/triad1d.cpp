#include "biharm/triad1d.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace biharm {

namespace {

struct Shape {
  bool sigma_double;
  bool w_single;
  bool w_double;
};

Shape shape_of(TriadKind kind) {
  switch (kind) {
    case TriadKind::IIIB1: return {false, true, false};
    case TriadKind::IBC1: return {true, true, false};
    case TriadKind::IIBC1: return {false, true, true};
    case TriadKind::IIIBC1: return {true, true, true};
    case TriadKind::IsoA1: return {false, false, false};
    case TriadKind::IsoBC1: return {true, false, false};
  }
  throw std::logic_error("unknown triad kind");
}

bool is_isotropy_kind(TriadKind kind) { return kind == TriadKind::IsoA1 || kind == TriadKind::IsoBC1; }

RootVector line_root(int k) { return RootVector{{Rational(k)}}; }

constexpr std::array<std::pair<TriadKind, std::string_view>, 6> kNames{{
    {TriadKind::IIIB1, "III-B1"},
    {TriadKind::IBC1, "I-BC1"},
    {TriadKind::IIBC1, "II-BC1"},
    {TriadKind::IIIBC1, "III-BC1"},
    {TriadKind::IsoA1, "ISO-A1"},
    {TriadKind::IsoBC1, "ISO-BC1"},
}};

// Distance from x to the nearest point of period*Z + offset.
double lattice_distance(double x, double period, double offset) {
  const double y = (x - offset) / period;
  return std::abs(y - std::round(y)) * period;
}

bool near_lattice(double x, double period, double offset) {
  const double tol = 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x));
  return lattice_distance(x, period, offset) <= tol;
}

}  // namespace

std::string_view kind_name(TriadKind kind) {
  for (const auto& [k, name] : kNames)
    if (k == kind) return name;
  throw std::logic_error("unknown triad kind");
}

TriadKind parse_kind(std::string_view name) {
  for (const auto& [k, n] : kNames)
    if (n == name) return k;
  throw std::invalid_argument("unknown triad kind '" + std::string(name) + "'");
}

double PiMultiple::radians() const { return to_double(coeff) * std::numbers::pi; }
double Cell::lo_rad() const { return to_double(lo) * std::numbers::pi; }
double Cell::hi_rad() const { return to_double(hi) * std::numbers::pi; }

SymmetricTriadData triad_data(TriadKind kind, Rational alpha_norm_sq) {
  const Shape sh = shape_of(kind);
  std::vector<RootVector> sigma{line_root(1), line_root(-1)};
  if (sh.sigma_double) {
    sigma.push_back(line_root(2));
    sigma.push_back(line_root(-2));
  }
  std::vector<RootVector> w;
  if (sh.w_single) {
    w.push_back(line_root(1));
    w.push_back(line_root(-1));
  }
  if (sh.w_double) {
    w.push_back(line_root(2));
    w.push_back(line_root(-2));
  }
  std::vector<RootVector> full = sigma;
  for (const auto& v : w)
    if (!contains(full, v)) full.push_back(v);
  return {RootSystem(AmbientSpace::line(alpha_norm_sq), full), sigma, w};
}

MultiplicityMap multiplicity_map(TriadKind kind, const Multiplicities& mults) {
  const auto data = triad_data(kind);
  MultiplicityMap mm;
  for (const auto& r : data.sigma_tilde.roots()) {
    const bool single = std::abs(r.coords[0].numerator()) == 1;
    mm.m.push_back(single ? mults.m1 : mults.m2);
    mm.n.push_back(single ? mults.n1 : mults.n2);
  }
  return mm;
}

ValidationReport validate_triad(TriadKind kind, const Multiplicities& mults) {
  const auto data = triad_data(kind);
  ValidationReport report;
  if (is_isotropy_kind(kind)) {
    for (auto& e : validate_root_system(data.sigma_tilde).entries) report.add("root system " + e.condition, e.ok, e.witness);
  } else {
    for (auto& e : validate_symmetric_triad(data).entries) report.add("triad " + e.condition, e.ok, e.witness);
  }
  for (auto& e : validate_multiplicities(data, multiplicity_map(kind, mults)).entries)
    report.add("multiplicity " + e.condition, e.ok, e.witness);
  // m and n live on the full root system; a value on 2 alpha is meaningless
  // when 2 alpha is not a root of it.
  const bool has_double = contains(data.sigma_tilde.roots(), RootVector{{Rational(2)}});
  std::string stray;
  if (!has_double && mults.m2 != 0) stray = "m(2 alpha)=" + std::to_string(mults.m2);
  if (!has_double && mults.n2 != 0) stray += (stray.empty() ? "" : ", ") + ("n(2 alpha)=" + std::to_string(mults.n2));
  report.add("multiplicity support", stray.empty(), stray.empty() ? "" : stray + " but 2 alpha is not a root");
  return report;
}

SymmetricTriad1D::SymmetricTriad1D(TriadKind kind, Multiplicities mults) : kind_(kind), mults_(mults) {
  const auto report = validate_triad(kind, mults);
  if (const auto f = report.first_failure())
    throw std::invalid_argument(std::string(kind_name(kind)) + " multiplicities rejected at " + f->condition + ": " +
                                f->witness);
}

SymmetricTriad1D SymmetricTriad1D::infer(Multiplicities mults) {
  if (mults.m1 <= 0) throw std::invalid_argument("m(alpha) must be positive");
  if (mults.m2 < 0 || mults.n1 < 0 || mults.n2 < 0) throw std::invalid_argument("multiplicities must be nonnegative");
  const bool sd = mults.m2 > 0, ws = mults.n1 > 0, wd = mults.n2 > 0;
  if (wd && !ws) throw std::invalid_argument("2 alpha in W requires alpha in W");
  TriadKind kind;
  if (!ws)
    kind = sd ? TriadKind::IsoBC1 : TriadKind::IsoA1;
  else if (!wd)
    kind = sd ? TriadKind::IBC1 : TriadKind::IIIB1;
  else
    kind = sd ? TriadKind::IIIBC1 : TriadKind::IIBC1;
  return SymmetricTriad1D(kind, mults);
}

SymmetricTriad1D SymmetricTriad1D::reduced(TriadKind declared, Multiplicities mults) {
  const Shape sh = shape_of(declared);
  if ((!sh.sigma_double && mults.m2 != 0) || (!sh.w_single && mults.n1 != 0) || (!sh.w_double && mults.n2 != 0))
    throw std::invalid_argument(std::string(kind_name(declared)) + " has no root carrying the given multiplicity");
  return infer(mults);
}

bool SymmetricTriad1D::has_sigma_double() const { return shape_of(kind_).sigma_double; }
bool SymmetricTriad1D::has_w_single() const { return shape_of(kind_).w_single; }
bool SymmetricTriad1D::has_w_double() const { return shape_of(kind_).w_double; }
bool SymmetricTriad1D::is_isotropy() const { return is_isotropy_kind(kind_); }

int SymmetricTriad1D::tilde_factor() const {
  switch (kind_) {
    case TriadKind::IIIB1:
    case TriadKind::IBC1:
    case TriadKind::IsoA1: return 1;
    default: return 2;
  }
}

bool is_regular_point(const SymmetricTriad1D& t, const PiMultiple& s) {
  const Rational half(1, 2);
  if (is_integer(s.coeff)) return false;
  if (t.has_sigma_double() && is_integer(2 * s.coeff)) return false;
  if (t.has_w_single() && is_integer(s.coeff - half)) return false;
  if (t.has_w_double() && is_integer(2 * s.coeff - half)) return false;
  return true;
}

std::optional<std::string> singular_wall(const SymmetricTriad1D& t, double s) {
  constexpr double pi = std::numbers::pi;
  if (near_lattice(s, pi, 0.0)) return "<alpha,H> in pi Z (alpha in Sigma+)";
  if (t.has_sigma_double() && near_lattice(2 * s, pi, 0.0)) return "<2alpha,H> in pi Z (2alpha in Sigma+)";
  if (t.has_w_single() && near_lattice(s, pi, pi / 2)) return "<alpha,H> in pi/2 + pi Z (alpha in W+)";
  if (t.has_w_double() && near_lattice(2 * s, pi, pi / 2)) return "<2alpha,H> in pi/2 + pi Z (2alpha in W+)";
  return std::nullopt;
}

bool is_regular_point(const SymmetricTriad1D& t, double s) { return !singular_wall(t, s).has_value(); }

Cell fundamental_cell(const SymmetricTriad1D& t) {
  switch (t.kind()) {
    case TriadKind::IIIB1:
    case TriadKind::IBC1:
    case TriadKind::IsoBC1: return {0, Rational(1, 2)};
    case TriadKind::IIBC1:
    case TriadKind::IIIBC1: return {0, Rational(1, 4)};
    case TriadKind::IsoA1: return {0, 1};
  }
  throw std::logic_error("unknown triad kind");
}

}  // namespace biharm
