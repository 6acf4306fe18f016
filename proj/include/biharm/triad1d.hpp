#pragma once

#include "biharm/symmetric_triad.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace biharm {

/// Rank-one triad shapes. The two isotropy kinds have W empty.
enum class TriadKind { IIIB1, IBC1, IIBC1, IIIBC1, IsoA1, IsoBC1 };

std::string_view kind_name(TriadKind kind);
/// Accepts "III-B1", "I-BC1", "II-BC1", "III-BC1", "ISO-A1", "ISO-BC1".
TriadKind parse_kind(std::string_view name);

/// m1 = m(alpha), m2 = m(2 alpha), n1 = n(alpha), n2 = n(2 alpha).
struct Multiplicities {
  int m1 = 0;
  int m2 = 0;
  int n1 = 0;
  int n2 = 0;
  friend bool operator==(const Multiplicities&, const Multiplicities&) = default;
};

/// An exact multiple of pi.
struct PiMultiple {
  Rational coeff;
  double radians() const;
};

/// Open interval (lo*pi, hi*pi) for s = <alpha,H>.
struct Cell {
  Rational lo;
  Rational hi;
  double lo_rad() const;
  double hi_rad() const;
  bool contains(double s) const { return s > lo_rad() && s < hi_rad(); }
};

/// Builds the rank-one root data for a kind and runs every axiom check.
/// Isotropy kinds are checked as root systems with W empty, since the
/// symmetric triad axioms require Sigma cap W to be nonempty.
ValidationReport validate_triad(TriadKind kind, const Multiplicities& mults);

/// Root data of a kind over the line with <alpha,alpha> = `alpha_norm_sq`.
SymmetricTriadData triad_data(TriadKind kind, Rational alpha_norm_sq = 1);
MultiplicityMap multiplicity_map(TriadKind kind, const Multiplicities& mults);

class SymmetricTriad1D {
 public:
  /// Throws std::invalid_argument unless the multiplicities fit the kind exactly.
  SymmetricTriad1D(TriadKind kind, Multiplicities mults);

  /// Infers the kind from which multiplicities are positive. Throws when
  /// m1 == 0 or W would contain 2 alpha without alpha.
  static SymmetricTriad1D infer(Multiplicities mults);

  /// Like the constructor, but zero multiplicities of the declared kind are
  /// allowed and collapse it to the kind they actually describe
  /// (e.g. I-BC1 with n1 = 0 becomes ISO-BC1).
  static SymmetricTriad1D reduced(TriadKind declared, Multiplicities mults);

  TriadKind kind() const { return kind_; }
  const Multiplicities& mults() const { return mults_; }

  bool has_sigma_double() const;  // 2 alpha in Sigma+
  bool has_w_single() const;      // alpha in W+
  bool has_w_double() const;      // 2 alpha in W+
  bool is_isotropy() const;
  /// alpha~ = factor * alpha.
  int tilde_factor() const;

  friend bool operator==(const SymmetricTriad1D&, const SymmetricTriad1D&) = default;

 private:
  TriadKind kind_;
  Multiplicities mults_;
};

/// <lambda,H> not in pi Z for lambda in Sigma+, <beta,H> not in pi/2 + pi Z for beta in W+.
bool is_regular_point(const SymmetricTriad1D& t, const PiMultiple& s);
/// Floating version; walls are matched within a few ulps.
bool is_regular_point(const SymmetricTriad1D& t, double s);
/// Description of the wall s lies on, or nullopt when regular.
std::optional<std::string> singular_wall(const SymmetricTriad1D& t, double s);

Cell fundamental_cell(const SymmetricTriad1D& t);

}  // namespace biharm
