#pragma once

#include "biharm/surd.hpp"
#include "biharm/triad1d.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace biharm {

/// Ricci eigenvalue of a compact symmetric space with the metric -Killing.
/// A constant mean curvature hypersurface in such a space is biharmonic iff
/// it is harmonic or its second fundamental form has squared norm equal to it.
struct EinsteinConstant {
  static Rational value() { return Rational(1, 2); }
};

/// <alpha,alpha> = 1 / (2 (m1 + 4 m2 + n1 + 4 n2)) under -Killing.
/// Throws std::invalid_argument when every multiplicity is zero.
Rational norm_alpha_sq(const Multiplicities& m);
inline Rational norm_alpha_sq(const SymmetricTriad1D& t) { return norm_alpha_sq(t.mults()); }

struct GeometryReport {
  double s = 0;
  double b_norm_sq = 0;
  double tension_coeff = 0;
  bool is_regular = false;
};

/// Squared norm of the second fundamental form of the regular orbit through
/// exp(H), with s = <alpha,H>. Throws std::domain_error on a wall.
double b_norm_sq(const SymmetricTriad1D& t, double s);

/// k with dL_x^{-1}(tension) = k * alpha. Throws std::domain_error on a wall.
double tension_coeff(const SymmetricTriad1D& t, double s);

GeometryReport evaluate(const SymmetricTriad1D& t, double s);

/// Variable of record: tan^2 of <alpha~,H> for triads with W nonempty,
/// cot^2 of <alpha,H> for the isotropy kinds.
bool uses_cot_variable(const SymmetricTriad1D& t);
std::string_view variable_name(const SymmetricTriad1D& t);
double variable_at(const SymmetricTriad1D& t, double s);
/// Every s in the fundamental cell at which the variable takes the value
/// `value` (two points for ISO-A1 away from the centre, otherwise one).
std::vector<double> angles_for(const SymmetricTriad1D& t, double value);

/// Integer quadratic whose roots are the biharmonic values of the variable.
/// Degenerates to a linear equation for ISO-A1.
IntQuadratic biharmonic_quadratic(const SymmetricTriad1D& t);

/// Value of the variable at the unique harmonic regular orbit.
QuadraticSurd solve_harmonic(const SymmetricTriad1D& t);

/// Positive real solutions of |B|^2 = 1/2, ascending; a double root once.
std::vector<QuadraticSurd> solve_biharmonic(const SymmetricTriad1D& t);

enum class CaseLabel { HarmonicOnly, UniqueProper, TwoProper };
std::string_view case_label_name(CaseLabel label);
/// Leading digit of the matching theorem case: 3, 1, 2.
int theorem_group(CaseLabel label);

struct ClassificationResult {
  QuadraticSurd harmonic_t;
  std::vector<QuadraticSurd> biharmonic_t;
  std::vector<QuadraticSurd> proper_biharmonic_t;
  CaseLabel case_label = CaseLabel::HarmonicOnly;
  std::vector<double> harmonic_angles;  // s values
  std::vector<double> angles_radians;   // s values of the proper biharmonic orbits
};

ClassificationResult classify(const SymmetricTriad1D& t);

}  // namespace biharm
