#pragma once

#include "biharm/decomposition.hpp"
#include "biharm/kernels.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

namespace biharm {

/// Second fundamental form of the orbit through exp(H), H = (s/a) H^,
/// translated back to the origin. Computed from Killing fields:
/// a tangent vector w = X_m with X in Ad(exp(-H)) k_acting extends to the
/// Killing field X*, and B(v, w) = ([X_k, v])^perp.
struct NumericSff {
  double s = 0;
  Eigen::MatrixXd tangent;  // orthonormal tangent basis w_i (columns)
  Eigen::VectorXd normal;   // unit normal, oriented along H^
  Eigen::MatrixXd b;        // B(w_i, w_j) = b(i, j) * normal
  double b_norm_sq = 0;
  Eigen::VectorXd tension;  // trace of B, an element of a
  double tension_h = 0;     // <tension, H^>
  double symmetry_residual = 0;

  /// B(u, v) along the normal for tangent vectors given in g coordinates.
  double eval(const Eigen::VectorXd& u, const Eigen::VectorXd& v, const Eigen::MatrixXd& metric) const;
};

/// Orbit of K2 in G/K1 (dual = false) or of K1 in G/K2 (dual = true).
/// Throws std::domain_error when s is not regular.
NumericSff second_fundamental_form_numeric(const DecompositionData& d, double s, bool dual = false);

/// Largest deviation between the numeric form and the six cases of the
/// bracket formulas on the adapted bases, relative with a unit floor.
/// Cases (3)-(5) are the vanishing ones.
double bracket_formula_residual(const DecompositionData& d, const NumericSff& sff);

struct OracleSample {
  double s = 0;
  double b_numeric = 0;
  double b_closed = 0;
  double tension_numeric = 0;  // <tau, H^>
  double tension_closed = 0;   // k <alpha, H^>
  double rel_dev = 0;
  double bracket_residual = 0;
};

struct OracleReport {
  std::string case_name;
  int b = 0;
  int c = 0;
  Multiplicities recovered;
  Multiplicities catalog;
  double recovered_alpha_norm_sq = 0;
  double expected_alpha_norm_sq = 0;
  double adapted_basis_residual = 0;
  int dimension_sum = 0;
  int dim = 0;
  std::vector<OracleSample> samples;
  double max_rel_dev = 0;
  double tolerance = 1e-9;
  bool pass = false;
  std::string error;  // set when the pipeline stopped early
};

/// Multiplicities the catalog lists for so(1+b+c) (case 1-1 row formula)
/// or su(1+b+c) (case 2-2 row formula).
Multiplicities catalog_multiplicities(const std::string& case_name, int b, int c);

/// Builds the decomposition, samples regular angles inside the cell and
/// compares numeric |B|^2 and <tau, H^> with the closed forms evaluated at
/// the recovered multiplicities. `seed` picks the Jacobi spot-check
/// triples. Never throws on scientific failure.
inline constexpr std::uint64_t kDefaultSeed = 0x5eed;
OracleReport verify_closed_forms(const TriadBuild& build, int samples, double tolerance = 1e-9,
                                 Exec exec = Exec::Parallel, std::uint64_t seed = kDefaultSeed);

struct DualityReport {
  double s = 0;
  double b_dev = 0;        // | |B'|^2 - |B|^2 |
  double tension_dev = 0;  // |tau' - tau| in -Killing norm
};

DualityReport verify_duality(const DecompositionData& d, double s);

}  // namespace biharm
