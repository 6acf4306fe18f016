#pragma once

#include "biharm/lie_algebra.hpp"
#include "biharm/triad1d.hpp"

#include <Eigen/Dense>

#include <vector>

namespace biharm {

/// Adapted orthonormal pairs for one root: S (or X) on the k-side block and
/// T = [H^, S] / <lambda, H^> (or Y) on the partner block.
struct RootBlock {
  int multiple = 1;  // lambda = multiple * alpha
  Eigen::MatrixXd first;
  Eigen::MatrixXd second;
};

/// Joint eigenspace data of theta1, theta2 and (ad H^)^2. All bases are
/// columns of coordinate vectors, orthonormal for <,> = -Killing.
struct DecompositionData {
  TriadBuild build;
  Eigen::MatrixXd theta1, theta2;  // numeric action on coordinates
  Eigen::VectorXd h_hat;           // generator of a with <H^,H^> = 1
  double alpha_h = 0;              // <alpha, H^>
  Eigen::MatrixXd kk, mm, km, mk;  // k1&k2, m1&m2, k1&m2, m1&k2
  Eigen::MatrixXd k0, v_km, v_mk;  // centralizers of a inside kk, km, mk
  std::vector<RootBlock> sigma;    // k_lambda / m_lambda
  std::vector<RootBlock> w;        // V_perp(k1&m2) / V_perp(m1&k2)
  Multiplicities mults;

  double alpha_norm_sq() const { return alpha_h * alpha_h; }
  int dim() const { return build.alg.dim(); }
  /// Kind inferred from the recovered multiplicities.
  SymmetricTriad1D triad() const { return SymmetricTriad1D::infer(mults); }
  /// dim k0 + 2 sum m + dim V(k1&m2) + dim V(m1&k2) + 2 sum n + dim a.
  int dimension_sum() const;
};

inline constexpr double kClusterTolerance = 1e-8;

/// Splits g, checks a is maximal abelian in m1&m2, clusters the spectrum of
/// (ad H^)^2 at 0, -a^2, -4a^2 and builds adapted bases. Throws
/// StructuralError when any step finds an unexpected shape.
DecompositionData decompose(const TriadBuild& build);

/// Largest residual among the adapted-basis relations: orthonormality,
/// [H^,S] = <l,H^> T, [H^,T] = -<l,H^> S, [S,T] = l, the analogues for X, Y,
/// [T_i, S_j]^perp = -delta_ij l, and the Ad(exp t H^) rotation at `t`.
double adapted_basis_residual(const DecompositionData& d, double t = 0.7);

/// G-orthonormal basis of the image of a projector.
Eigen::MatrixXd orthonormal_image(const Eigen::MatrixXd& projector, const Eigen::MatrixXd& metric);

}  // namespace biharm
