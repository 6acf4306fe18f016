#pragma once

#include "biharm/errors.hpp"
#include "biharm/kernels.hpp"
#include "biharm/rational.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace biharm {

/// Gaussian integer; enough for every entry of the so(n) and su(n) bases
/// and their brackets.
struct GaussInt {
  std::int64_t re = 0;
  std::int64_t im = 0;
  friend bool operator==(const GaussInt&, const GaussInt&) = default;
};

/// Dense n x n Gaussian-integer matrix, row major.
struct GaussMatrix {
  int n = 0;
  std::vector<GaussInt> a;

  explicit GaussMatrix(int size = 0) : n(size), a(static_cast<std::size_t>(size) * size) {}
  GaussInt& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  const GaussInt& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
  friend bool operator==(const GaussMatrix&, const GaussMatrix&) = default;
};

GaussMatrix commutator(const GaussMatrix& x, const GaussMatrix& y);

/// Sparse exact coordinate vector with respect to an algebra basis.
using SparseVec = std::vector<std::pair<int, Rational>>;

enum class MatrixFamily { SO, SU };

/// so(n) with basis A_i^j = E_ij - E_ji (i < j), or su(n) realified with
/// A_ij, B_ij = i(E_ij + E_ji) and the diagonal i(E_kk - E_{k+1,k+1}).
/// Indices are zero based in code; names use the one-based matrix notation.
class MatrixLieAlgebra {
 public:
  MatrixLieAlgebra(MatrixFamily family, int n, Exec exec = Exec::Parallel);

  MatrixFamily family() const { return family_; }
  int matrix_dim() const { return n_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const GaussMatrix& basis(int a) const { return basis_[a]; }
  const std::string& name(int a) const { return names_[a]; }

  /// Exact coordinates of a matrix in the algebra. Throws StructuralError
  /// when the matrix is not an element.
  std::vector<Rational> coords(const GaussMatrix& m) const;
  int index_of_a(int i, int j) const;  // position of A_i^j, i < j

  /// [e_a, e_b] in the basis.
  const SparseVec& bracket(int a, int b) const { return structure_[static_cast<std::size_t>(a) * dim() + b]; }
  std::vector<Rational> bracket(const std::vector<Rational>& x, const std::vector<Rational>& y) const;

  /// K(e_a, e_b) = tr(ad e_a ad e_b), exact.
  const std::vector<std::vector<Rational>>& killing() const { return killing_; }

  /// -Killing as a double matrix; positive definite for a compact algebra.
  const Eigen::MatrixXd& metric() const { return metric_; }
  /// ad(e_a) as a dim x dim matrix acting on coordinate columns.
  const Eigen::MatrixXd& ad(int a) const { return ad_[a]; }
  Eigen::MatrixXd ad(const Eigen::VectorXd& x) const;

  /// Exact Jacobi identity on `triples` seeded random basis triples.
  /// Returns an empty string on success, otherwise the first failing triple.
  std::string jacobi_check(int triples, std::uint64_t seed) const;

  /// Negative control: flips the sign of every coefficient of [e_a, e_b]
  /// (and of [e_b, e_a]) and recomputes everything derived from it.
  void corrupt_bracket(int a, int b);

 private:
  void build_structure(Exec exec);
  void build_numeric();

  MatrixFamily family_;
  int n_;
  std::vector<GaussMatrix> basis_;
  std::vector<std::string> names_;
  std::vector<SparseVec> structure_;
  std::vector<std::vector<Rational>> killing_;
  Eigen::MatrixXd metric_;
  std::vector<Eigen::MatrixXd> ad_;
};

/// Killing form from structure constants only:
/// K_ab = sum_c sum_d C_{bc}^d C_{ad}^c.
std::vector<std::vector<Rational>> killing_form(const MatrixLieAlgebra& alg, Exec exec);

/// theta(X) = I'_l X I'_l with I'_l = diag(-1 (l times), +1 ...).
class InvolutionSpec {
 public:
  InvolutionSpec(const MatrixLieAlgebra& alg, int l);

  int l() const { return l_; }
  /// Column a is theta(e_a) in the basis.
  const std::vector<SparseVec>& action() const { return action_; }
  Eigen::MatrixXd matrix(int dim) const;

  bool squares_to_identity() const;
  /// theta [e_a, e_b] = [theta e_a, theta e_b] on every basis pair.
  bool is_automorphism(const MatrixLieAlgebra& alg) const;
  bool commutes_with(const InvolutionSpec& other) const;

 private:
  int l_;
  std::vector<SparseVec> action_;
};

/// A built commutative symmetric triad (g, theta1, theta2) with the
/// generator of a before normalization (E_{1,n} - E_{n,1}).
struct TriadBuild {
  std::string case_name;  // "so" or "su"
  int b = 0;
  int c = 0;
  MatrixLieAlgebra alg;
  InvolutionSpec theta1;
  InvolutionSpec theta2;
  std::vector<Rational> h_raw;

  /// Swaps the two involutions: K1 acting on G/K2.
  TriadBuild dual() const;
};

inline constexpr int kDefaultSizeCap = 10;

/// so(1+b+c) with theta1 = conj by I'_{1+b}, theta2 = conj by I'_1.
/// Requires b >= 1, c >= 2; throws ResourceError when 1+b+c > size_cap.
TriadBuild build_so_triad(int b, int c, int size_cap = kDefaultSizeCap);
/// su(1+b+c) with the same involutions. Requires b >= 0, c >= 2.
TriadBuild build_su_triad(int b, int c, int size_cap = kDefaultSizeCap);

}  // namespace biharm
