#include "biharm/lie_algebra.hpp"

#include "parallel_for.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace biharm {

namespace {

GaussInt mul(GaussInt x, GaussInt y) { return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re}; }

Rational coeff(const SparseVec& v, int index) {
  const auto it = std::lower_bound(v.begin(), v.end(), index, [](const auto& e, int i) { return e.first < i; });
  return it != v.end() && it->first == index ? it->second : Rational(0);
}

SparseVec to_sparse(const std::map<int, Rational>& acc) {
  SparseVec out;
  for (const auto& [i, v] : acc)
    if (v != 0) out.emplace_back(i, v);
  return out;
}

SparseVec to_sparse(const std::vector<Rational>& dense) {
  SparseVec out;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) out.emplace_back(static_cast<int>(i), dense[i]);
  return out;
}

void add_scaled(std::map<int, Rational>& acc, const Rational& k, const SparseVec& v) {
  for (const auto& [i, x] : v) acc[i] += k * x;
}

int pair_index(int n, int i, int j) { return i * n - i * (i + 1) / 2 + (j - i - 1); }

std::string one_based(int i) { return std::to_string(i + 1); }

}  // namespace

GaussMatrix commutator(const GaussMatrix& x, const GaussMatrix& y) {
  const int n = x.n;
  GaussMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const GaussInt xik = x(i, k), yik = y(i, k);
      if (xik.re == 0 && xik.im == 0 && yik.re == 0 && yik.im == 0) continue;
      for (int j = 0; j < n; ++j) {
        const GaussInt p = mul(xik, y(k, j)), q = mul(yik, x(k, j));
        out(i, j).re += p.re - q.re;
        out(i, j).im += p.im - q.im;
      }
    }
  return out;
}

MatrixLieAlgebra::MatrixLieAlgebra(MatrixFamily family, int n, Exec exec) : family_(family), n_(n) {
  if (n < 2) throw std::invalid_argument("matrix size must be at least 2");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      GaussMatrix a(n);
      a(i, j) = {1, 0};
      a(j, i) = {-1, 0};
      basis_.push_back(a);
      names_.push_back("A_" + one_based(i) + "^" + one_based(j));
      if (family == MatrixFamily::SU) {
        GaussMatrix b(n);
        b(i, j) = {0, 1};
        b(j, i) = {0, 1};
        basis_.push_back(b);
        names_.push_back("B_" + one_based(i) + "^" + one_based(j));
      }
    }
  if (family == MatrixFamily::SU)
    for (int k = 0; k + 1 < n; ++k) {
      GaussMatrix d(n);
      d(k, k) = {0, 1};
      d(k + 1, k + 1) = {0, -1};
      basis_.push_back(d);
      names_.push_back("D_" + one_based(k));
    }
  build_structure(exec);
}

int MatrixLieAlgebra::index_of_a(int i, int j) const {
  if (!(0 <= i && i < j && j < n_)) throw std::invalid_argument("A_i^j needs i < j inside the matrix");
  const int p = pair_index(n_, i, j);
  return family_ == MatrixFamily::SO ? p : 2 * p;
}

std::vector<Rational> MatrixLieAlgebra::coords(const GaussMatrix& m) const {
  if (m.n != n_) throw StructuralError("matrix size mismatch");
  std::vector<Rational> out(basis_.size(), Rational(0));
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      const GaussInt x = m(i, j), y = m(j, i);
      // Skew-Hermitian: m(j,i) = -conj(m(i,j)).
      if (y.re != -x.re || y.im != x.im) throw StructuralError("matrix is not skew-Hermitian");
      if (family_ == MatrixFamily::SO) {
        if (x.im != 0) throw StructuralError("so(n) element with imaginary entry");
        out[static_cast<std::size_t>(index_of_a(i, j))] = x.re;
      } else {
        out[static_cast<std::size_t>(index_of_a(i, j))] = x.re;
        out[static_cast<std::size_t>(index_of_a(i, j)) + 1] = x.im;
      }
    }
  std::int64_t running = 0;
  for (int k = 0; k < n_; ++k) {
    const GaussInt d = m(k, k);
    if (d.re != 0) throw StructuralError("diagonal entry with nonzero real part");
    if (family_ == MatrixFamily::SO) {
      if (d.im != 0) throw StructuralError("so(n) element with nonzero diagonal");
      continue;
    }
    running += d.im;
    if (k + 1 < n_) out[static_cast<std::size_t>(n_ * (n_ - 1) + k)] = running;
  }
  if (running != 0) throw StructuralError("su(n) element with nonzero trace");
  return out;
}

void MatrixLieAlgebra::build_structure(Exec exec) {
  const int d = dim();
  structure_.assign(static_cast<std::size_t>(d) * d, {});
  detail::for_each_index(static_cast<std::size_t>(d), exec, [&](std::size_t ai) {
    const int a = static_cast<int>(ai);
    for (int b = a + 1; b < d; ++b)
      structure_[static_cast<std::size_t>(a) * d + b] = to_sparse(coords(commutator(basis_[a], basis_[b])));
  });
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < a; ++b) {
      SparseVec v = structure_[static_cast<std::size_t>(b) * d + a];
      for (auto& e : v) e.second = -e.second;
      structure_[static_cast<std::size_t>(a) * d + b] = std::move(v);
    }
  killing_ = killing_form(*this, exec);
  build_numeric();
}

void MatrixLieAlgebra::build_numeric() {
  const int d = dim();
  metric_.resize(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) metric_(a, b) = -to_double(killing_[a][b]);
  ad_.assign(static_cast<std::size_t>(d), Eigen::MatrixXd::Zero(d, d));
  for (int a = 0; a < d; ++a)
    for (int c = 0; c < d; ++c)
      for (const auto& [k, v] : bracket(a, c)) ad_[a](k, c) = to_double(v);
}

Eigen::MatrixXd MatrixLieAlgebra::ad(const Eigen::VectorXd& x) const {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(dim(), dim());
  for (int a = 0; a < dim(); ++a)
    if (x[a] != 0) out += x[a] * ad_[a];
  return out;
}

std::vector<Rational> MatrixLieAlgebra::bracket(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
  std::vector<Rational> out(static_cast<std::size_t>(dim()), Rational(0));
  for (int a = 0; a < dim(); ++a) {
    if (x[a] == 0) continue;
    for (int b = 0; b < dim(); ++b) {
      if (y[b] == 0) continue;
      const Rational k = x[a] * y[b];
      for (const auto& [i, v] : bracket(a, b)) out[i] += k * v;
    }
  }
  return out;
}

std::string MatrixLieAlgebra::jacobi_check(int triples, std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, dim() - 1);
  for (int t = 0; t < triples; ++t) {
    const int a = pick(rng), b = pick(rng), c = pick(rng);
    std::map<int, Rational> acc;
    for (const auto& [x, y, z] : {std::array{a, b, c}, std::array{b, c, a}, std::array{c, a, b}})
      for (const auto& [k, v] : bracket(x, y)) add_scaled(acc, v, bracket(k, z));
    if (!to_sparse(acc).empty()) return "Jacobi fails on (" + names_[a] + ", " + names_[b] + ", " + names_[c] + ")";
  }
  return {};
}

void MatrixLieAlgebra::corrupt_bracket(int a, int b) {
  const int d = dim();
  for (auto* v : {&structure_[static_cast<std::size_t>(a) * d + b], &structure_[static_cast<std::size_t>(b) * d + a]})
    for (auto& e : *v) e.second = -e.second;
  killing_ = killing_form(*this, Exec::Serial);
  build_numeric();
}

std::vector<std::vector<Rational>> killing_form(const MatrixLieAlgebra& alg, Exec exec) {
  const int d = alg.dim();
  std::vector<std::vector<Rational>> k(static_cast<std::size_t>(d), std::vector<Rational>(static_cast<std::size_t>(d)));
  detail::for_each_index(static_cast<std::size_t>(d), exec, [&](std::size_t ai) {
    const int a = static_cast<int>(ai);
    for (int b = 0; b < d; ++b) {
      Rational acc(0);
      for (int c = 0; c < d; ++c)
        for (const auto& [e, v] : alg.bracket(b, c)) acc += v * coeff(alg.bracket(a, e), c);
      k[ai][static_cast<std::size_t>(b)] = acc;
    }
  });
  return k;
}

InvolutionSpec::InvolutionSpec(const MatrixLieAlgebra& alg, int l) : l_(l) {
  const int n = alg.matrix_dim();
  if (l < 1 || l >= n) throw std::invalid_argument("I'_l needs 1 <= l < n");
  for (int a = 0; a < alg.dim(); ++a) {
    GaussMatrix m = alg.basis(a);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if ((i < l) != (j < l)) m(i, j) = {-m(i, j).re, -m(i, j).im};
    action_.push_back(to_sparse(alg.coords(m)));
  }
}

Eigen::MatrixXd InvolutionSpec::matrix(int dim) const {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(dim, dim);
  for (int a = 0; a < dim; ++a)
    for (const auto& [i, v] : action_[a]) out(i, a) = to_double(v);
  return out;
}

bool InvolutionSpec::squares_to_identity() const {
  for (std::size_t a = 0; a < action_.size(); ++a) {
    std::map<int, Rational> acc;
    for (const auto& [i, v] : action_[a]) add_scaled(acc, v, action_[i]);
    const SparseVec twice = to_sparse(acc);
    if (twice.size() != 1 || twice[0].first != static_cast<int>(a) || twice[0].second != 1) return false;
  }
  return true;
}

bool InvolutionSpec::is_automorphism(const MatrixLieAlgebra& alg) const {
  for (int a = 0; a < alg.dim(); ++a)
    for (int b = a + 1; b < alg.dim(); ++b) {
      std::map<int, Rational> lhs, rhs;
      for (const auto& [k, v] : alg.bracket(a, b)) add_scaled(lhs, v, action_[k]);
      for (const auto& [p, u] : action_[a])
        for (const auto& [q, w] : action_[b]) add_scaled(rhs, u * w, alg.bracket(p, q));
      if (to_sparse(lhs) != to_sparse(rhs)) return false;
    }
  return true;
}

bool InvolutionSpec::commutes_with(const InvolutionSpec& other) const {
  for (std::size_t a = 0; a < action_.size(); ++a) {
    std::map<int, Rational> ab, ba;
    for (const auto& [i, v] : other.action_[a]) add_scaled(ab, v, action_[i]);
    for (const auto& [i, v] : action_[a]) add_scaled(ba, v, other.action_[i]);
    if (to_sparse(ab) != to_sparse(ba)) return false;
  }
  return true;
}

TriadBuild TriadBuild::dual() const { return {case_name, b, c, alg, theta2, theta1, h_raw}; }

namespace {

TriadBuild build_triad(MatrixFamily family, const char* name, int b, int c, int size_cap) {
  const int n = 1 + b + c;
  if (n > size_cap)
    throw ResourceError("matrix size 1+b+c = " + std::to_string(n) + " exceeds the size cap " +
                        std::to_string(size_cap));
  MatrixLieAlgebra alg(family, n);
  InvolutionSpec theta1(alg, 1 + b), theta2(alg, 1);
  if (!theta1.squares_to_identity() || !theta2.squares_to_identity())
    throw StructuralError("involution does not square to the identity");
  if (!theta1.is_automorphism(alg) || !theta2.is_automorphism(alg))
    throw StructuralError("involution does not preserve the bracket");
  if (!theta1.commutes_with(theta2)) throw StructuralError("involutions do not commute");
  std::vector<Rational> h(static_cast<std::size_t>(alg.dim()), Rational(0));
  h[static_cast<std::size_t>(alg.index_of_a(0, n - 1))] = 1;
  return {name, b, c, std::move(alg), std::move(theta1), std::move(theta2), std::move(h)};
}

}  // namespace

TriadBuild build_so_triad(int b, int c, int size_cap) {
  if (b < 1 || c < 2) throw std::invalid_argument("so triad needs b >= 1 and c >= 2");
  return build_triad(MatrixFamily::SO, "so", b, c, size_cap);
}

TriadBuild build_su_triad(int b, int c, int size_cap) {
  if (b < 0 || c < 2) throw std::invalid_argument("su triad needs b >= 0 and c >= 2");
  return build_triad(MatrixFamily::SU, "su", b, c, size_cap);
}

}  // namespace biharm
