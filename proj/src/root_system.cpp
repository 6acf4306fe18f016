#include "biharm/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace biharm {

bool ValidationReport::passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.ok; });
}

std::optional<ConditionResult> ValidationReport::first_failure() const {
  for (const auto& e : entries)
    if (!e.ok) return e;
  return std::nullopt;
}

void ValidationReport::add(std::string condition, bool ok, std::string witness) {
  entries.push_back({std::move(condition), ok, std::move(witness)});
}

namespace {

// Leading principal minors by exact Gaussian elimination (Sylvester's criterion).
bool positive_definite(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return true;
}

}  // namespace

AmbientSpace::AmbientSpace(std::vector<std::vector<Rational>> gram) : gram_(std::move(gram)) {
  const std::size_t n = gram_.size();
  if (n == 0) throw std::invalid_argument("ambient space must have positive dimension");
  for (std::size_t i = 0; i < n; ++i) {
    if (gram_[i].size() != n) throw std::invalid_argument("gram matrix must be square");
    for (std::size_t j = 0; j < i; ++j)
      if (gram_[i][j] != gram_[j][i]) throw std::invalid_argument("gram matrix must be symmetric");
  }
  if (!positive_definite(gram_)) throw std::invalid_argument("gram matrix must be positive definite");
}

AmbientSpace AmbientSpace::line(Rational norm_sq) { return AmbientSpace({{norm_sq}}); }

bool RootVector::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rational& r) { return r == 0; });
}

RootVector RootVector::operator-() const { return Rational(-1) * *this; }

RootVector operator*(const Rational& k, const RootVector& v) {
  RootVector out = v;
  for (auto& c : out.coords) c *= k;
  return out;
}

RootVector operator+(const RootVector& a, const RootVector& b) {
  if (a.coords.size() != b.coords.size()) throw std::invalid_argument("dimension mismatch");
  RootVector out = a;
  for (std::size_t i = 0; i < a.coords.size(); ++i) out.coords[i] += b.coords[i];
  return out;
}

std::string RootVector::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ", ";
    s += to_string(coords[i]);
  }
  return s + ")";
}

Rational inner(const AmbientSpace& space, const RootVector& a, const RootVector& b) {
  const auto& g = space.gram();
  if (a.coords.size() != g.size() || b.coords.size() != g.size())
    throw std::invalid_argument("vector dimension does not match ambient space");
  Rational acc = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) acc += a.coords[i] * g[i][j] * b.coords[j];
  return acc;
}

Rational cartan_integer(const AmbientSpace& space, const RootVector& alpha, const RootVector& beta) {
  if (alpha.is_zero()) throw std::invalid_argument("root must be nonzero");
  return Rational(2) * inner(space, alpha, beta) / inner(space, alpha, alpha);
}

RootVector reflect(const AmbientSpace& space, const RootVector& alpha, const RootVector& h) {
  if (alpha.is_zero()) throw std::invalid_argument("cannot reflect in the zero vector");
  return h + (-cartan_integer(space, alpha, h)) * alpha;
}

std::size_t rank_of(const std::vector<RootVector>& vectors, std::size_t dim) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& v : vectors) rows.push_back(v.coords);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < dim && rank < rows.size(); ++col) {
    auto pivot = std::find_if(rows.begin() + rank, rows.end(), [&](const auto& r) { return r[col] != 0; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, pivot);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      const Rational f = rows[i][col] / rows[rank][col];
      for (std::size_t j = col; j < dim; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

bool contains(const std::vector<RootVector>& set, const RootVector& v) {
  return std::find(set.begin(), set.end(), v) != set.end();
}

RootSystem::RootSystem(AmbientSpace space, std::vector<RootVector> roots)
    : space_(std::move(space)), roots_(std::move(roots)) {
  for (const auto& r : roots_)
    if (r.coords.size() != space_.dim()) throw std::invalid_argument("root dimension mismatch");
}

bool RootSystem::contains(const RootVector& v) const { return biharm::contains(roots_, v); }

bool RootSystem::is_irreducible() const {
  const std::size_t n = roots_.size();
  if (n == 0) return false;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (inner(space_, roots_[i], roots_[j]) != 0) parent[find(i)] = find(j);
  const std::size_t root0 = find(0);
  for (std::size_t i = 1; i < n; ++i)
    if (find(i) != root0) return false;
  return true;
}

ValidationReport validate_root_system(const RootSystem& rs) {
  ValidationReport report;
  const auto& roots = rs.roots();
  const auto& space = rs.space();

  std::string witness;
  for (const auto& r : roots)
    if (r.is_zero()) {
      witness = "zero vector in root set";
      break;
    }
  report.add("nonzero", witness.empty(), witness);
  if (!witness.empty()) return report;

  const std::size_t rank = rank_of(roots, space.dim());
  report.add("span", rank == space.dim(),
             rank == space.dim() ? "" : "roots span a subspace of dimension " + std::to_string(rank));

  witness.clear();
  for (const auto& a : roots) {
    for (const auto& b : roots) {
      const RootVector image = reflect(space, a, b);
      if (!rs.contains(image)) {
        witness = "s_" + a.str() + "(" + b.str() + ") = " + image.str() + " missing";
        break;
      }
    }
    if (!witness.empty()) break;
  }
  report.add("reflection-closure", witness.empty(), witness);

  witness.clear();
  for (const auto& a : roots) {
    for (const auto& b : roots) {
      const Rational k = cartan_integer(space, a, b);
      if (!is_integer(k)) {
        witness = "2<" + a.str() + "," + b.str() + ">/<a,a> = " + to_string(k);
        break;
      }
    }
    if (!witness.empty()) break;
  }
  report.add("integrality", witness.empty(), witness);
  return report;
}

}  // namespace biharm
