#pragma once

#include "biharm/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace biharm {

/// Outcome of one numbered axiom check. `witness` names the first violation.
struct ConditionResult {
  std::string condition;
  bool ok = true;
  std::string witness;
};

/// Ordered list of axiom checks; `first_failure` is what callers usually want.
struct ValidationReport {
  std::vector<ConditionResult> entries;

  bool passed() const;
  std::optional<ConditionResult> first_failure() const;
  void add(std::string condition, bool ok, std::string witness = {});
};

/// Finite dimensional inner product space with an exact rational Gram matrix.
class AmbientSpace {
 public:
  explicit AmbientSpace(std::vector<std::vector<Rational>> gram);

  /// One-dimensional space whose generator has squared length `norm_sq`.
  static AmbientSpace line(Rational norm_sq);

  std::size_t dim() const { return gram_.size(); }
  const std::vector<std::vector<Rational>>& gram() const { return gram_; }

 private:
  std::vector<std::vector<Rational>> gram_;
};

struct RootVector {
  std::vector<Rational> coords;

  bool is_zero() const;
  RootVector operator-() const;
  friend RootVector operator*(const Rational& k, const RootVector& v);
  friend RootVector operator+(const RootVector& a, const RootVector& b);
  friend bool operator==(const RootVector& a, const RootVector& b) = default;

  std::string str() const;
};

Rational inner(const AmbientSpace& space, const RootVector& a, const RootVector& b);

/// s_alpha(h) = h - 2<alpha,h>/<alpha,alpha> alpha. Throws std::invalid_argument on alpha == 0.
RootVector reflect(const AmbientSpace& space, const RootVector& alpha, const RootVector& h);

/// 2<alpha,beta>/<alpha,alpha>.
Rational cartan_integer(const AmbientSpace& space, const RootVector& alpha, const RootVector& beta);

/// Rank of a set of vectors by exact elimination.
std::size_t rank_of(const std::vector<RootVector>& vectors, std::size_t dim);

class RootSystem {
 public:
  RootSystem(AmbientSpace space, std::vector<RootVector> roots);

  const AmbientSpace& space() const { return space_; }
  const std::vector<RootVector>& roots() const { return roots_; }
  bool contains(const RootVector& v) const;

  /// Computed from the non-orthogonality graph of the roots.
  bool is_irreducible() const;

 private:
  AmbientSpace space_;
  std::vector<RootVector> roots_;
};

/// Checks: nonzero, span, reflection closure, integrality.
ValidationReport validate_root_system(const RootSystem& rs);

bool contains(const std::vector<RootVector>& set, const RootVector& v);

}  // namespace biharm
