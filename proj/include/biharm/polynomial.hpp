#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

namespace biharm {

/// Integer polynomial in the catalog parameters b, c, q.
class ParamPolynomial {
 public:
  enum Var { B = 0, C = 1, Q = 2 };
  using Exponents = std::array<int, 3>;

  ParamPolynomial() = default;
  /* implicit */ ParamPolynomial(std::int64_t constant);  // NOLINT
  static ParamPolynomial var(Var v);

  friend ParamPolynomial operator+(const ParamPolynomial& a, const ParamPolynomial& b);
  friend ParamPolynomial operator-(const ParamPolynomial& a, const ParamPolynomial& b);
  friend ParamPolynomial operator*(const ParamPolynomial& a, const ParamPolynomial& b);
  ParamPolynomial operator-() const;
  friend bool operator==(const ParamPolynomial&, const ParamPolynomial&) = default;

  bool is_zero() const { return terms_.empty(); }
  std::int64_t constant_term() const;
  std::int64_t eval(const std::array<std::int64_t, 3>& at) const;

  /// p(x + offset): used to move parameter lower bounds to the origin.
  ParamPolynomial shifted(const std::array<std::int64_t, 3>& offset) const;

  /// +1 if every coefficient is >= 0 and the constant is > 0, -1 for the
  /// mirrored case, 0 when this simple certificate does not apply. A nonzero
  /// result proves the sign on the whole nonnegative orthant.
  int orthant_sign() const;

  std::string str() const;

 private:
  std::map<Exponents, std::int64_t> terms_;
  void prune();
};

}  // namespace biharm
