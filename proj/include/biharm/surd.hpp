#pragma once

#include "biharm/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace biharm {

/// Exact real number (p + q*sqrt(d)) / r.
///
/// Canonical form: d is squarefree and d >= 2 whenever q != 0, otherwise
/// q = d = 0; r > 0 and gcd(p, q, r) = 1. Two surds are equal iff their fields
/// are equal. Arithmetic is closed within one quadratic field Q(sqrt d);
/// mixing two distinct irrational fields throws std::domain_error.
class QuadraticSurd {
 public:
  QuadraticSurd() = default;
  QuadraticSurd(std::int64_t p, std::int64_t q, std::int64_t d, std::int64_t r);
  /* implicit */ QuadraticSurd(const Rational& x);  // NOLINT

  static QuadraticSurd integer(std::int64_t v) { return QuadraticSurd(v, 0, 0, 1); }

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  std::int64_t d() const { return d_; }
  std::int64_t r() const { return r_; }

  bool is_rational() const { return q_ == 0; }
  std::optional<Rational> as_rational() const;
  double to_double() const;
  /// -1, 0 or +1, decided exactly.
  int sign() const;
  /// (p - q sqrt d)/r.
  QuadraticSurd conjugate() const;
  /// sqrt(d) as a surd; d must be nonnegative.
  static QuadraticSurd sqrt_of(std::int64_t d);

  friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;
  friend QuadraticSurd operator+(const QuadraticSurd& a, const QuadraticSurd& b);
  friend QuadraticSurd operator-(const QuadraticSurd& a, const QuadraticSurd& b);
  friend QuadraticSurd operator*(const QuadraticSurd& a, const QuadraticSurd& b);
  friend QuadraticSurd operator/(const QuadraticSurd& a, const QuadraticSurd& b);
  QuadraticSurd operator-() const { return QuadraticSurd(-p_, -q_, d_, r_); }

  friend bool operator<(const QuadraticSurd& a, const QuadraticSurd& b) { return (a - b).sign() < 0; }
  friend bool operator>(const QuadraticSurd& a, const QuadraticSurd& b) { return b < a; }
  friend bool operator<=(const QuadraticSurd& a, const QuadraticSurd& b) { return !(b < a); }
  friend bool operator>=(const QuadraticSurd& a, const QuadraticSurd& b) { return !(a < b); }

  /// "5/2", "(25+2*sqrt(130))/15", "-sqrt(2)".
  std::string str() const;

 private:
  void normalize();

  std::int64_t p_ = 0;
  std::int64_t q_ = 0;
  std::int64_t d_ = 0;
  std::int64_t r_ = 1;
};

/// Integer quadratic a*u^2 + b*u + c.
struct IntQuadratic {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;

  std::int64_t discriminant() const { return b * b - 4 * a * c; }
  /// Real roots in increasing order; a double root appears once.
  std::vector<QuadraticSurd> real_roots() const;
  double eval(double u) const { return (static_cast<double>(a) * u + static_cast<double>(b)) * u + static_cast<double>(c); }
};

}  // namespace biharm
