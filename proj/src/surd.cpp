#include "biharm/surd.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace biharm {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("quadratic surd coefficient overflow");
  return static_cast<std::int64_t>(v);
}

// Splits d into k^2 * f with f squarefree.
std::pair<std::int64_t, std::int64_t> square_part(std::int64_t d) {
  std::int64_t k = 1;
  std::int64_t f = d;
  for (std::int64_t p = 2; p * p <= f; ++p) {
    while (f % (p * p) == 0) {
      f /= p * p;
      k *= p;
    }
  }
  return {k, f};
}

int sign_of(i128 v) { return (v > 0) - (v < 0); }

// sign(p + q sqrt d) with d >= 0.
int surd_sign(i128 p, i128 q, i128 d) {
  const int sp = sign_of(p), sq = sign_of(q);
  if (sq == 0 || d == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  const i128 pp = p * p, qqd = q * q * d;
  if (pp == qqd) return 0;
  return pp > qqd ? sp : sq;
}

}  // namespace

QuadraticSurd::QuadraticSurd(std::int64_t p, std::int64_t q, std::int64_t d, std::int64_t r)
    : p_(p), q_(q), d_(d), r_(r) {
  if (r == 0) throw std::invalid_argument("quadratic surd denominator must be nonzero");
  if (d < 0) throw std::invalid_argument("quadratic surd radicand must be nonnegative");
  normalize();
}

QuadraticSurd::QuadraticSurd(const Rational& x) : p_(x.numerator()), q_(0), d_(0), r_(x.denominator()) {}

void QuadraticSurd::normalize() {
  if (q_ != 0 && d_ > 1) {
    const auto [k, f] = square_part(d_);
    q_ = narrow(static_cast<i128>(q_) * k);
    d_ = f;
  }
  if (d_ == 1) {
    p_ = narrow(static_cast<i128>(p_) + q_);
    q_ = 0;
  }
  if (q_ == 0 || d_ == 0) {
    q_ = 0;
    d_ = 0;
  }
  if (r_ < 0) {
    p_ = -p_;
    q_ = -q_;
    r_ = -r_;
  }
  std::int64_t g = std::gcd(std::gcd(p_, q_), r_);
  if (g > 1) {
    p_ /= g;
    q_ /= g;
    r_ /= g;
  }
}

std::optional<Rational> QuadraticSurd::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return Rational(p_, r_);
}

double QuadraticSurd::to_double() const {
  return (static_cast<double>(p_) + static_cast<double>(q_) * std::sqrt(static_cast<double>(d_))) /
         static_cast<double>(r_);
}

int QuadraticSurd::sign() const { return surd_sign(p_, q_, d_); }

QuadraticSurd QuadraticSurd::conjugate() const { return QuadraticSurd(p_, -q_, d_, r_); }

QuadraticSurd QuadraticSurd::sqrt_of(std::int64_t d) {
  if (d < 0) throw std::domain_error("square root of a negative integer");
  const auto [k, f] = square_part(d);
  if (f == 1 || d == 0) return QuadraticSurd(d == 0 ? 0 : k, 0, 0, 1);
  return QuadraticSurd(0, k, f, 1);
}

namespace {

std::int64_t common_field(const QuadraticSurd& a, const QuadraticSurd& b) {
  if (a.is_rational()) return b.d();
  if (b.is_rational() || a.d() == b.d()) return a.d();
  throw std::domain_error("surds " + a.str() + " and " + b.str() + " lie in different quadratic fields");
}

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 x, i128 y) {
  while (y != 0) {
    const i128 t = x % y;
    x = y;
    y = t;
  }
  return x;
}

// Reduce in 128 bits before narrowing so intermediate products stay in range.
QuadraticSurd reduced_surd(i128 p, i128 q, std::int64_t d, i128 r) {
  i128 g = gcd128(gcd128(abs128(p), abs128(q)), abs128(r));
  if (g == 0) g = 1;
  return QuadraticSurd(narrow(p / g), narrow(q / g), d, narrow(r / g));
}

}  // namespace

QuadraticSurd operator+(const QuadraticSurd& a, const QuadraticSurd& b) {
  const std::int64_t d = common_field(a, b);
  const i128 p = static_cast<i128>(a.p_) * b.r_ + static_cast<i128>(b.p_) * a.r_;
  const i128 q = static_cast<i128>(a.q_) * b.r_ + static_cast<i128>(b.q_) * a.r_;
  const i128 r = static_cast<i128>(a.r_) * b.r_;
  return reduced_surd(p, q, d, r);
}

QuadraticSurd operator-(const QuadraticSurd& a, const QuadraticSurd& b) { return a + (-b); }

QuadraticSurd operator*(const QuadraticSurd& a, const QuadraticSurd& b) {
  const std::int64_t d = common_field(a, b);
  const i128 p = static_cast<i128>(a.p_) * b.p_ + static_cast<i128>(a.q_) * b.q_ * d;
  const i128 q = static_cast<i128>(a.p_) * b.q_ + static_cast<i128>(a.q_) * b.p_;
  const i128 r = static_cast<i128>(a.r_) * b.r_;
  return reduced_surd(p, q, d, r);
}

QuadraticSurd operator/(const QuadraticSurd& a, const QuadraticSurd& b) {
  if (b.sign() == 0) throw std::domain_error("division by zero surd");
  // 1/b = conj(b) / (b conj(b)) and b conj(b) is rational.
  const QuadraticSurd norm = b * b.conjugate();
  const Rational n = *norm.as_rational();
  return a * b.conjugate() * QuadraticSurd(Rational(1) / n);
}

std::string QuadraticSurd::str() const {
  if (q_ == 0) return r_ == 1 ? std::to_string(p_) : std::to_string(p_) + "/" + std::to_string(r_);
  std::string rad;
  const std::int64_t aq = q_ < 0 ? -q_ : q_;
  rad = (aq == 1 ? std::string{} : std::to_string(aq) + "*") + "sqrt(" + std::to_string(d_) + ")";
  std::string num;
  if (p_ == 0)
    num = (q_ < 0 ? "-" : "") + rad;
  else
    num = std::to_string(p_) + (q_ < 0 ? "-" : "+") + rad;
  if (r_ == 1) return num;
  return "(" + num + ")/" + std::to_string(r_);
}

std::vector<QuadraticSurd> IntQuadratic::real_roots() const {
  if (a == 0) {
    if (b == 0) return {};
    return {QuadraticSurd(Rational(-c, b))};
  }
  const i128 disc = static_cast<i128>(b) * b - static_cast<i128>(4) * a * c;
  if (disc < 0) return {};
  const std::int64_t D = narrow(disc);
  if (D == 0) return {QuadraticSurd(-b, 0, 0, 2 * a)};
  const QuadraticSurd root = QuadraticSurd::sqrt_of(D);
  const QuadraticSurd base(Rational(-b, 2 * a));
  const QuadraticSurd half = root * QuadraticSurd(Rational(1, 2 * a));
  QuadraticSurd lo = base - half, hi = base + half;
  if (hi < lo) std::swap(lo, hi);
  return {lo, hi};
}

}  // namespace biharm
