#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace boost {

// Under C++20 rewriting, boost 1.74 resolves rational == integer to its own
// reversed template and recurses forever. Exact non-template matches win.
inline bool operator==(const rational<std::int64_t>& a, std::int64_t b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(const rational<std::int64_t>& a, int b) { return a == static_cast<std::int64_t>(b); }

}  // namespace boost

namespace biharm {

using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& r) {
  return boost::rational_cast<double>(r);
}

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// True when r is an integer.
inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

/// True when r is an odd integer.
inline bool is_odd_integer(const Rational& r) {
  return r.denominator() == 1 && (r.numerator() % 2 != 0);
}

}  // namespace biharm
