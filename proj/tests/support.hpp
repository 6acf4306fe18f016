#pragma once

// Test-side reference computations. They share no code with the solver:
// |B|^2 is summed root by root from the definition, and biharmonic angles
// are found by scanning and bisecting instead of solving the quadratic.

#include "biharm/triad1d.hpp"

#include <cmath>
#include <functional>
#include <vector>

namespace oracle {

struct Root {
  int multiple;  // 1 for alpha, 2 for 2 alpha
  int mult;
};

inline std::vector<Root> sigma_plus(const biharm::Multiplicities& m) {
  std::vector<Root> out{{1, m.m1}};
  if (m.m2 > 0) out.push_back({2, m.m2});
  return out;
}

inline std::vector<Root> w_plus(const biharm::Multiplicities& m) {
  std::vector<Root> out;
  if (m.n1 > 0) out.push_back({1, m.n1});
  if (m.n2 > 0) out.push_back({2, m.n2});
  return out;
}

// <alpha,alpha> for the metric -Killing, from 2 sum m(l) <l,l> + ... = 1
// summed over positive roots with both signs counted.
inline double alpha_sq(const biharm::Multiplicities& m) {
  double weight = 0;
  for (const auto& r : sigma_plus(m)) weight += r.mult * r.multiple * r.multiple;
  for (const auto& r : w_plus(m)) weight += r.mult * r.multiple * r.multiple;
  return 1.0 / (2.0 * weight);
}

inline double b_norm_sq(const biharm::Multiplicities& m, double s) {
  const double a = alpha_sq(m);
  long double acc = 0;
  for (const auto& r : sigma_plus(m)) {
    const long double t = std::tan(static_cast<long double>(r.multiple) * s);
    acc += r.mult * r.multiple * r.multiple * a / (t * t);
  }
  for (const auto& r : w_plus(m)) {
    const long double t = std::tan(static_cast<long double>(r.multiple) * s);
    acc += r.mult * r.multiple * r.multiple * a * t * t;
  }
  return static_cast<double>(acc);
}

// Zeros of f on (lo, hi) by sign changes on a uniform grid, refined by
// bisection to `tol`. Grid points where f is not finite are skipped.
inline std::vector<double> bisect_zeros(const std::function<double(double)>& f, double lo, double hi, int grid,
                                        double tol) {
  std::vector<double> zeros;
  double x0 = lo + (hi - lo) / grid, f0 = f(x0);
  for (int i = 2; i < grid; ++i) {
    const double x1 = lo + (hi - lo) * i / grid, f1 = f(x1);
    if (std::isfinite(f0) && std::isfinite(f1) && (f0 == 0 || (f0 < 0) != (f1 < 0))) {
      double a = x0, b = x1, fa = f0;
      while (b - a > tol) {
        const double mid = 0.5 * (a + b), fm = f(mid);
        if ((fm < 0) == (fa < 0)) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      zeros.push_back(0.5 * (a + b));
    }
    x0 = x1;
    f0 = f1;
  }
  return zeros;
}

}  // namespace oracle
