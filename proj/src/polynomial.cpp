#include "biharm/polynomial.hpp"

#include <algorithm>

namespace biharm {

ParamPolynomial::ParamPolynomial(std::int64_t constant) {
  if (constant != 0) terms_[{0, 0, 0}] = constant;
}

ParamPolynomial ParamPolynomial::var(Var v) {
  ParamPolynomial p;
  Exponents e{0, 0, 0};
  e[v] = 1;
  p.terms_[e] = 1;
  return p;
}

void ParamPolynomial::prune() {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

ParamPolynomial operator+(const ParamPolynomial& a, const ParamPolynomial& b) {
  ParamPolynomial out = a;
  for (const auto& [e, c] : b.terms_) out.terms_[e] += c;
  out.prune();
  return out;
}

ParamPolynomial ParamPolynomial::operator-() const {
  ParamPolynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

ParamPolynomial operator-(const ParamPolynomial& a, const ParamPolynomial& b) { return a + (-b); }

ParamPolynomial operator*(const ParamPolynomial& a, const ParamPolynomial& b) {
  ParamPolynomial out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      ParamPolynomial::Exponents e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
      out.terms_[e] += ca * cb;
    }
  out.prune();
  return out;
}

std::int64_t ParamPolynomial::constant_term() const {
  const auto it = terms_.find({0, 0, 0});
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t ParamPolynomial::eval(const std::array<std::int64_t, 3>& at) const {
  std::int64_t acc = 0;
  for (const auto& [e, c] : terms_) {
    std::int64_t term = c;
    for (int v = 0; v < 3; ++v)
      for (int k = 0; k < e[v]; ++k) term *= at[v];
    acc += term;
  }
  return acc;
}

ParamPolynomial ParamPolynomial::shifted(const std::array<std::int64_t, 3>& offset) const {
  std::array<ParamPolynomial, 3> moved;
  for (int v = 0; v < 3; ++v) moved[v] = var(static_cast<Var>(v)) + ParamPolynomial(offset[v]);
  ParamPolynomial out;
  for (const auto& [e, c] : terms_) {
    ParamPolynomial term(c);
    for (int v = 0; v < 3; ++v)
      for (int k = 0; k < e[v]; ++k) term = term * moved[v];
    out = out + term;
  }
  return out;
}

int ParamPolynomial::orthant_sign() const {
  const std::int64_t c0 = constant_term();
  if (c0 == 0) return 0;
  const int s = c0 > 0 ? 1 : -1;
  const bool uniform = std::all_of(terms_.begin(), terms_.end(), [&](const auto& kv) { return kv.second * s >= 0; });
  return uniform ? s : 0;
}

std::string ParamPolynomial::str() const {
  if (terms_.empty()) return "0";
  static constexpr const char* names[] = {"b", "c", "q"};
  std::string s;
  // Highest degree first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool constant = e == Exponents{0, 0, 0};
    std::int64_t mag = c < 0 ? -c : c;
    s += s.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    if (mag != 1 || constant) s += std::to_string(mag);
    for (int v = 0; v < 3; ++v) {
      if (e[v] == 0) continue;
      s += names[v];
      if (e[v] > 1) s += "^" + std::to_string(e[v]);
    }
  }
  return s;
}

}  // namespace biharm
