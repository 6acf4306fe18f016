#include "biharm/symmetric_triad.hpp"

#include <algorithm>
#include <stdexcept>

namespace biharm {

namespace {

std::vector<RootVector> set_minus(const std::vector<RootVector>& a, const std::vector<RootVector>& b) {
  std::vector<RootVector> out;
  for (const auto& v : a)
    if (!contains(b, v)) out.push_back(v);
  return out;
}

std::vector<RootVector> intersect(const std::vector<RootVector>& a, const std::vector<RootVector>& b) {
  std::vector<RootVector> out;
  for (const auto& v : a)
    if (contains(b, v)) out.push_back(v);
  return out;
}

std::string failed_subreport(const ValidationReport& r) {
  const auto f = r.first_failure();
  return f ? f->condition + ": " + f->witness : std::string{};
}

// Conditions (5) and (6) share a shape: for alpha in W and lambda in `from`,
// the Cartan integer is odd iff s_alpha(lambda) lands in `target`.
std::string parity_witness(const AmbientSpace& space, const std::vector<RootVector>& w,
                           const std::vector<RootVector>& from, const std::vector<RootVector>& target) {
  for (const auto& alpha : w) {
    for (const auto& lambda : from) {
      const bool odd = is_odd_integer(cartan_integer(space, alpha, lambda));
      const bool lands = contains(target, reflect(space, alpha, lambda));
      if (odd != lands) {
        return "alpha=" + alpha.str() + ", lambda=" + lambda.str() + ": 2<a,l>/<a,a> " +
               (odd ? "odd" : "even") + " but s_a(l) " + (lands ? "in" : "not in") + " target set";
      }
    }
  }
  return {};
}

}  // namespace

ValidationReport validate_symmetric_triad(const SymmetricTriadData& t) {
  ValidationReport report;
  const auto& space = t.sigma_tilde.space();
  const auto& full = t.sigma_tilde.roots();

  {
    const auto sub = validate_root_system(t.sigma_tilde);
    const bool irreducible = t.sigma_tilde.is_irreducible();
    std::string witness = failed_subreport(sub);
    if (witness.empty() && !irreducible) witness = "full root system is reducible";
    report.add("(1)", sub.passed() && irreducible, witness);
  }
  {
    std::string witness;
    bool ok = true;
    if (t.sigma.empty()) {
      ok = false;
      witness = "Sigma is empty";
    } else {
      try {
        const auto sub = validate_root_system(RootSystem(space, t.sigma));
        ok = sub.passed();
        witness = failed_subreport(sub);
      } catch (const std::invalid_argument& e) {
        ok = false;
        witness = e.what();
      }
    }
    report.add("(2)", ok, witness);
  }
  {
    std::string witness;
    for (const auto& a : t.w)
      if (!contains(t.w, -a)) {
        witness = "-" + a.str() + " missing from W";
        break;
      }
    if (witness.empty()) {
      std::vector<RootVector> uni = t.sigma;
      for (const auto& a : t.w)
        if (!contains(uni, a)) uni.push_back(a);
      const bool same = uni.size() == full.size() &&
                        std::all_of(full.begin(), full.end(), [&](const auto& v) { return contains(uni, v); });
      if (!same) witness = "Sigma union W differs from the full root system";
    }
    report.add("(3)", witness.empty(), witness);
  }
  {
    const auto common = intersect(t.sigma, t.w);
    std::string witness;
    if (common.empty()) {
      witness = "Sigma and W are disjoint";
    } else {
      Rational l2 = 0;
      for (const auto& a : common) l2 = std::max(l2, inner(space, a, a));
      for (const auto& a : full) {
        const bool short_root = inner(space, a, a) <= l2;
        if (short_root != contains(common, a)) {
          witness = a.str() + (short_root ? " is short but not in Sigma cap W" : " is long but in Sigma cap W");
          break;
        }
      }
    }
    report.add("(4)", witness.empty(), witness);
  }
  {
    const auto w = parity_witness(space, t.w, set_minus(t.sigma, t.w), set_minus(t.w, t.sigma));
    report.add("(5)", w.empty(), w);
  }
  {
    const auto w = parity_witness(space, t.w, set_minus(t.w, t.sigma), set_minus(t.sigma, t.w));
    report.add("(6)", w.empty(), w);
  }
  return report;
}

ValidationReport validate_multiplicities(const SymmetricTriadData& t, const MultiplicityMap& mm) {
  ValidationReport report;
  const auto& space = t.sigma_tilde.space();
  const auto& full = t.sigma_tilde.roots();
  if (mm.m.size() != full.size() || mm.n.size() != full.size())
    throw std::invalid_argument("multiplicity map must have one entry per root");

  auto index_of = [&](const RootVector& v) -> std::ptrdiff_t {
    const auto it = std::find(full.begin(), full.end(), v);
    return it == full.end() ? -1 : it - full.begin();
  };
  auto m_at = [&](std::ptrdiff_t i) { return i < 0 ? 0 : mm.m[static_cast<std::size_t>(i)]; };
  auto n_at = [&](std::ptrdiff_t i) { return i < 0 ? 0 : mm.n[static_cast<std::size_t>(i)]; };

  {
    std::string witness;
    for (std::size_t i = 0; i < full.size() && witness.empty(); ++i) {
      if (mm.m[i] < 0 || mm.n[i] < 0) witness = "negative multiplicity at " + full[i].str();
      const auto j = index_of(-full[i]);
      if (m_at(j) != mm.m[i] || n_at(j) != mm.n[i]) witness = "m or n differs at +/-" + full[i].str();
    }
    report.add("(1-1)", witness.empty(), witness);
  }
  {
    std::string witness;
    for (std::size_t i = 0; i < full.size() && witness.empty(); ++i)
      if ((mm.m[i] > 0) != contains(t.sigma, full[i]))
        witness = "m(" + full[i].str() + ")=" + std::to_string(mm.m[i]) + " disagrees with Sigma membership";
    report.add("(1-2)", witness.empty(), witness);
  }
  {
    std::string witness;
    for (std::size_t i = 0; i < full.size() && witness.empty(); ++i)
      if ((mm.n[i] > 0) != contains(t.w, full[i]))
        witness = "n(" + full[i].str() + ")=" + std::to_string(mm.n[i]) + " disagrees with W membership";
    report.add("(1-3)", witness.empty(), witness);
  }
  {
    // Invariance under the generators s_mu, mu in Sigma, suffices for W(Sigma).
    std::string witness;
    for (const auto& mu : t.sigma) {
      for (std::size_t i = 0; i < full.size() && witness.empty(); ++i) {
        const auto j = index_of(reflect(space, mu, full[i]));
        if (contains(t.sigma, full[i]) && (j < 0 || m_at(j) != mm.m[i]))
          witness = "m not invariant under s_" + mu.str() + " at " + full[i].str();
        if (contains(t.w, full[i]) && (j < 0 || n_at(j) != mm.n[i]))
          witness = "n not invariant under s_" + mu.str() + " at " + full[i].str();
      }
      if (!witness.empty()) break;
    }
    report.add("(2)", witness.empty(), witness);
  }
  {
    std::string witness;
    for (const auto& nu : full) {
      for (std::size_t i = 0; i < full.size() && witness.empty(); ++i) {
        const auto j = index_of(reflect(space, nu, full[i]));
        if (j < 0 || m_at(j) + n_at(j) != mm.m[i] + mm.n[i])
          witness = "m+n not invariant under s_" + nu.str() + " at " + full[i].str();
      }
      if (!witness.empty()) break;
    }
    report.add("(3)", witness.empty(), witness);
  }
  {
    std::string witness;
    const auto common = intersect(t.sigma, t.w);
    for (const auto& lambda : common) {
      const auto li = index_of(lambda);
      for (const auto& alpha : t.w) {
        const Rational k = cartan_integer(space, alpha, lambda);
        const auto j = index_of(reflect(space, alpha, lambda));
        const int expected = is_odd_integer(k) ? n_at(j) : m_at(j);
        if (m_at(li) != expected) {
          witness = "lambda=" + lambda.str() + ", alpha=" + alpha.str() + ": 2<a,l>/<a,a>=" + to_string(k) +
                    " requires m(lambda)=" + std::string(is_odd_integer(k) ? "n" : "m") +
                    "(s_a(lambda))=" + std::to_string(expected) + ", got " + std::to_string(m_at(li));
          break;
        }
      }
      if (!witness.empty()) break;
    }
    report.add("(4)", witness.empty(), witness);
  }
  return report;
}

}  // namespace biharm
