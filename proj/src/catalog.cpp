#include "biharm/catalog.hpp"

#include <cctype>
#include <stdexcept>

namespace biharm {

namespace {

using P = ParamPolynomial;
const P b = P::var(P::B);
const P c = P::var(P::C);
const P q = P::var(P::Q);

std::array<std::int64_t, 3> as_point(const ParamValues& v) {
  std::array<std::int64_t, 3> at{0, 0, 0};
  if (auto it = v.find("b"); it != v.end()) at[P::B] = it->second;
  if (auto it = v.find("c"); it != v.end()) at[P::C] = it->second;
  if (auto it = v.find("q"); it != v.end()) at[P::Q] = it->second;
  return at;
}

// Tiny evaluator for + - * over integers and the names b, c, q.
class ExprEval {
 public:
  ExprEval(const std::string& s, const ParamValues& v) : s_(s), v_(v) {}
  long parse() {
    const long r = sum();
    if (pos_ != s_.size()) throw std::invalid_argument("bad group expression '" + s_ + "'");
    return r;
  }

 private:
  long sum() {
    long acc = product();
    while (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
      const char op = s_[pos_++];
      const long rhs = product();
      acc = op == '+' ? acc + rhs : acc - rhs;
    }
    return acc;
  }
  long product() {
    long acc = atom();
    while (pos_ < s_.size() && (s_[pos_] == '*' || std::isalpha(static_cast<unsigned char>(s_[pos_]))))
      acc *= (s_[pos_] == '*' ? (++pos_, atom()) : atom());
    return acc;
  }
  long atom() {
    if (pos_ >= s_.size()) throw std::invalid_argument("bad group expression '" + s_ + "'");
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      long n = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) n = n * 10 + (s_[pos_++] - '0');
      return n;
    }
    const std::string name(1, s_[pos_++]);
    const auto it = v_.find(name);
    if (it == v_.end()) throw std::invalid_argument("unbound parameter '" + name + "'");
    return it->second;
  }

  const std::string& s_;
  const ParamValues& v_;
  std::size_t pos_ = 0;
};

CatalogFamily family(std::string theorem_case, std::string source, std::string g, std::string k1, std::string k2,
                     TriadKind kind, std::vector<ParamSpec> params, std::array<P, 4> mults,
                     std::optional<P> nonzero = std::nullopt) {
  return {std::move(theorem_case), std::move(source), std::move(g), std::move(k1), std::move(k2),
          kind, std::move(params), std::move(mults), std::move(nonzero)};
}

std::vector<CatalogFamily> build_families() {
  using K = TriadKind;
  const ParamSpec b1{P::B, 1}, b0{P::B, 0}, c2{P::C, 2}, q2{P::Q, 2};
  std::vector<CatalogFamily> f;
  f.push_back(family("1-1", "table III-B1", "SO({1+b+c})", "SO({1+b}) × SO({c})", "SO({b+c})", K::IIIB1, {b1, c2},
                     {c - 1, 0, b, 0}, c - 1 - b));
  f.push_back(family("1-2", "table III-B1", "SU(4)", "S(U(2) × U(2))", "Sp(2)", K::IIIB1, {}, {3, 0, 1, 0}));
  f.push_back(family("1-3", "table III-B1", "Sp(2)", "U(2)", "Sp(1) × Sp(1)", K::IIIB1, {}, {1, 0, 2, 0}));
  f.push_back(family("2-1", "table I-BC1", "SO({2+2q})", "SO(2) × SO({2q})", "U({1+q})", K::IBC1, {q2},
                     {2 * q - 2, 1, 2 * q - 2, 0}));
  f.push_back(family("2-2", "table I-BC1; b=0 is the isotropy action on CP^c", "SU({1+b+c})",
                     "S(U({1+b}) × U({c}))", "S(U(1) × U({b+c}))", K::IBC1, {b0, c2}, {2 * c - 2, 1, 2 * b, 0}));
  f.push_back(family("2-3", "table I-BC1; b=0 is the isotropy action on HP^c", "Sp({1+b+c})",
                     "Sp({1+b}) × Sp({c})", "Sp(1) × Sp({b+c})", K::IBC1, {b0, c2}, {4 * c - 4, 3, 4 * b, 0}));
  f.push_back(family("2-4", "table I-BC1", "SO(8)", "U(4)", "U(4)'", K::IBC1, {}, {4, 1, 1, 0}));
  f.push_back(family("2-5", "table III-BC1", "E6", "SO(10)·U(1)", "F4", K::IIIBC1, {}, {8, 7, 8, 1}));
  f.push_back(family("2-6", "isotropy action on S^q", "SO({1+q})", "SO({q})", "SO({q})", K::IsoA1, {q2},
                     {q - 1, 0, 0, 0}));
  f.push_back(family("2-7", "isotropy action on OP^2", "F4", "Spin(9)", "Spin(9)", K::IsoBC1, {}, {8, 7, 0, 0}));
  f.push_back(family("3-1", "table III-B1 with b = c-1", "SO({2c})", "SO({c}) × SO({c})", "SO({2c-1})", K::IIIB1, {c2},
                     {c - 1, 0, c - 1, 0}));
  f.push_back(family("3-2", "table III-B1", "SU(4)", "Sp(2)", "SO(4)", K::IIIB1, {}, {2, 0, 2, 0}));
  f.push_back(family("3-3", "table II-BC1", "SO(6)", "U(3)", "SO(3) × SO(3)", K::IIBC1, {}, {2, 0, 2, 1}));
  f.push_back(family("3-4", "table II-BC1", "SU({1+q})", "SO({1+q})", "S(U(1) × U({q}))", K::IIBC1, {q2},
                     {q - 1, 0, q - 1, 1}));
  f.push_back(family("3-5", "table III-BC1", "SU({2+2q})", "S(U(2) × U({2q}))", "Sp({1+q})", K::IIIBC1, {q2},
                     {4 * q - 4, 3, 4 * q - 4, 1}));
  f.push_back(family("3-6", "table III-BC1", "Sp({1+q})", "U({1+q})", "Sp(1) × Sp({q})", K::IIIBC1, {q2},
                     {2 * q - 2, 1, 2 * q - 2, 2}));
  f.push_back(family("3-7", "table III-BC1", "E6", "SU(6)·SU(2)", "F4", K::IIIBC1, {}, {8, 3, 8, 5}));
  f.push_back(family("3-8", "table III-BC1", "F4", "Sp(3)·Sp(1)", "Spin(9)", K::IIIBC1, {}, {4, 3, 4, 4}));
  return f;
}

void enumerate(const CatalogFamily& fam, std::size_t i, int max_param, ParamValues& current,
               std::vector<ParamValues>& out) {
  if (i == fam.params.size()) {
    out.push_back(current);
    return;
  }
  const auto& param = fam.params[i];
  for (int v = param.min; v <= max_param; ++v) {
    current[param_name(param.var)] = v;
    enumerate(fam, i + 1, max_param, current, out);
  }
  current.erase(param_name(param.var));
}

}  // namespace

std::string param_name(ParamPolynomial::Var v) {
  switch (v) {
    case P::B: return "b";
    case P::C: return "c";
    case P::Q: return "q";
  }
  throw std::logic_error("unknown parameter");
}

int CatalogFamily::group() const { return theorem_case.at(0) - '0'; }

bool CatalogFamily::admits(const ParamValues& values) const {
  for (const auto& param : params) {
    const auto it = values.find(param_name(param.var));
    if (it == values.end() || it->second < param.min) return false;
  }
  return !nonzero || nonzero->eval(as_point(values)) != 0;
}

std::string render_group(const std::string& tmpl, const ParamValues* values) {
  std::string out;
  for (std::size_t i = 0; i < tmpl.size(); ++i) {
    if (tmpl[i] != '{') {
      out += tmpl[i];
      continue;
    }
    const auto close = tmpl.find('}', i);
    if (close == std::string::npos) throw std::invalid_argument("unterminated expression in '" + tmpl + "'");
    const std::string expr = tmpl.substr(i + 1, close - i - 1);
    out += values ? std::to_string(ExprEval(expr, *values).parse()) : expr;
    i = close;
  }
  return out;
}

const std::vector<CatalogFamily>& catalog_families() {
  static const std::vector<CatalogFamily> families = build_families();
  return families;
}

std::vector<CatalogEntry> instantiate(const CatalogFamily& fam, int max_param) {
  std::vector<ParamValues> points;
  ParamValues current;
  enumerate(fam, 0, max_param, current, points);
  std::vector<CatalogEntry> out;
  for (const auto& pv : points)
    if (auto e = instantiate_at(fam, pv)) out.push_back(std::move(*e));
  return out;
}

std::optional<CatalogEntry> instantiate_at(const CatalogFamily& fam, const ParamValues& values) {
  ParamValues pv;
  for (const auto& param : fam.params) {
    const auto it = values.find(param_name(param.var));
    if (it == values.end()) return std::nullopt;
    pv.insert(*it);
  }
  if (!fam.admits(pv)) return std::nullopt;
  const auto at = as_point(pv);
  const Multiplicities m{static_cast<int>(fam.mults[0].eval(at)), static_cast<int>(fam.mults[1].eval(at)),
                         static_cast<int>(fam.mults[2].eval(at)), static_cast<int>(fam.mults[3].eval(at))};
  return CatalogEntry{render_group(fam.group_g, &pv), render_group(fam.group_k1, &pv),
                      render_group(fam.group_k2, &pv), pv, SymmetricTriad1D::reduced(fam.kind, m),
                      fam.theorem_case, fam.source};
}

const CatalogFamily& find_family(const std::string& theorem_case) {
  for (const auto& fam : catalog_families())
    if (fam.theorem_case == theorem_case) return fam;
  throw std::invalid_argument("no catalog case '" + theorem_case + "'");
}

std::vector<CatalogEntry> catalog(int max_param) {
  std::vector<CatalogEntry> out;
  for (const auto& fam : catalog_families()) {
    auto rows = instantiate(fam, max_param);
    out.insert(out.end(), rows.begin(), rows.end());
  }
  return out;
}

}  // namespace biharm
