#include "biharm/decomposition.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <string>

namespace biharm {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

struct Spectrum {
  MatrixXd vectors;  // G-orthonormal eigenvectors in g coordinates
  VectorXd values;
};

// Eigen-decomposition of (ad H^)^2 restricted to an invariant block.
Spectrum block_spectrum(const MatrixXd& q, const MatrixXd& g, const MatrixXd& ad2, const char* label) {
  if (q.cols() == 0) return {MatrixXd(q.rows(), 0), VectorXd(0)};
  MatrixXd m = q.transpose() * g * ad2 * q;
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-9) throw StructuralError(std::string("(ad H)^2 is not symmetric on ") + label);
  m = 0.5 * (m + m.transpose());
  const double leak = (ad2 * q - q * m).cwiseAbs().maxCoeff();
  if (leak > 1e-9) throw StructuralError(std::string("(ad H)^2 does not preserve ") + label);
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(m);
  return {q * es.eigenvectors(), es.eigenvalues()};
}

// Columns of `s` whose eigenvalue is -k^2 a2 (k = 0, 1, 2).
MatrixXd cluster(const Spectrum& s, double a2, int k) {
  std::vector<Eigen::Index> picked;
  for (Eigen::Index i = 0; i < s.values.size(); ++i)
    if (std::abs(s.values[i] + k * k * a2) <= kClusterTolerance) picked.push_back(i);
  MatrixXd out(s.vectors.rows(), static_cast<Eigen::Index>(picked.size()));
  for (std::size_t j = 0; j < picked.size(); ++j) out.col(static_cast<Eigen::Index>(j)) = s.vectors.col(picked[j]);
  return out;
}

void check_pattern(const Spectrum& s, double a2, const char* label) {
  for (Eigen::Index i = 0; i < s.values.size(); ++i) {
    const double v = s.values[i];
    const bool ok = std::abs(v) <= kClusterTolerance || std::abs(v + a2) <= kClusterTolerance ||
                    std::abs(v + 4 * a2) <= kClusterTolerance;
    if (!ok)
      throw StructuralError(std::string("eigenvalue ") + std::to_string(v) + " on " + label +
                            " is not in {0, -a^2, -4a^2} with a^2 = " + std::to_string(a2));
  }
}

RootBlock partner_block(int multiple, const MatrixXd& first, const MatrixXd& ad_h, double alpha_h) {
  return {multiple, first, ad_h * first / (multiple * alpha_h)};
}

double max_abs(const MatrixXd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace

Eigen::MatrixXd orthonormal_image(const Eigen::MatrixXd& projector, const Eigen::MatrixXd& metric) {
  Eigen::ColPivHouseholderQR<MatrixXd> qr(projector);
  qr.setThreshold(1e-10);
  const Eigen::Index rank = qr.rank();
  const MatrixXd q = MatrixXd(qr.householderQ()).leftCols(rank);
  if (rank == 0) return q;
  const MatrixXd m = q.transpose() * metric * q;
  Eigen::LLT<MatrixXd> llt(m);
  if (llt.info() != Eigen::Success) throw StructuralError("-Killing is not positive definite on a block");
  const MatrixXd l = llt.matrixL();
  return l.triangularView<Eigen::Lower>().solve(q.transpose()).transpose();
}

int DecompositionData::dimension_sum() const {
  int sum = static_cast<int>(k0.cols() + v_km.cols() + v_mk.cols()) + 1;
  for (const auto& r : sigma) sum += 2 * static_cast<int>(r.first.cols());
  for (const auto& r : w) sum += 2 * static_cast<int>(r.first.cols());
  return sum;
}

DecompositionData decompose(const TriadBuild& build) {
  const auto& alg = build.alg;
  const int d = alg.dim();
  const MatrixXd& g = alg.metric();
  DecompositionData out{build, build.theta1.matrix(d), build.theta2.matrix(d), {}, 0, {}, {}, {}, {}, {}, {}, {},
                        {}, {}, {}};
  const MatrixXd id = MatrixXd::Identity(d, d);
  const MatrixXd &t1 = out.theta1, &t2 = out.theta2;
  out.kk = orthonormal_image((id + t1) * (id + t2) / 4, g);
  out.mm = orthonormal_image((id - t1) * (id - t2) / 4, g);
  out.km = orthonormal_image((id + t1) * (id - t2) / 4, g);
  out.mk = orthonormal_image((id - t1) * (id + t2) / 4, g);
  if (out.kk.cols() + out.mm.cols() + out.km.cols() + out.mk.cols() != d)
    throw StructuralError("joint eigenspaces of the involutions do not span g");

  VectorXd h(d);
  for (int a = 0; a < d; ++a) h[a] = to_double(build.h_raw[static_cast<std::size_t>(a)]);
  if ((t1 * h + h).norm() > 1e-12 || (t2 * h + h).norm() > 1e-12)
    throw StructuralError("generator of a is not in m1 & m2");
  const double hh = h.dot(g * h);
  if (!(hh > 0)) throw StructuralError("generator of a has nonpositive length");
  out.h_hat = h / std::sqrt(hh);

  const MatrixXd ad_h = alg.ad(out.h_hat);
  if (max_abs(g * ad_h + ad_h.transpose() * g) > 1e-9) throw StructuralError("ad H is not skew for -Killing");
  const MatrixXd ad2 = ad_h * ad_h;

  const Spectrum skk = block_spectrum(out.kk, g, ad2, "k1&k2");
  const Spectrum smm = block_spectrum(out.mm, g, ad2, "m1&m2");
  const Spectrum skm = block_spectrum(out.km, g, ad2, "k1&m2");
  const Spectrum smk = block_spectrum(out.mk, g, ad2, "m1&k2");

  double a2 = 0;
  for (const auto* s : {&skk, &smm, &skm, &smk})
    for (Eigen::Index i = 0; i < s->values.size(); ++i)
      if (std::abs(s->values[i]) > kClusterTolerance && (a2 == 0 || std::abs(s->values[i]) < a2))
        a2 = std::abs(s->values[i]);
  if (a2 == 0) throw StructuralError("a acts trivially on g");
  check_pattern(skk, a2, "k1&k2");
  check_pattern(smm, a2, "m1&m2");
  check_pattern(skm, a2, "k1&m2");
  check_pattern(smk, a2, "m1&k2");
  out.alpha_h = std::sqrt(a2);

  const MatrixXd centralizer = cluster(smm, a2, 0);
  if (centralizer.cols() != 1) throw StructuralError("a is not maximal abelian in m1&m2");
  out.k0 = cluster(skk, a2, 0);
  out.v_km = cluster(skm, a2, 0);
  out.v_mk = cluster(smk, a2, 0);

  for (int k : {1, 2}) {
    const MatrixXd s = cluster(skk, a2, k), x = cluster(skm, a2, k);
    if (cluster(smm, a2, k).cols() != s.cols()) throw StructuralError("dim k_lambda != dim m_lambda");
    if (cluster(smk, a2, k).cols() != x.cols()) throw StructuralError("dim V_perp(k1&m2) != dim V_perp(m1&k2)");
    if (s.cols() > 0) out.sigma.push_back(partner_block(k, s, ad_h, out.alpha_h));
    if (x.cols() > 0) out.w.push_back(partner_block(k, x, ad_h, out.alpha_h));
    (k == 1 ? out.mults.m1 : out.mults.m2) = static_cast<int>(s.cols());
    (k == 1 ? out.mults.n1 : out.mults.n2) = static_cast<int>(x.cols());
  }
  try {
    (void)out.triad();
  } catch (const std::invalid_argument& e) {
    throw StructuralError(std::string("recovered multiplicities fit no rank-one pattern: ") + e.what());
  }
  return out;
}

double adapted_basis_residual(const DecompositionData& d, double t) {
  const auto& alg = d.build.alg;
  const MatrixXd& g = alg.metric();
  const MatrixXd ad_h = alg.ad(d.h_hat);
  const MatrixXd rot = MatrixXd(t * ad_h).exp();
  const MatrixXd id = MatrixXd::Identity(d.dim(), d.dim());
  double worst = 0;
  auto note = [&](double r) { worst = std::max(worst, r); };

  auto check = [&](const RootBlock& r, const MatrixXd& off_first, const MatrixXd& off_second) {
    const double lh = r.multiple * d.alpha_h;  // <lambda, H^>
    const auto n = r.first.cols();
    note(max_abs(r.first.transpose() * g * r.first - MatrixXd::Identity(n, n)));
    note(max_abs(r.second.transpose() * g * r.second - MatrixXd::Identity(n, n)));
    note(max_abs(off_first * r.first));
    note(max_abs(off_second * r.second));
    note(max_abs(ad_h * r.first - lh * r.second));
    note(max_abs(ad_h * r.second + lh * r.first));
    note(max_abs(rot * r.first - (std::cos(lh * t) * r.first + std::sin(lh * t) * r.second)));
    note(max_abs(rot * r.second - (-std::sin(lh * t) * r.first + std::cos(lh * t) * r.second)));
    for (Eigen::Index i = 0; i < n; ++i) {
      const VectorXd st = alg.ad(VectorXd(r.first.col(i))) * r.second.col(i);
      note((st - lh * d.h_hat).cwiseAbs().maxCoeff());
    }
  };
  // Residual of membership in a joint eigenspace is (I - P) v.
  auto outside = [&](int e1, int e2) { return MatrixXd(id - (id + e1 * d.theta1) * (id + e2 * d.theta2) / 4); };
  for (const auto& r : d.sigma) check(r, outside(1, 1), outside(-1, -1));   // S in k1&k2, T in m1&m2
  for (const auto& r : d.w) check(r, outside(1, -1), outside(-1, 1));       // X in k1&m2, Y in m1&k2

  // [T_{l,i}, S_{m,j}]^perp = -delta delta m, perp being the a component.
  for (const auto& rl : d.sigma)
    for (const auto& rm : d.sigma)
      for (Eigen::Index i = 0; i < rl.second.cols(); ++i)
        for (Eigen::Index j = 0; j < rm.first.cols(); ++j) {
          const VectorXd br = alg.ad(VectorXd(rl.second.col(i))) * rm.first.col(j);
          const double perp = d.h_hat.dot(g * br);
          const double want = (&rl == &rm && i == j) ? -rm.multiple * d.alpha_h : 0.0;
          note(std::abs(perp - want));
        }
  return worst;
}

}  // namespace biharm
