#include "biharm/oracle.hpp"

#include "biharm/catalog.hpp"
#include "biharm/solver.hpp"
#include "parallel_for.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace biharm {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

double rel_dev(double x, double y) { return std::abs(x - y) / std::max(std::abs(y), 1.0); }

}  // namespace

double NumericSff::eval(const VectorXd& u, const VectorXd& v, const MatrixXd& metric) const {
  const VectorXd cu = tangent.transpose() * metric * u, cv = tangent.transpose() * metric * v;
  return cu.dot(b * cv);
}

NumericSff second_fundamental_form_numeric(const DecompositionData& d, double s, bool dual) {
  const SymmetricTriad1D triad = d.triad();
  if (const auto wall = singular_wall(triad, s))
    throw std::domain_error("singular point s=" + std::to_string(s) + ": " + *wall);

  const auto& alg = d.build.alg;
  const MatrixXd& g = alg.metric();
  const int n = d.dim();
  const MatrixXd id = MatrixXd::Identity(n, n);
  const MatrixXd& theta_space = dual ? d.theta2 : d.theta1;
  const MatrixXd& theta_acting = dual ? d.theta1 : d.theta2;

  // Translate the orbit back to the origin: its group becomes Ad(exp(-H)) K.
  const VectorXd h = (s / d.alpha_h) * d.h_hat;
  const MatrixXd shift = MatrixXd(-alg.ad(h)).exp();
  const MatrixXd acting = shift * orthonormal_image((id + theta_acting) / 2, g);
  const MatrixXd p_m = (id - theta_space) / 2, p_k = (id + theta_space) / 2;

  const MatrixXd images = p_m * acting;
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(images.transpose() * g * images);
  const Eigen::Index m_dim = static_cast<Eigen::Index>(std::lround(p_m.trace()));
  const Eigen::Index r = m_dim - 1;  // hypersurface
  const Eigen::Index total = es.eigenvalues().size();
  if (r < 1 || r > total) throw StructuralError("orbit dimension does not fit a hypersurface");
  const double top = es.eigenvalues()[total - 1];
  if (total > r && es.eigenvalues()[total - r - 1] > 1e-10 * top)
    throw StructuralError("orbit is not a hypersurface: tangent images span all of m");
  if (es.eigenvalues()[total - r] <= 1e-12 * top) throw std::domain_error("orbit is singular at this angle");

  const MatrixXd coeffs = es.eigenvectors().rightCols(r);
  const VectorXd inv_sqrt = es.eigenvalues().tail(r).cwiseSqrt().cwiseInverse();
  NumericSff out;
  out.s = s;
  out.tangent = images * coeffs * inv_sqrt.asDiagonal();
  const MatrixXd lifts = acting * coeffs * inv_sqrt.asDiagonal();

  // Normal line: what is left of m after removing the tangent space.
  const MatrixXd q_m = orthonormal_image(p_m, g);
  const MatrixXd rest = q_m - out.tangent * (out.tangent.transpose() * g * q_m);
  Eigen::SelfAdjointEigenSolver<MatrixXd> ns(rest.transpose() * g * rest);
  const Eigen::Index last = ns.eigenvalues().size() - 1;
  out.normal = rest * ns.eigenvectors().col(last) / std::sqrt(ns.eigenvalues()[last]);
  const double along = out.normal.dot(g * d.h_hat);
  if (along < 0) out.normal = -out.normal;
  if (std::abs(std::abs(along) - 1) > 1e-8) throw StructuralError("normal space of the orbit is not a");

  // B(w_i, w_j) = <[(V_j)_k, w_i], normal>.
  const MatrixXd lifts_k = p_k * lifts;
  const VectorXd g_normal = g * out.normal;
  out.b.resize(r, r);
  for (Eigen::Index j = 0; j < r; ++j) out.b.col(j) = (alg.ad(VectorXd(lifts_k.col(j))) * out.tangent).transpose() * g_normal;
  out.symmetry_residual = (out.b - out.b.transpose()).cwiseAbs().maxCoeff();
  out.b_norm_sq = out.b.squaredNorm();
  out.tension = out.b.trace() * out.normal;
  out.tension_h = out.tension.dot(g * d.h_hat);
  return out;
}

double bracket_formula_residual(const DecompositionData& d, const NumericSff& sff) {
  const auto& alg = d.build.alg;
  const MatrixXd& g = alg.metric();
  const double s = sff.s;
  const double orient = sff.normal.dot(g * d.h_hat);
  double worst = 0;
  auto bracket_perp = [&](const VectorXd& x, const VectorXd& y) { return d.h_hat.dot(g * (alg.ad(x) * y)); };
  auto compare = [&](const VectorXd& u, const VectorXd& v, double want) {
    worst = std::max(worst, rel_dev(sff.eval(u, v, g) * orient, want));
  };
  auto tangent_gap = [&](const VectorXd& u) {
    worst = std::max(worst, (u - sff.tangent * (sff.tangent.transpose() * g * u)).cwiseAbs().maxCoeff());
  };

  for (const auto& rl : d.sigma)
    for (Eigen::Index i = 0; i < rl.second.cols(); ++i) tangent_gap(rl.second.col(i));
  for (const auto& wa : d.w)
    for (Eigen::Index i = 0; i < wa.second.cols(); ++i) tangent_gap(wa.second.col(i));
  for (Eigen::Index i = 0; i < d.v_mk.cols(); ++i) tangent_gap(d.v_mk.col(i));

  // (1) B(T_l, T_m) = cot<m,H> [T_l, S_m]^perp
  for (const auto& rl : d.sigma)
    for (const auto& rm : d.sigma)
      for (Eigen::Index i = 0; i < rl.second.cols(); ++i)
        for (Eigen::Index j = 0; j < rm.second.cols(); ++j) {
          const double cot = 1.0 / std::tan(rm.multiple * s);
          compare(rl.second.col(i), rm.second.col(j), cot * bracket_perp(rl.second.col(i), rm.first.col(j)));
        }
  // (2) B(Y_a, Y_b) = -tan<b,H> [Y_a, X_b]^perp
  for (const auto& wa : d.w)
    for (const auto& wb : d.w)
      for (Eigen::Index i = 0; i < wa.second.cols(); ++i)
        for (Eigen::Index j = 0; j < wb.second.cols(); ++j)
          compare(wa.second.col(i), wb.second.col(j),
                  -std::tan(wb.multiple * s) * bracket_perp(wa.second.col(i), wb.first.col(j)));
  // (3) B(Y1, Y2) = 0 on V(m1&k2)
  for (Eigen::Index i = 0; i < d.v_mk.cols(); ++i)
    for (Eigen::Index j = 0; j < d.v_mk.cols(); ++j) compare(d.v_mk.col(i), d.v_mk.col(j), 0.0);
  // (4) B(T, Y2) = 0 and (5) B(Y_a, Y2) = 0
  for (Eigen::Index j = 0; j < d.v_mk.cols(); ++j) {
    for (const auto& rl : d.sigma)
      for (Eigen::Index i = 0; i < rl.second.cols(); ++i) compare(rl.second.col(i), d.v_mk.col(j), 0.0);
    for (const auto& wa : d.w)
      for (Eigen::Index i = 0; i < wa.second.cols(); ++i) compare(wa.second.col(i), d.v_mk.col(j), 0.0);
  }
  // (6) B(T_l, Y_b) = -tan<b,H> [T_l, X_b]^perp
  for (const auto& rl : d.sigma)
    for (const auto& wb : d.w)
      for (Eigen::Index i = 0; i < rl.second.cols(); ++i)
        for (Eigen::Index j = 0; j < wb.second.cols(); ++j)
          compare(rl.second.col(i), wb.second.col(j),
                  -std::tan(wb.multiple * s) * bracket_perp(rl.second.col(i), wb.first.col(j)));
  return worst;
}

Multiplicities catalog_multiplicities(const std::string& case_name, int b, int c) {
  const char* row = case_name == "so" ? "1-1" : case_name == "su" ? "2-2" : nullptr;
  if (!row) throw std::invalid_argument("unknown oracle case '" + case_name + "' (expected so or su)");
  for (const auto& fam : catalog_families())
    if (fam.theorem_case == row) {
      const std::array<std::int64_t, 3> at{b, c, 0};
      return {static_cast<int>(fam.mults[0].eval(at)), static_cast<int>(fam.mults[1].eval(at)),
              static_cast<int>(fam.mults[2].eval(at)), static_cast<int>(fam.mults[3].eval(at))};
    }
  throw std::logic_error("catalog row missing");
}

OracleReport verify_closed_forms(const TriadBuild& build, int samples, double tolerance, Exec exec,
                                 std::uint64_t seed) {
  OracleReport report;
  report.case_name = build.case_name;
  report.b = build.b;
  report.c = build.c;
  report.tolerance = tolerance;
  report.dim = build.alg.dim();
  report.catalog = catalog_multiplicities(build.case_name, build.b, build.c);
  try {
    if (auto bad = build.alg.jacobi_check(200, seed); !bad.empty()) throw StructuralError(bad);
    const DecompositionData d = decompose(build);
    const SymmetricTriad1D triad = d.triad();
    report.recovered = d.mults;
    report.recovered_alpha_norm_sq = d.alpha_norm_sq();
    report.expected_alpha_norm_sq = to_double(norm_alpha_sq(triad));
    report.adapted_basis_residual = adapted_basis_residual(d);
    report.dimension_sum = d.dimension_sum();
    report.max_rel_dev = rel_dev(report.recovered_alpha_norm_sq, report.expected_alpha_norm_sq);

    const auto grid = cell_grid(triad, samples);
    report.samples.resize(grid.size());
    detail::for_each_index(grid.size(), exec, [&](std::size_t i) {
      const double s = grid[i];
      const NumericSff sff = second_fundamental_form_numeric(d, s);
      OracleSample& out = report.samples[i];
      out.s = s;
      out.b_numeric = sff.b_norm_sq;
      out.b_closed = b_norm_sq(triad, s);
      out.tension_numeric = sff.tension_h;
      out.tension_closed = tension_coeff(triad, s) * d.alpha_h;
      out.rel_dev = std::max(rel_dev(out.b_numeric, out.b_closed), rel_dev(out.tension_numeric, out.tension_closed));
      out.bracket_residual = std::max(bracket_formula_residual(d, sff), sff.symmetry_residual);
    });
  } catch (const StructuralError& e) {
    report.error = std::string("structural error: ") + e.what();
  } catch (const std::domain_error& e) {
    report.error = std::string("domain error: ") + e.what();
  }

  bool brackets_ok = true;
  for (const auto& smp : report.samples) {
    report.max_rel_dev = std::max(report.max_rel_dev, smp.rel_dev);
    brackets_ok = brackets_ok && smp.bracket_residual <= tolerance;
  }
  report.pass = report.error.empty() && report.recovered == report.catalog && !report.samples.empty() &&
                report.max_rel_dev <= tolerance && brackets_ok && report.adapted_basis_residual <= 1e-10 &&
                report.dimension_sum == report.dim;
  return report;
}

DualityReport verify_duality(const DecompositionData& d, double s) {
  const NumericSff orbit = second_fundamental_form_numeric(d, s, false);
  const NumericSff dual = second_fundamental_form_numeric(d, s, true);
  const VectorXd diff = dual.tension - orbit.tension;
  return {s, std::abs(dual.b_norm_sq - orbit.b_norm_sq), std::sqrt(std::max(0.0, diff.dot(d.build.alg.metric() * diff)))};
}

}  // namespace biharm
