#include "biharm/oracle.hpp"
#include "biharm/solver.hpp"

#include <doctest.h>

#include <numbers>

using namespace biharm;

namespace {

// Re tr(XY) of two Gaussian-integer matrices.
std::int64_t re_trace(const GaussMatrix& x, const GaussMatrix& y) {
  std::int64_t acc = 0;
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) acc += x(i, k).re * y(k, i).re - x(i, k).im * y(k, i).im;
  return acc;
}

}  // namespace

TEST_SUITE("lie_algebra") {
  TEST_CASE("dimensions and names") {
    CHECK(MatrixLieAlgebra(MatrixFamily::SO, 5).dim() == 10);
    CHECK(MatrixLieAlgebra(MatrixFamily::SU, 4).dim() == 15);
    const MatrixLieAlgebra so4(MatrixFamily::SO, 4);
    CHECK(so4.name(so4.index_of_a(0, 1)) == "A_1^2");
  }

  TEST_CASE("Killing form of so(4) from structure constants") {
    const MatrixLieAlgebra so4(MatrixFamily::SO, 4);
    const int a12 = so4.index_of_a(0, 1);
    CHECK(so4.killing()[a12][a12] == Rational(-4));
  }

  TEST_CASE("Killing form against the trace shortcuts, used only as a cross-check") {
    for (int n : {3, 5}) {
      const MatrixLieAlgebra so(MatrixFamily::SO, n);
      for (int a = 0; a < so.dim(); ++a)
        for (int b = 0; b < so.dim(); ++b)
          CHECK(so.killing()[a][b] == Rational((n - 2) * re_trace(so.basis(a), so.basis(b))));
    }
    const MatrixLieAlgebra su3(MatrixFamily::SU, 3);
    for (int a = 0; a < su3.dim(); ++a)
      for (int b = 0; b < su3.dim(); ++b)
        CHECK(su3.killing()[a][b] == Rational(2 * 3 * re_trace(su3.basis(a), su3.basis(b))));
  }

  TEST_CASE("Killing form is symmetric, negative definite and involution invariant") {
    const TriadBuild build = build_su_triad(1, 2);
    const auto& k = build.alg.killing();
    const int d = build.alg.dim();
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) CHECK(k[a][b] == k[b][a]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(build.alg.metric());
    CHECK(es.eigenvalues().minCoeff() > 0);
    for (const auto* th : {&build.theta1, &build.theta2}) {
      const Eigen::MatrixXd t = th->matrix(d);
      CHECK((t.transpose() * build.alg.metric() * t - build.alg.metric()).cwiseAbs().maxCoeff() < 1e-12);
    }
  }

  TEST_CASE("killing_form recomputes the stored form") {
    const MatrixLieAlgebra su3(MatrixFamily::SU, 3);
    CHECK(killing_form(su3, Exec::Serial) == su3.killing());
  }

  TEST_CASE("antisymmetry and Jacobi") {
    const MatrixLieAlgebra su4(MatrixFamily::SU, 4);
    CHECK(su4.jacobi_check(200, 0x5eed).empty());
    for (int a = 0; a < su4.dim(); ++a)
      for (int b = 0; b < su4.dim(); ++b) {
        SparseVec neg = su4.bracket(b, a);
        for (auto& [i, v] : neg) v = -v;
        CHECK(su4.bracket(a, b) == neg);
      }
  }

  TEST_CASE("coordinates reject non-members") {
    const MatrixLieAlgebra so3(MatrixFamily::SO, 3);
    GaussMatrix sym(3);
    sym(0, 1) = {1, 0};
    sym(1, 0) = {1, 0};
    CHECK_THROWS_AS(so3.coords(sym), StructuralError);
  }

  TEST_CASE("involutions") {
    const TriadBuild build = build_so_triad(2, 3);
    for (const auto* th : {&build.theta1, &build.theta2}) {
      CHECK(th->squares_to_identity());
      CHECK(th->is_automorphism(build.alg));
    }
    CHECK(build.theta1.commutes_with(build.theta2));
    CHECK(build.theta1.l() == 3);
    CHECK(build.theta2.l() == 1);
  }

  TEST_CASE("[H, A_1^j] = -A_{1+b+c}^j") {
    const int b = 2, c = 3, n = 1 + b + c;
    const TriadBuild build = build_so_triad(b, c);
    for (int j = 2; j <= b + c; ++j) {
      std::vector<Rational> e(static_cast<std::size_t>(build.alg.dim()), Rational(0));
      e[static_cast<std::size_t>(build.alg.index_of_a(0, j - 1))] = 1;
      std::vector<Rational> want(e.size(), Rational(0));
      // A_n^j = -A_j^n.
      want[static_cast<std::size_t>(build.alg.index_of_a(j - 1, n - 1))] = 1;
      CHECK(build.alg.bracket(build.h_raw, e) == want);
    }
  }

  TEST_CASE("builders check their preconditions") {
    CHECK_THROWS_AS(build_so_triad(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_so_triad(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_su_triad(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_so_triad(5, 5), ResourceError);
    CHECK_THROWS_AS(build_su_triad(2, 3, 5), ResourceError);
    CHECK_NOTHROW(build_so_triad(5, 5, 11));
  }
}

TEST_SUITE("decomposition") {
  TEST_CASE("so(1+1+2): only 0 and -a^2, type III-B1 (1, 1)") {
    const DecompositionData d = decompose(build_so_triad(1, 2));
    CHECK(d.dim() == 6);
    CHECK(d.mults == Multiplicities{1, 0, 1, 0});
    CHECK(d.sigma.size() == 1);
    CHECK(d.sigma[0].multiple == 1);
    CHECK(d.triad().kind() == TriadKind::IIIB1);
  }

  TEST_CASE("su(1+1+2): 2 alpha appears with m(2 alpha) = 1") {
    const DecompositionData d = decompose(build_su_triad(1, 2));
    CHECK(d.mults == Multiplicities{2, 1, 2, 0});
    REQUIRE(d.sigma.size() == 2);
    CHECK(d.sigma[1].multiple == 2);
    CHECK(d.sigma[1].first.cols() == 1);
  }

  TEST_CASE("su(1+0+2) collapses W to ISO-BC1 (2, 1)") {
    const DecompositionData d = decompose(build_su_triad(0, 2));
    CHECK(d.mults == Multiplicities{2, 1, 0, 0});
    CHECK(d.triad().kind() == TriadKind::IsoBC1);
  }

  TEST_CASE("recovered <alpha,alpha> for so(1+b+c) is 1/(2(b+c-1))") {
    for (auto [b, c] : {std::pair{1, 2}, {2, 2}, {1, 3}, {2, 3}, {3, 3}}) {
      const DecompositionData d = decompose(build_so_triad(b, c));
      CHECK(d.alpha_norm_sq() == doctest::Approx(1.0 / (2.0 * (b + c - 1))).epsilon(1e-12));
    }
  }

  TEST_CASE("block dimensions and adapted bases") {
    for (const auto& build : {build_so_triad(2, 3), build_su_triad(1, 3)}) {
      const DecompositionData d = decompose(build);
      CHECK(d.dimension_sum() == d.dim());
      CHECK(adapted_basis_residual(d) <= 1e-10);
      CHECK(adapted_basis_residual(d, 2.3) <= 1e-10);
      for (const auto& r : d.sigma) CHECK(r.first.cols() == r.second.cols());
      for (const auto& r : d.w) CHECK(r.first.cols() == r.second.cols());
    }
  }

  TEST_CASE("dual of dual reproduces the blocks") {
    const TriadBuild build = build_su_triad(1, 2);
    const DecompositionData d = decompose(build), dd = decompose(build.dual().dual());
    CHECK(dd.mults == d.mults);
    CHECK(dd.kk.cols() == d.kk.cols());
    CHECK(dd.km.cols() == d.km.cols());
    CHECK(dd.mk.cols() == d.mk.cols());
    const DecompositionData dual = decompose(build.dual());
    CHECK(dual.km.cols() == d.mk.cols());
  }

  TEST_CASE("a corrupted bracket table is a structural failure") {
    TriadBuild build = build_so_triad(1, 3);
    build.alg.corrupt_bracket(build.alg.index_of_a(0, 1), build.alg.index_of_a(1, 2));
    CHECK_FALSE(build.alg.jacobi_check(200, 0x5eed).empty());
    const OracleReport rep = verify_closed_forms(build, 20);
    CHECK_FALSE(rep.pass);
    CHECK_FALSE(rep.error.empty());
  }
}

TEST_SUITE("oracle") {
  TEST_CASE("so(1+1+2) at pi/4 meets the threshold where it is harmonic") {
    const DecompositionData d = decompose(build_so_triad(1, 2));
    const NumericSff sff = second_fundamental_form_numeric(d, std::numbers::pi / 4);
    CHECK(sff.b_norm_sq == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(sff.tension.norm() <= 1e-10);
  }

  TEST_CASE("vanishing blocks and bracket formulas") {
    for (const auto& build : {build_so_triad(2, 3), build_su_triad(1, 2)}) {
      const DecompositionData d = decompose(build);
      for (double s : {0.2, 0.5, 0.7}) {
        const NumericSff sff = second_fundamental_form_numeric(d, s);
        CHECK(bracket_formula_residual(d, sff) <= 1e-10);
        CHECK(sff.symmetry_residual <= 1e-10);
        for (Eigen::Index i = 0; i < d.v_mk.cols(); ++i)
          for (Eigen::Index j = 0; j < sff.tangent.cols(); ++j)
            CHECK(std::abs(sff.eval(d.v_mk.col(i), sff.tangent.col(j), build.alg.metric())) <= 1e-10);
      }
    }
  }

  TEST_CASE("tension vanishes at the solver's harmonic angle") {
    for (const auto& build : {build_so_triad(1, 3), build_su_triad(1, 2), build_su_triad(0, 2)}) {
      const DecompositionData d = decompose(build);
      const SymmetricTriad1D t = d.triad();
      for (double s : angles_for(t, solve_harmonic(t).to_double()))
        CHECK(second_fundamental_form_numeric(d, s).tension.norm() <= 1e-10);
    }
  }

  TEST_CASE("singular angles are domain errors") {
    const DecompositionData d = decompose(build_so_triad(1, 2));
    CHECK_THROWS_AS(second_fundamental_form_numeric(d, std::numbers::pi / 2), std::domain_error);
  }

  TEST_CASE("closed forms on so(1+1+3) and su(1+1+2)") {
    const OracleReport so = verify_closed_forms(build_so_triad(1, 3), 20);
    CHECK(so.pass);
    CHECK(so.recovered == Multiplicities{2, 0, 1, 0});
    CHECK(so.samples.size() == 20);
    CHECK(so.max_rel_dev <= 1e-9);
    const OracleReport su = verify_closed_forms(build_su_triad(1, 2), 20);
    CHECK(su.pass);
    CHECK(su.recovered == Multiplicities{2, 1, 2, 0});
  }

  TEST_CASE("catalog multiplicities for the oracle cases") {
    CHECK(catalog_multiplicities("so", 2, 3) == Multiplicities{2, 0, 2, 0});
    CHECK(catalog_multiplicities("su", 2, 2) == Multiplicities{2, 1, 4, 0});
    CHECK_THROWS_AS(catalog_multiplicities("sp", 1, 2), std::invalid_argument);
  }

  TEST_CASE("duality") {
    const DecompositionData so = decompose(build_so_triad(1, 2));
    const DualityReport a = verify_duality(so, std::numbers::pi / 6);
    CHECK(a.b_dev <= 1e-10);
    CHECK(a.tension_dev <= 1e-10);
    const DecompositionData su = decompose(build_su_triad(1, 2));
    const DualityReport b = verify_duality(su, std::numbers::pi / 5);
    CHECK(b.b_dev <= 1e-10);
    CHECK(b.tension_dev <= 1e-10);
  }
}
