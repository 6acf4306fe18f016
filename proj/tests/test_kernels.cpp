#include "biharm/kernels.hpp"
#include "biharm/lie_algebra.hpp"
#include "biharm/oracle.hpp"

#include "../src/parallel_for.hpp"

#include <doctest.h>

#include <cstring>

using namespace biharm;

namespace {

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("grid lies strictly inside the cell") {
    const SymmetricTriad1D t(TriadKind::IIIBC1, {8, 7, 8, 1});
    const auto grid = cell_grid(t, 50);
    REQUIRE(grid.size() == 50);
    const Cell cell = fundamental_cell(t);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      CHECK(cell.contains(grid[i]));
      if (i) CHECK(grid[i - 1] < grid[i]);
    }
    CHECK_THROWS_AS(cell_grid(t, 0), std::invalid_argument);
  }

  TEST_CASE("curve: parallel equals serial bit for bit and matches direct calls") {
    const SymmetricTriad1D t(TriadKind::IBC1, {4, 1, 1, 0});
    const auto ser = sample_curve(t, 4001, Exec::Serial), par = sample_curve(t, 4001, Exec::Parallel);
    REQUIRE(ser.size() == par.size());
    for (std::size_t i = 0; i < ser.size(); ++i) {
      CHECK(same_bits(ser[i].s, par[i].s));
      CHECK(same_bits(ser[i].b_norm_sq, par[i].b_norm_sq));
      CHECK(same_bits(ser[i].tension_coeff, par[i].tension_coeff));
      CHECK(same_bits(ser[i].b_norm_sq, b_norm_sq(t, ser[i].s)));
    }
  }

  TEST_CASE("batch classification: parallel equals serial") {
    std::vector<SymmetricTriad1D> triads;
    for (int m = 1; m <= 20; ++m)
      for (int n = 1; n <= 20; ++n) {
        triads.emplace_back(TriadKind::IIIB1, Multiplicities{m, 0, n, 0});
        triads.emplace_back(TriadKind::IIIBC1, Multiplicities{m, n, m, 1 + (m * n) % 7});
      }
    const auto ser = classify_batch(triads, Exec::Serial), par = classify_batch(triads, Exec::Parallel);
    REQUIRE(ser.size() == par.size());
    for (std::size_t i = 0; i < ser.size(); ++i) {
      CHECK(ser[i].biharmonic_t == par[i].biharmonic_t);
      CHECK(ser[i].case_label == par[i].case_label);
      CHECK(ser[i].angles_radians == par[i].angles_radians);
    }
  }

  TEST_CASE("structure constants and Killing form: parallel equals serial") {
    const MatrixLieAlgebra a(MatrixFamily::SU, 4, Exec::Serial), b(MatrixFamily::SU, 4, Exec::Parallel);
    for (int i = 0; i < a.dim(); ++i)
      for (int j = 0; j < a.dim(); ++j) CHECK(a.bracket(i, j) == b.bracket(i, j));
    CHECK(killing_form(a, Exec::Serial) == killing_form(a, Exec::Parallel));
  }

  TEST_CASE("oracle samples: parallel equals serial") {
    const TriadBuild build = build_su_triad(1, 2);
    const OracleReport a = verify_closed_forms(build, 12, 1e-9, Exec::Serial);
    const OracleReport b = verify_closed_forms(build, 12, 1e-9, Exec::Parallel);
    REQUIRE(a.samples.size() == b.samples.size());
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
      CHECK(same_bits(a.samples[i].b_numeric, b.samples[i].b_numeric));
      CHECK(same_bits(a.samples[i].tension_numeric, b.samples[i].tension_numeric));
    }
  }

  TEST_CASE("an exception inside a parallel loop reaches the caller") {
    std::vector<int> hits(64, 0);
    auto body = [&](std::size_t i) {
      hits[i] = 1;
      if (i == 17) throw std::domain_error("boom");
    };
    CHECK_THROWS_AS(detail::for_each_index(hits.size(), Exec::Parallel, body), std::domain_error);
    CHECK_THROWS_AS(detail::for_each_index(hits.size(), Exec::Serial, body), std::domain_error);
    CHECK_THROWS_AS(sample_curve(SymmetricTriad1D(TriadKind::IIIB1, {1, 0, 1, 0}), -3, Exec::Parallel),
                    std::invalid_argument);
  }
}
