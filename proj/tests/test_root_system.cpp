#include "biharm/symmetric_triad.hpp"
#include "biharm/triad1d.hpp"

#include <doctest.h>

#include <numbers>

using namespace biharm;

namespace {

RootVector v(std::int64_t k) { return RootVector{{Rational(k)}}; }

const AmbientSpace kLine = AmbientSpace::line(1);

}  // namespace

TEST_SUITE("root_system") {
  TEST_CASE("reflection and Cartan integers on the line") {
    CHECK(reflect(kLine, v(1), v(1)) == v(-1));
    CHECK(reflect(kLine, v(2), v(1)) == v(-1));
    CHECK(cartan_integer(kLine, v(1), v(2)) == Rational(4));
    CHECK(cartan_integer(kLine, v(2), v(1)) == Rational(1));
    CHECK_THROWS_AS(reflect(kLine, v(0), v(1)), std::invalid_argument);
  }

  TEST_CASE("reflection in a plane with a non-standard Gram matrix") {
    // A2 with <a,a> = 2, <a,b> = -1.
    const AmbientSpace plane({{Rational(2), Rational(-1)}, {Rational(-1), Rational(2)}});
    const RootVector a{{Rational(1), Rational(0)}}, b{{Rational(0), Rational(1)}};
    CHECK(reflect(plane, a, b) == RootVector{{Rational(1), Rational(1)}});
    CHECK(cartan_integer(plane, a, b) == Rational(-1));
    std::vector<RootVector> roots{a, b, a + b, -a, -b, -(a + b)};
    const RootSystem a2(plane, roots);
    CHECK(validate_root_system(a2).passed());
    CHECK(a2.is_irreducible());
  }

  TEST_CASE("BC1 and A1 are root systems; A1 + A1 on a plane is reducible") {
    CHECK(validate_root_system(RootSystem(kLine, {v(1), v(-1), v(2), v(-2)})).passed());
    CHECK(validate_root_system(RootSystem(kLine, {v(1), v(-1)})).passed());
    const AmbientSpace plane({{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
    const RootSystem a1a1(plane, {RootVector{{Rational(1), Rational(0)}}, RootVector{{Rational(-1), Rational(0)}},
                                  RootVector{{Rational(0), Rational(1)}}, RootVector{{Rational(0), Rational(-1)}}});
    CHECK(validate_root_system(a1a1).passed());
    CHECK_FALSE(a1a1.is_irreducible());
  }

  TEST_CASE("missing -alpha fails reflection closure") {
    const auto rep = validate_root_system(RootSystem(kLine, {v(1)}));
    REQUIRE(rep.first_failure());
    CHECK(rep.first_failure()->condition == "reflection-closure");
  }

  TEST_CASE("3 alpha breaks integrality") {
    const auto rep = validate_root_system(RootSystem(kLine, {v(2), v(-2), v(3), v(-3)}));
    REQUIRE(rep.first_failure());
    CHECK(rep.first_failure()->condition == "integrality");
  }

  TEST_CASE("the four triad shapes satisfy the axioms") {
    for (auto k : {TriadKind::IIIB1, TriadKind::IBC1, TriadKind::IIBC1, TriadKind::IIIBC1}) {
      CAPTURE(kind_name(k));
      const auto rep = validate_symmetric_triad(triad_data(k));
      CHECK(rep.passed());
      CHECK(rep.entries.size() == 6);
    }
  }

  TEST_CASE("Sigma and W disjoint fails condition (4)") {
    const SymmetricTriadData t{RootSystem(kLine, {v(1), v(-1), v(2), v(-2)}), {v(1), v(-1)}, {v(2), v(-2)}};
    const auto rep = validate_symmetric_triad(t);
    REQUIRE(rep.first_failure());
    CHECK(rep.first_failure()->condition == "(4)");
  }

  TEST_CASE("W not closed under negation fails (3)") {
    const SymmetricTriadData t{RootSystem(kLine, {v(1), v(-1)}), {v(1), v(-1)}, {v(1)}};
    const auto rep = validate_symmetric_triad(t);
    REQUIRE(rep.first_failure());
    CHECK(rep.first_failure()->condition == "(3)");
  }
}

TEST_SUITE("triad") {
  TEST_CASE("multiplicity patterns accepted per kind") {
    CHECK(validate_triad(TriadKind::IIIB1, {3, 0, 1, 0}).passed());
    CHECK(validate_triad(TriadKind::IBC1, {4, 1, 1, 0}).passed());
    CHECK(validate_triad(TriadKind::IIBC1, {2, 0, 2, 5}).passed());
    CHECK(validate_triad(TriadKind::IIIBC1, {8, 7, 8, 1}).passed());
    CHECK(validate_triad(TriadKind::IsoA1, {5, 0, 0, 0}).passed());
    CHECK(validate_triad(TriadKind::IsoBC1, {8, 7, 0, 0}).passed());
  }

  TEST_CASE("II-BC1 with m(alpha) != n(alpha) fails multiplicity condition (4)") {
    const auto rep = validate_triad(TriadKind::IIBC1, {2, 0, 3, 1});
    REQUIRE(rep.first_failure());
    CHECK(rep.first_failure()->condition == "multiplicity (4)");
  }

  TEST_CASE("III-BC1 also ties m(alpha) to n(alpha)") {
    const auto rep = validate_triad(TriadKind::IIIBC1, {8, 7, 7, 1});
    REQUIRE(rep.first_failure());
    CHECK(rep.first_failure()->condition == "multiplicity (4)");
  }

  TEST_CASE("multiplicities on a missing root are rejected") {
    const auto rep = validate_triad(TriadKind::IIIB1, {1, 1, 1, 0});
    REQUIRE(rep.first_failure());
    CHECK(rep.first_failure()->condition == "multiplicity support");
    CHECK_THROWS_AS(SymmetricTriad1D(TriadKind::IsoA1, {1, 0, 0, 2}), std::invalid_argument);
  }

  TEST_CASE("zero multiplicity on a present root is rejected") {
    CHECK_FALSE(validate_triad(TriadKind::IBC1, {4, 1, 0, 0}).passed());
    CHECK_THROWS_AS(SymmetricTriad1D(TriadKind::IBC1, {4, 1, 0, 0}), std::invalid_argument);
  }

  TEST_CASE("kind names round trip") {
    for (auto k : {TriadKind::IIIB1, TriadKind::IBC1, TriadKind::IIBC1, TriadKind::IIIBC1, TriadKind::IsoA1,
                   TriadKind::IsoBC1})
      CHECK(parse_kind(kind_name(k)) == k);
    CHECK_THROWS_AS(parse_kind("IV-BC1"), std::invalid_argument);
  }

  TEST_CASE("inference and reduction") {
    CHECK(SymmetricTriad1D::infer({8, 7, 8, 1}).kind() == TriadKind::IIIBC1);
    CHECK(SymmetricTriad1D::infer({2, 1, 0, 0}).kind() == TriadKind::IsoBC1);
    CHECK(SymmetricTriad1D::infer({3, 0, 1, 0}).kind() == TriadKind::IIIB1);
    CHECK_THROWS_AS(SymmetricTriad1D::infer({1, 0, 0, 1}), std::invalid_argument);
    CHECK(SymmetricTriad1D::reduced(TriadKind::IBC1, {2, 1, 0, 0}).kind() == TriadKind::IsoBC1);
    CHECK_THROWS_AS(SymmetricTriad1D::reduced(TriadKind::IIIB1, {2, 1, 1, 0}), std::invalid_argument);
  }

  TEST_CASE("fundamental cells") {
    auto cell = [](TriadKind k, Multiplicities m) { return fundamental_cell(SymmetricTriad1D(k, m)); };
    CHECK(cell(TriadKind::IIIB1, {1, 0, 1, 0}).hi == Rational(1, 2));
    CHECK(cell(TriadKind::IsoA1, {3, 0, 0, 0}).hi == Rational(1));
    CHECK(cell(TriadKind::IsoBC1, {8, 7, 0, 0}).hi == Rational(1, 2));
    CHECK(cell(TriadKind::IIBC1, {2, 0, 2, 1}).hi == Rational(1, 4));
    CHECK(cell(TriadKind::IIIBC1, {8, 7, 8, 1}).hi == Rational(1, 4));
    for (auto k : {TriadKind::IIIB1, TriadKind::IsoA1}) CHECK(cell(k, {1, 0, k == TriadKind::IIIB1, 0}).lo == 0);
  }

  TEST_CASE("regular points, exact and floating") {
    const SymmetricTriad1D t(TriadKind::IIIB1, {1, 0, 1, 0});
    CHECK(is_regular_point(t, PiMultiple{Rational(1, 4)}));
    CHECK_FALSE(is_regular_point(t, PiMultiple{Rational(1, 2)}));
    CHECK_FALSE(is_regular_point(t, PiMultiple{Rational(0)}));
    CHECK(is_regular_point(t, 0.3));
    CHECK_FALSE(is_regular_point(t, std::numbers::pi / 2));
    CHECK(singular_wall(t, std::numbers::pi / 2).has_value());
  }

  TEST_CASE("regular set is the cell moved by reflections in its walls") {
    for (const auto& t : {SymmetricTriad1D(TriadKind::IIIB1, {2, 0, 1, 0}), SymmetricTriad1D(TriadKind::IBC1, {4, 1, 1, 0}),
                          SymmetricTriad1D(TriadKind::IIBC1, {2, 0, 2, 1}),
                          SymmetricTriad1D(TriadKind::IIIBC1, {8, 7, 8, 1}),
                          SymmetricTriad1D(TriadKind::IsoA1, {3, 0, 0, 0}),
                          SymmetricTriad1D(TriadKind::IsoBC1, {8, 7, 0, 0})}) {
      CAPTURE(kind_name(t.kind()));
      const Cell cell = fundamental_cell(t);
      const Rational width = cell.hi - cell.lo;
      for (int k = -96; k <= 96; ++k) {
        const Rational s(k, 48);
        const bool regular = is_regular_point(t, PiMultiple{s});
        if (s > cell.lo && s < cell.hi) CHECK(regular);
        if (s == cell.lo || s == cell.hi) CHECK_FALSE(regular);
        CHECK(regular == is_regular_point(t, PiMultiple{s + 2 * width}));
        CHECK(regular == is_regular_point(t, PiMultiple{2 * cell.hi - s}));
        CHECK(regular == is_regular_point(t, PiMultiple{2 * cell.lo - s}));
        CHECK(regular == is_regular_point(t, PiMultiple{s}.radians()));
      }
    }
  }

  TEST_CASE("reflection is an exact involution") {
    const AmbientSpace plane({{Rational(3), Rational(1)}, {Rational(1), Rational(5, 2)}});
    const RootVector a{{Rational(2, 3), Rational(-1)}};
    for (int i = -3; i <= 3; ++i)
      for (int j = -3; j <= 3; ++j) {
        const RootVector h{{Rational(i, 2), Rational(j, 7)}};
        CHECK(reflect(plane, a, reflect(plane, a, h)) == h);
      }
  }
}
