#include "biharm/catalog.hpp"

#include <doctest.h>

#include <set>

using namespace biharm;

namespace {
using P = ParamPolynomial;
const P b = P::var(P::B), c = P::var(P::C), q = P::var(P::Q);
}  // namespace

TEST_SUITE("polynomial") {
  TEST_CASE("ring operations and evaluation") {
    const P p = (b + c) * (b - c);
    CHECK(p == b * b - c * c);
    CHECK(p.eval({3, 2, 0}) == 5);
    CHECK((p - p).is_zero());
    CHECK((2 * q + 1).constant_term() == 1);
    CHECK((-(b * c)).eval({2, 5, 0}) == -10);
  }

  TEST_CASE("shift and orthant sign") {
    CHECK((b * b + 1).orthant_sign() == 1);
    CHECK((-b - 3).orthant_sign() == -1);
    CHECK((b - 1).orthant_sign() == 0);
    CHECK((b - 1).shifted({1, 0, 0}) == b);
    CHECK((b * c - 2).shifted({1, 2, 0}).orthant_sign() == 0);  // b c - 2 = 0 at the minimum
    CHECK((b * c - 2).shifted({1, 3, 0}).orthant_sign() == 1);
  }

  TEST_CASE("printing") {
    CHECK(P(0).str() == "0");
    CHECK((b - c - 1).str() == "b - c - 1");
  }
}

TEST_SUITE("catalog") {
  TEST_CASE("eighteen cases in theorem order") {
    const auto& fams = catalog_families();
    REQUIRE(fams.size() == 18);
    int per_group[4] = {0, 0, 0, 0};
    std::set<std::string> labels;
    for (const auto& f : fams) {
      ++per_group[f.group()];
      labels.insert(f.theorem_case);
    }
    CHECK(labels.size() == 18);
    CHECK(per_group[1] == 3);
    CHECK(per_group[2] == 7);
    CHECK(per_group[3] == 8);
    CHECK(fams.front().theorem_case == "1-1");
    CHECK(fams.back().theorem_case == "3-8");
  }

  TEST_CASE("so(1+b+c) row: III-B1 with (c - 1, b)") {
    const auto e = instantiate_at(find_family("1-1"), {{"b", 1}, {"c", 3}});
    REQUIRE(e);
    CHECK(e->triad.kind() == TriadKind::IIIB1);
    CHECK(e->triad.mults() == Multiplicities{2, 0, 1, 0});
    CHECK(e->group_g == "SO(5)");
  }

  TEST_CASE("the so row excludes c - 1 = b") {
    CHECK_FALSE(instantiate_at(find_family("1-1"), {{"b", 1}, {"c", 2}}));
  }

  TEST_CASE("su(1+b+c) row: I-BC1 with (2(c - 1), 1, 2b), reducing at b = 0") {
    const auto e = instantiate_at(find_family("2-2"), {{"b", 2}, {"c", 2}});
    REQUIRE(e);
    CHECK(e->triad.kind() == TriadKind::IBC1);
    CHECK(e->triad.mults() == Multiplicities{2, 1, 4, 0});
    const auto iso = instantiate_at(find_family("2-2"), {{"b", 0}, {"c", 2}});
    REQUIRE(iso);
    CHECK(iso->triad.kind() == TriadKind::IsoBC1);
    CHECK(iso->triad.mults() == Multiplicities{2, 1, 0, 0});
  }

  TEST_CASE("exceptional rows") {
    const auto so8 = instantiate_at(find_family("2-4"), {});
    CHECK(so8->group_g == "SO(8)");
    CHECK(so8->triad.kind() == TriadKind::IBC1);
    CHECK(so8->triad.mults() == Multiplicities{4, 1, 1, 0});
    const auto f4 = instantiate_at(find_family("3-8"), {});
    CHECK(f4->triad.kind() == TriadKind::IIIBC1);
    CHECK(f4->triad.mults() == Multiplicities{4, 3, 4, 4});
    CHECK(instantiate_at(find_family("2-7"), {})->triad.mults() == Multiplicities{8, 7, 0, 0});
    CHECK(instantiate_at(find_family("2-5"), {})->triad.mults() == Multiplicities{8, 7, 8, 1});
    CHECK(instantiate_at(find_family("3-7"), {})->triad.mults() == Multiplicities{8, 3, 8, 5});
  }

  TEST_CASE("missing parameters and unknown labels") {
    CHECK_FALSE(instantiate_at(find_family("2-2"), {{"b", 1}}));
    CHECK_THROWS_AS(find_family("4-1"), std::invalid_argument);
  }

  TEST_CASE("rendering") {
    CHECK(render_group("SO({1+b+c})", nullptr) == "SO(1+b+c)");
    const ParamValues v{{"b", 2}, {"c", 3}};
    CHECK(render_group("SO({1+b+c})", &v) == "SO(6)");
    CHECK_THROWS_AS(render_group("SO({b", &v), std::invalid_argument);
  }

  TEST_CASE("every instance up to 12 is a valid triad") {
    const auto rows = catalog(12);
    CHECK(rows.size() == 482);
    for (const auto& e : rows) CHECK(validate_triad(e.triad.kind(), e.triad.mults()).passed());
  }
}
