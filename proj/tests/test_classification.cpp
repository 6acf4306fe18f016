#include "biharm/classification.hpp"

#include <doctest.h>

using namespace biharm;

TEST_SUITE("classification") {
  TEST_CASE("expected labels from the leading digit") {
    CHECK(expected_label("1-3") == CaseLabel::UniqueProper);
    CHECK(expected_label("2-7") == CaseLabel::TwoProper);
    CHECK(expected_label("3-1") == CaseLabel::HarmonicOnly);
    CHECK_THROWS_AS(expected_label("4-1"), std::invalid_argument);
    CHECK_THROWS_AS(expected_label(""), std::invalid_argument);
  }

  TEST_CASE("every family carries a symbolic certificate for its label") {
    for (const auto& fam : catalog_families()) {
      CAPTURE(fam.theorem_case);
      const auto cert = certify_family(fam);
      REQUIRE(cert.label);
      CHECK(*cert.label == expected_label(fam.theorem_case));
      CHECK_FALSE(cert.argument.empty());
    }
  }

  TEST_CASE("certificates quote the discriminant") {
    CHECK(certify_family(find_family("3-7")).argument.find("disc = -156") != std::string::npos);
    CHECK(certify_family(find_family("2-1")).argument.find("disc = 32q") != std::string::npos);
  }

  TEST_CASE("a relabelled family is caught") {
    CatalogFamily fam = find_family("2-5");
    fam.theorem_case = "3-9";
    FamilySummary s;
    s.theorem_case = fam.theorem_case;
    s.expected = expected_label(fam.theorem_case);
    s.certificate = certify_family(fam);
    CHECK_FALSE(s.certified());
  }

  TEST_CASE("catalog up to 6: 18 families in groups 3/7/8") {
    const auto rep = classify_catalog(6);
    CHECK(rep.ok());
    CHECK(rep.families.size() == 18);
    CHECK(rep.group_sizes == std::array<int, 3>{3, 7, 8});
    CHECK(rep.mismatches.empty());
    for (const auto& f : rep.families) CHECK(f.instances > 0);
    for (const auto& e : rep.entries) CHECK(e.matches);
  }

  TEST_CASE("too small a range leaves families empty and the report not ok") {
    const auto rep = classify_catalog(0);
    CHECK_FALSE(rep.ok());
  }

  TEST_CASE("serial and parallel catalogs agree") {
    const auto a = classify_catalog(8, Exec::Serial), b = classify_catalog(8, Exec::Parallel);
    REQUIRE(a.entries.size() == b.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
      CHECK(a.entries[i].result.proper_biharmonic_t == b.entries[i].result.proper_biharmonic_t);
      CHECK(a.entries[i].result.angles_radians == b.entries[i].result.angles_radians);
    }
  }
}
