#include <doctest.h>

#include <fstream>

#include "core/catalog.hpp"
#include "core/errors.hpp"
#include "core/fixtures.hpp"

using namespace ssmthom;

TEST_CASE("mather bound") {
  CHECK(mather_bound(1) == 14);
  CHECK(mather_bound(2) == 20);
  CHECK(mather_bound(3) == 26);
  CHECK(mather_bound(4) == 31);
  CHECK(mather_bound(18) == 115);
}

TEST_CASE("catalog listing for l=1, k=6") {
  const Catalog cat = fixtures::catalog();
  const auto list = cat.monosingularities(1, 6);
  REQUIRE(list.size() == 3);
  CHECK(list[0].entry.name == "A0");
  CHECK(list[0].tcodim == 1);
  CHECK(list[1].entry.name == "A1");
  CHECK(list[1].tcodim == 3);
  CHECK(list[2].entry.name == "A2");
  CHECK(list[2].tcodim == 5);
}

TEST_CASE("catalog listing for l=1, k=8 adds A3, III22, I22") {
  const Catalog cat = fixtures::catalog();
  const auto list = cat.monosingularities(1, 8);
  REQUIRE(list.size() == 6);
  CHECK(list[3].entry.name == "A3");
  CHECK(list[3].tcodim == 7);
  CHECK(list[4].entry.name == "III22");
  CHECK(list[4].tcodim == 7);
  CHECK(list[5].entry.name == "I22");
  CHECK(list[5].tcodim == 8);
  // the solver-usable I22 presentation is the diagonal, maximal-torus one
  CHECK(list[5].entry.presentation == "diagonal");
}

TEST_CASE("catalog errors: Mather bound and bundled coverage") {
  const Catalog cat = fixtures::catalog();
  CHECK_THROWS_WITH_AS(static_cast<void>(cat.monosingularities(1, 16)),
                       doctest::Contains("Mather bound"), Error);
  try {
    static_cast<void>(cat.monosingularities(1, 12));
    FAIL("expected CatalogIncomplete");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CatalogIncomplete);
    CHECK(std::string(e.what()).find("11..12") != std::string::npos);
  }
}

TEST_CASE("bundled coverage per l") {
  const Catalog cat = fixtures::catalog();
  CHECK(cat.monosingularities(2, 10).size() == 4);  // A0, A1, A2, III22
  CHECK(cat.monosingularities(3, 10).size() == 2);  // A0, A1
  CHECK(cat.monosingularities(4, 10).size() == 2);  // A0, A1
}

TEST_CASE("I22 ships two presentations") {
  const Catalog cat = fixtures::catalog();
  const auto ps = cat.presentations("I22", 1);
  REQUIRE(ps.size() == 2);
  int maximal = 0;
  for (const auto& p : ps) maximal += p.maximal_torus ? 1 : 0;
  CHECK(maximal == 1);
}

TEST_CASE("catalog load rejects non-quasihomogeneous genotypes") {
  const std::string path = "bad_catalog_test.json";
  {
    std::ofstream out(path);
    out << R"([{ "name":"I22", "l":1, "generators":2, "weights":[1,2],
           "genotype":[ [[1,[1,1]]], [[1,[2,0]],[1,[0,2]]], [] ] }])";
  }
  CHECK_THROWS_WITH_AS(static_cast<void>(Catalog::load(path)),
                       doctest::Contains("quasihomogeneous"), Error);
}

TEST_CASE("every bundled entry carries a citation and valid weights") {
  const Catalog cat = fixtures::catalog();
  for (const auto& e : cat.entries()) {
    CHECK_FALSE(e.citation.empty());
    CHECK(static_cast<int>(e.genotype.size()) == e.generators + e.l);
  }
}
