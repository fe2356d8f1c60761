#include <doctest.h>

#include "core/errors.hpp"
#include "core/multisingularity.hpp"

using namespace ssmthom;

TEST_CASE("grammar: T-flavor, S-flavor and the empty multisingularity") {
  Multisingularity t = Multisingularity::parse("A0^2*A1*I22");
  CHECK_FALSE(t.is_s_flavor());
  CHECK(t.render() == "A0^2*A1*I22");
  CHECK(t.multiplicity_of("A0") == 2);

  Multisingularity s = Multisingularity::parse("A1:A0^2*A1");
  CHECK(s.is_s_flavor());
  CHECK(*s.distinguished() == "A1");
  CHECK(s.render() == "A1:A0^2*A1");

  Multisingularity empty = Multisingularity::parse("1");
  CHECK(empty.empty());
  CHECK(empty.render() == "1");
}

TEST_CASE("grammar: canonicalization and idempotence") {
  Multisingularity m = Multisingularity::parse("I22 * A0 ^ 2 *A1");
  CHECK(m.render() == "A0^2*A1*I22");
  CHECK(Multisingularity::parse(m.render()) == m);
  CHECK(Multisingularity::parse("A0*A0*A0").render() == "A0^3");
  CHECK(Multisingularity::parse("III22*A2").render() == "A2*III22");
}

TEST_CASE("grammar errors") {
  CHECK_THROWS_AS(Multisingularity::parse("A2:A0*A1"), Error);  // dist not a member
  CHECK_THROWS_AS(Multisingularity::parse("B2"), Error);        // unknown token
  CHECK_THROWS_AS(Multisingularity::parse("A0**A1"), Error);
  CHECK_THROWS_AS(Multisingularity::parse("A0^0"), Error);
  CHECK_THROWS_AS(Multisingularity::parse(""), Error);
  CHECK_THROWS_AS(Multisingularity::parse("I2"), Error);        // needs two indices
  CHECK_THROWS_AS(Multisingularity::parse("A1:1"), Error);
}

TEST_CASE("codims via the summation formula") {
  auto c = codims(Multisingularity::parse("A1"), 1);
  CHECK(c.scodim == 2);
  CHECK(c.tcodim == 3);

  c = codims(Multisingularity::parse("A0^2*A1*I22"), 1);
  CHECK(c.scodim == 12);
  CHECK(c.tcodim == 13);

  c = codims(Multisingularity(), 3);
  CHECK(c.empty_multisingularity);
  CHECK(c.tcodim == 0);
}

TEST_CASE("family closed forms") {
  CHECK(family_scodim(AlgebraName::parse("A2"), 1) == 4);
  CHECK(family_scodim(AlgebraName::parse("I22"), 1) == 7);
  CHECK(family_scodim(AlgebraName::parse("III22"), 1) == 6);
  CHECK(family_scodim(AlgebraName::parse("I23"), 1) == 9);
  CHECK(family_scodim(AlgebraName::parse("III23"), 2) == 11);
}

TEST_CASE("aut_order") {
  Multisingularity t({{"A1", 5}, {"A2", 2}});
  CHECK(t.aut_order() == 240);
  Multisingularity s({{"A1", 5}, {"A2", 2}}, std::string("A1"));
  CHECK(s.aut_order() == 48);
  CHECK(Multisingularity().aut_order() == 1);
}

TEST_CASE("submultisets") {
  auto subs = Multisingularity::parse("A0^2").submultisets();
  REQUIRE(subs.size() == 3);
  CHECK(subs[0].render() == "1");
  CHECK(subs[1].render() == "A0");
  CHECK(subs[2].render() == "A0^2");

  subs = Multisingularity::parse("A0*A1").submultisets();
  REQUIRE(subs.size() == 4);

  subs = Multisingularity::parse("A0:A0*A1").submultisets();
  REQUIRE(subs.size() == 2);
  CHECK(subs[0].render() == "A0:A0");
  CHECK(subs[1].render() == "A0:A0*A1");
}

TEST_CASE("aut divisibility under multiplicity growth") {
  for (int a = 1; a <= 6; ++a) {
    Multisingularity small({{"A0", a}});
    Multisingularity big({{"A0", a + 1}});
    CHECK(big.aut_order() % small.aut_order() == 0);
  }
}

TEST_CASE("containment") {
  Multisingularity big = Multisingularity::parse("A0^3*A1");
  CHECK(big.contains(Multisingularity::parse("A0^2")));
  CHECK(big.contains(Multisingularity()));
  CHECK_FALSE(big.contains(Multisingularity::parse("A1^2")));
}
