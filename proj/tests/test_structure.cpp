#include <doctest.h>

#include "core/errors.hpp"
#include "core/fixtures.hpp"
#include "core/structure.hpp"
#include "helpers.hpp"

using namespace ssmthom;
using namespace testutil;

namespace {

SeriesTable small_s_table(int k) {
  // arbitrary-but-fixed s-linear rows for the exponential-shape checks
  SeriesTable t;
  t.l = 1;
  t.trunc = k;
  t.flavor = TableFlavor::SLinear;
  t.provenance = "imported";
  t.put(Multisingularity(), make(1, k, {{mono_s({}), "-1"}, {mono_s({1}), "1/2"}}));
  t.put(Multisingularity::parse("A0"), make(1, k, {{mono_s({}), "1"}, {mono_s({2}), "-2"}}));
  t.put(Multisingularity::parse("A0^2"), make(1, k, {{mono_s({1}), "-1"}, {mono_s({2}), "3"}}));
  t.put(Multisingularity::parse("A0^3"), make(1, k, {{mono_s({1, 1}), "2"}}));
  return t;
}

GradedSeries drop_c_terms(const GradedSeries& p) {
  GradedSeries out = GradedSeries::zero(p.l, p.trunc);
  for (const auto& [m, c] : p.terms)
    if (!m.has_kind(VarKind::Chern)) out.add_term(m, c);
  return out;
}

}  // namespace

TEST_CASE("assemble_target reproduces the recursive shapes") {
  const int k = 4;
  SeriesTable t = small_s_table(k);
  const GradedSeries s0 = t.at(Multisingularity());
  const GradedSeries s1 = t.at(Multisingularity::parse("A0"));
  const GradedSeries s2 = t.at(Multisingularity::parse("A0^2"));
  const GradedSeries s3 = t.at(Multisingularity::parse("A0^3"));
  const GradedSeries e = series_exp(s0, k);

  SeriesTable out = assemble_target(t, Multisingularity::parse("A0^3"), k);
  CHECK(out.at(Multisingularity()) == e);
  CHECK(out.at(Multisingularity::parse("A0")) == truncated_product(e, s1, k));
  // exp(S_0) (S_{A0^2} + S_{A0}^2)
  CHECK(out.at(Multisingularity::parse("A0^2")) ==
        truncated_product(e, add(s2, truncated_product(s1, s1, k)), k));
  // exp(S_0) (S_{A0^3} + 3 S_{A0^2} S_{A0} + S_{A0}^3)
  GradedSeries bracket = add(s3, scale(truncated_product(s2, s1, k), Rational(3)));
  bracket = add(bracket, truncated_product(truncated_product(s1, s1, k), s1, k));
  CHECK(out.at(Multisingularity::parse("A0^3")) == truncated_product(e, bracket, k));
}

TEST_CASE("assemble_target with only the master row") {
  const int k = 3;
  SeriesTable t;
  t.l = 1;
  t.trunc = k;
  t.flavor = TableFlavor::SLinear;
  t.put(Multisingularity(), make(1, k, {{mono_s({}), "-1"}}));
  t.put(Multisingularity::parse("A0"), GradedSeries::zero(1, k));
  SeriesTable out = assemble_target(t, Multisingularity::parse("A0"), k);
  CHECK(out.at(Multisingularity()) == series_exp(t.at(Multisingularity()), k));
  CHECK(out.at(Multisingularity::parse("A0")).is_zero());
}

TEST_CASE("assemble_target errors") {
  SeriesTable t = small_s_table(3);
  CHECK_THROWS_AS(static_cast<void>(assemble_target(t, Multisingularity::parse("A0^4"), 3)),
                  Error);  // missing entry
  SeriesTable bad = t;
  bad.put(Multisingularity::parse("A0"),
          make(1, 3, {{mono_s({}).pow(2), "1"}}));  // not s-linear
  CHECK_THROWS_AS(static_cast<void>(assemble_target(bad, Multisingularity::parse("A0"), 3)),
                  Error);
}

TEST_CASE("f_map: worked example with the cancellation") {
  GradedSeries p = make(1, 8, {{Monomial::unit(), "1"},
                               {mono_s({1}), "1"},
                               {mono_c({1}).times(mono_s({1})), "1"},
                               {mono_c({1, 1}), "2"},
                               {mono_c({3, 3, 2}), "3"},
                               {mono_c({2}).times(mono_s({1})), "1"},
                               {mono_c({1}).times(mono_s({2})), "-1"}});
  GradedSeries got = f_map(p);
  GradedSeries expect = make(1, 9, {{mono_s({}), "1"},
                                    {mono_s({1}).times(mono_s({})), "1"},
                                    {mono_s({1}).pow(2), "1"},
                                    {mono_s({1, 1}), "2"},
                                    {mono_s({3, 3, 2}), "3"}});
  CHECK(got == expect);
}

TEST_CASE("f_map basics and module property") {
  CHECK(f_map(make(1, 3, {{mono_c({2, 1}), "1"}})) == make(1, 4, {{mono_s({2, 1}), "1"}}));
  std::mt19937 rng(5);
  GradedSeries p = random_cs_series(rng, 1, 4);
  GradedSeries qs = random_s_series(rng, 1, 3, 2);
  CHECK(f_map(truncated_product(p, qs, 7)) ==
        truncated_product(f_map(p), qs, 8));
}

TEST_CASE("f_map shifts cohomological degree by l and s-degree by one") {
  std::mt19937 rng(13);
  for (int l : {1, 2}) {
    GradedSeries p = random_cs_series(rng, l, 5);
    GradedSeries f = f_map(p);
    CHECK(f.trunc == p.trunc + l);
    for (int r = 0; r <= p.trunc; ++r) {
      GradedSeries fr = graded_component(f, r + l);
      fr.trunc = p.trunc + l;
      CHECK(f_map(graded_component(p, r)) == fr);
      for (const auto& [m, c] : fr.terms) CHECK(m.sdegree() >= 1);
    }
    for (const auto& [m, c] : p.terms) {
      GradedSeries single = GradedSeries::zero(l, p.trunc);
      single.add_term(m, c);
      for (const auto& [fm, fc] : f_map(single).terms)
        CHECK(fm.sdegree() == m.sdegree() + 1);
    }
  }
}

TEST_CASE("ff_map(1) matches the geometric-series oracle") {
  GradedSeries one = GradedSeries::constant(1, 3, 1);
  GradedSeries got = ff_map(one, 4);
  // oracle: invert 1 + c_1 + c_2 + c_3 by summing powers of the negation
  GradedSeries c = make(1, 3, {{mono_c({1}), "1"}, {mono_c({2}), "1"}, {mono_c({3}), "1"}});
  GradedSeries inv = GradedSeries::constant(1, 3, 1);
  GradedSeries pw = GradedSeries::constant(1, 3, 1);
  for (int n = 1; n <= 3; ++n) {
    pw = truncated_product(pw, negate(c), 3);
    inv = add(inv, pw);
  }
  CHECK(got == f_map(inv));
  CHECK(got.coeff(mono_s({})) == rational(1));
  CHECK(got.coeff(mono_s({1})) == rational(-1));
  CHECK(got.coeff(mono_s({1, 1})) == rational(1));
  CHECK(got.coeff(mono_s({2})) == rational(-1));
}

TEST_CASE("r_from_s of the unit linear series") {
  GradedSeries s = make(1, 4, {{mono_s({}), "1"}});
  GradedSeries r = r_from_s(s, 4);
  CHECK(r == make(1, 3, {{Monomial::unit(), "1"},
                         {mono_c({1}), "1"},
                         {mono_c({2}), "1"},
                         {mono_c({3}), "1"}}));
}

TEST_CASE("r_from_s and ff_map invert each other on the printed A1 rows") {
  const SeriesTable sl1 = fixtures::fig_sl1();
  const SeriesTable rl1 = fixtures::fig_rl1();
  const Multisingularity a1 = Multisingularity::parse("A1");
  CHECK(r_from_s(sl1.at(a1), 6) == rl1.at(a1));
  GradedSeries r = rl1.at(a1);
  r.trunc = 5;
  CHECK(ff_map(r, 6) == sl1.at(a1));
}

TEST_CASE("ff_map inverts r_from_s on random linear series") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 6; ++trial) {
    GradedSeries s = random_s_series(rng, 1, 5, 4);
    GradedSeries linear = GradedSeries::zero(1, 5);
    for (const auto& [m, c] : s.terms)
      if (m.sdegree() == 1 && m.factors().size() == 1 && m.factors().front().second == 1)
        linear.add_term(m, c);
    CHECK(ff_map(r_from_s(linear, 5), 5) == linear);
  }
  CHECK_THROWS_AS(static_cast<void>(r_from_s(make(1, 3, {{mono_s({}).pow(2), "1"}}), 3)),
                  Error);
}

TEST_CASE("assemble_source matches both worked source polynomials") {
  const SeriesTable sl1 = fixtures::fig_sl1();
  const SeriesTable rl1 = fixtures::fig_rl1();
  const SeriesTable expect = fixtures::source_thom_examples();
  for (const char* key : {"A0:A0*A1", "A1:A0*A1"}) {
    const Multisingularity psi = Multisingularity::parse(key);
    GradedSeries got = assemble_source(rl1, sl1, psi, 4);
    CHECK(got == expect.at(psi));
  }
  // Their FF images coincide
  GradedSeries a = assemble_source(rl1, sl1, Multisingularity::parse("A0:A0*A1"), 4);
  GradedSeries b = assemble_source(rl1, sl1, Multisingularity::parse("A1:A0*A1"), 4);
  CHECK_FALSE(a == b);
  CHECK(ff_map(a, 5) == ff_map(b, 5));
}

TEST_CASE("source polynomial of a monosingularity: exp(S_0) R_eta") {
  const SeriesTable sl1 = fixtures::fig_sl1();
  const SeriesTable rl1 = fixtures::fig_rl1();
  const Multisingularity psi = Multisingularity::parse("A0:A0");
  GradedSeries got = assemble_source(rl1, sl1, psi, 5);
  GradedSeries e = series_exp(sl1.at(Multisingularity()), 5);
  GradedSeries r = rl1.at(Multisingularity::parse("A0"));
  r.trunc = 5;
  CHECK(got == truncated_product(e, r, 5));
  // R_{A0} starts with 1, so the c-free part is exp of the master series
  CHECK(drop_c_terms(got) == e);
  // degree bounds beyond the table coverage are refused, not silently wrong
  CHECK_THROWS_AS(static_cast<void>(assemble_source(rl1, sl1, psi, 6)), Error);
}

TEST_CASE("FF consistency: source assembly maps onto target assembly") {
  const SeriesTable sl1 = fixtures::fig_sl1();
  const SeriesTable rl1 = fixtures::fig_rl1();
  for (const auto& [psi, r] : rl1.entries) {
    const std::string dist = psi.entries().front().first;
    GradedSeries source = assemble_source(rl1, sl1, psi.with_distinguished(dist), 5);
    SeriesTable target = assemble_target(sl1, psi, 6);
    GradedSeries expect = graded_upto(target.at(psi), 6);
    GradedSeries got = ff_map(source, 6);
    expect.trunc = got.trunc = 6;
    CHECK_MESSAGE(got == expect, psi.render());
  }
}

TEST_CASE("assembled target polynomials vanish below the target codimension") {
  const SeriesTable sl1 = fixtures::fig_sl1();
  for (const auto& [psi, s] : sl1.entries) {
    if (psi.empty()) continue;
    SeriesTable target = assemble_target(sl1, psi, 6);
    const long tc = codims(psi, 1).tcodim;
    for (int r = 0; r < tc && r <= 6; ++r)
      CHECK_MESSAGE(graded_component(target.at(psi), r).is_zero(),
                    (psi.render() + " degree " + std::to_string(r)));
  }
}
