#include <doctest.h>

#include "core/errors.hpp"
#include "core/series.hpp"
#include "core/series_json.hpp"
#include "core/fixtures.hpp"
#include "helpers.hpp"

using namespace ssmthom;
using namespace testutil;

TEST_CASE("truncated_product: difference of squares") {
  GradedSeries a = make(1, 2, {{Monomial::unit(), "1"}, {mono_c({1}), "1"}});
  GradedSeries b = make(1, 2, {{Monomial::unit(), "1"}, {mono_c({1}), "-1"}});
  GradedSeries expect = make(1, 2, {{Monomial::unit(), "1"}, {mono_c({1, 1}), "-1"}});
  CHECK(truncated_product(a, b, 2) == expect);
}

TEST_CASE("truncated_product: series inverse pair multiplies to 1") {
  GradedSeries a = make(1, 3, {{Monomial::unit(), "1"},
                               {mono_c({1}), "1"},
                               {mono_c({2}), "1"},
                               {mono_c({3}), "1"}});
  GradedSeries inv = series_inverse(a, 3);
  // 1 - c_1 + (c_1^2 - c_2) + ...
  CHECK(inv.coeff(mono_c({1})) == rational(-1));
  CHECK(inv.coeff(mono_c({1, 1})) == rational(1));
  CHECK(inv.coeff(mono_c({2})) == rational(-1));
  CHECK(truncated_product(a, inv, 3) == GradedSeries::constant(1, 3, 1));
}

TEST_CASE("truncated_product: truncation discards high terms") {
  GradedSeries s0 = make(1, 1, {{mono_s({}), "1"}});
  CHECK(truncated_product(s0, s0, 1).is_zero());
}

TEST_CASE("truncated_product: mismatched l is an error") {
  GradedSeries a = GradedSeries::constant(1, 2, 1);
  GradedSeries b = GradedSeries::constant(2, 2, 1);
  CHECK_THROWS_AS(truncated_product(a, b, 2), Error);
}

TEST_CASE("series_exp: exp(0) = 1 and nonzero constant is rejected") {
  CHECK(series_exp(GradedSeries::zero(1, 4), 4) == GradedSeries::constant(1, 4, 1));
  CHECK_THROWS_AS(series_exp(GradedSeries::constant(1, 4, 1), 4), Error);
}

TEST_CASE("series_exp matches the printed 1 - exp(master prefix) to degree 3") {
  GradedSeries master = make(1, 3, {{mono_s({}), "-1"},
                                    {mono_s({1}), "1/2"},
                                    {mono_s({2}), "7/6"},
                                    {mono_s({1, 1}), "-1/3"}});
  GradedSeries one_minus = sub(GradedSeries::constant(1, 3, 1), series_exp(master, 3));
  GradedSeries expect = make(1, 3, {{mono_s({}), "1"},
                                    {mono_s({1}), "-1/2"},
                                    {mono_s({}).pow(2), "-1/2"},
                                    {mono_s({2}), "-7/6"},
                                    {mono_s({1, 1}), "1/3"},
                                    {mono_s({1}).times(mono_s({})), "1/2"},
                                    {mono_s({}).pow(3), "1/6"}});
  CHECK(one_minus == expect);
}

TEST_CASE("series_exp agrees with the naive power-sum oracle") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    GradedSeries p = random_s_series(rng, 1, 4, 3);
    CHECK(series_exp(p, 4) == naive_exp(p, 4));
  }
}

TEST_CASE("series_log: log(1) = 0 and constant term 1 is required") {
  CHECK(series_log(GradedSeries::constant(1, 3, 1), 3).is_zero());
  CHECK_THROWS_AS(series_log(GradedSeries::zero(1, 3), 3), Error);
  CHECK_THROWS_AS(series_log(GradedSeries::constant(1, 3, 2), 3), Error);
}

TEST_CASE("series_log inverts the degree-2 exponential from the oracle") {
  GradedSeries p = make(1, 2, {{mono_s({}), "-1"}, {mono_s({1}), "1/2"}});
  GradedSeries e = naive_exp(p, 2);
  // 1 - s_0 + (1/2 s_1 + 1/2 s_0^2)
  GradedSeries expect_e = make(1, 2, {{Monomial::unit(), "1"},
                                      {mono_s({}), "-1"},
                                      {mono_s({1}), "1/2"},
                                      {mono_s({}).pow(2), "1/2"}});
  REQUIRE(e == expect_e);
  CHECK(series_log(e, 2) == p);
}

TEST_CASE("exp and log are mutually inverse on random series") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 6; ++trial) {
    GradedSeries p = random_s_series(rng, 1, 5, 4);
    CHECK(series_log(series_exp(p, 5), 5) == p);
    GradedSeries q = add(GradedSeries::constant(1, 5, 1), p);
    CHECK(series_exp(series_log(q, 5), 5) == q);
  }
}

TEST_CASE("graded_component selects exact degrees") {
  GradedSeries p = make(1, 3, {{Monomial::unit(), "1"}, {mono_s({}), "1"}, {mono_s({1}), "1"}});
  GradedSeries deg2 = graded_component(p, 2);
  CHECK(deg2.terms.size() == 1);
  CHECK(deg2.coeff(mono_s({1})) == rational(1));
}

TEST_CASE("graded_component of the bundled master at degree 3") {
  GradedSeries master = fixtures::master_l1();
  GradedSeries deg3 = graded_component(master, 3);
  GradedSeries expect = make(1, 15, {{mono_s({2}), "7/6"}, {mono_s({1, 1}), "-1/3"}});
  CHECK(deg3 == expect);
}

TEST_CASE("components sum back to the series") {
  std::mt19937 rng(3);
  GradedSeries p = random_cs_series(rng, 1, 5);
  GradedSeries sum = GradedSeries::zero(1, 5);
  for (int r = 0; r <= 5; ++r) sum = add(sum, graded_component(p, r));
  CHECK(sum == p);
  CHECK(graded_upto(p, 3) == [&] {
    GradedSeries s = GradedSeries::zero(1, 3);
    for (int r = 0; r <= 3; ++r)
      for (const auto& [m, c] : graded_component(p, r).terms) s.add_term(m, c);
    return s;
  }());
}

TEST_CASE("substitute_s: single image") {
  GradedSeries p = make(1, 3, {{mono_s({1}), "1"}});
  SubstitutionMap images;
  GradedSeries beta2 = make(1, 3, {{mono_x({0, 0}), "1"}});
  images.s_images.emplace(Partition({1}), beta2);
  CHECK(substitute_s(p, images, 3) == make(1, 3, {{mono_x({0, 0}), "1"}}));
}

TEST_CASE("substitute_s rejects missing and inhomogeneous images") {
  GradedSeries p = make(1, 3, {{mono_s({1}), "1"}});
  SubstitutionMap none;
  CHECK_THROWS_AS(substitute_s(p, none, 3), Error);
  SubstitutionMap bad;
  bad.s_images.emplace(Partition({1}), make(1, 3, {{mono_x({0}), "1"}}));  // degree 1, want 2
  CHECK_THROWS_AS(substitute_s(p, bad, 3), Error);
}

TEST_CASE("substitute_s is a ring homomorphism") {
  std::mt19937 rng(19);
  SubstitutionMap images;
  images.s_images.emplace(Partition(), make(1, 6, {{mono_x({0}), "2"}}));
  images.s_images.emplace(Partition({1}), make(1, 6, {{mono_x({0, 1}), "1"}, {mono_x({1, 1}), "-1"}}));
  images.s_images.emplace(Partition({2}), make(1, 6, {{mono_x({0, 0, 1}), "1/2"}}));
  images.s_images.emplace(Partition({1, 1}), make(1, 6, {{mono_x({0, 1, 1}), "3"}}));
  for (int trial = 0; trial < 4; ++trial) {
    GradedSeries p = random_s_series(rng, 1, 3, 2);
    GradedSeries q = random_s_series(rng, 1, 3, 2);
    GradedSeries lhs = substitute_s(truncated_product(p, q, 6), images, 6);
    GradedSeries rhs = truncated_product(substitute_s(p, images, 6),
                                         substitute_s(q, images, 6), 6);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("no zero coefficients are ever stored") {
  std::mt19937 rng(23);
  GradedSeries p = random_cs_series(rng, 1, 5);
  GradedSeries zero = add(p, negate(p));
  CHECK(zero.terms.empty());
  GradedSeries scaled = scale(p, Rational(0));
  CHECK(scaled.terms.empty());
}

TEST_CASE("product components satisfy the convolution identity") {
  std::mt19937 rng(29);
  GradedSeries p = random_cs_series(rng, 1, 5);
  GradedSeries q = random_cs_series(rng, 1, 5);
  GradedSeries prod = truncated_product(p, q, 5);
  for (int r = 0; r <= 5; ++r) {
    GradedSeries conv = GradedSeries::zero(1, 5);
    for (int i = 0; i <= r; ++i)
      conv = add(conv, truncated_product(graded_component(p, i),
                                         graded_component(q, r - i), 5));
    CHECK(graded_component(prod, r) == conv);
  }
}

TEST_CASE("serialization round-trips bit-exactly") {
  std::mt19937 rng(31);
  GradedSeries p = random_cs_series(rng, 2, 6);
  p.add_term(Monomial::of(Variable::t("A0"), 2), parse_rational("-5/4"));
  const Json j = series_to_json(p);
  CHECK(series_from_json(j) == p);
  CHECK(json_dump(series_to_json(series_from_json(j))) == json_dump(j));
}

TEST_CASE("rendering matches the printed style") {
  GradedSeries p = make(1, 6, {{mono_s({}), "-1"},
                               {mono_s({1}), "1/2"},
                               {mono_s({2}), "7/6"},
                               {mono_s({1, 1}), "-1/3"}});
  CHECK(render(p) == "-s_0 + 1/2 s_1 + 7/6 s_2 - 1/3 s_{11}");
  GradedSeries q = make(1, 6, {{mono_c({2, 1, 1}), "-2"}, {mono_c({3}).times(mono_s({})), "2"}});
  CHECK(render(q) == "-2 c_{211} + 2 c_3 s_0");
  RenderOptions compress;
  compress.compress_exponents = true;
  GradedSeries r = make(1, 6, {{mono_s({3, 1, 1}), "11/12"}});
  CHECK(render(r, compress) == "11/12 s_{31^2}");
}
