#include <doctest.h>

#include "core/equivariant.hpp"
#include "core/errors.hpp"
#include "core/fixtures.hpp"
#include "helpers.hpp"

using namespace ssmthom;
using namespace testutil;

namespace {

PrototypeModel bundled(const std::string& name, int l) {
  const Catalog cat = fixtures::catalog();
  for (const auto& e : cat.entries())
    if (e.name == name && e.l == l && e.maximal_torus) return build_prototype(e);
  FAIL("no bundled entry");
  return {};
}

}  // namespace

TEST_CASE("relative Chern class of the I22 prototype") {
  const PrototypeModel m = bundled("I22", 1);
  const TorusPolynomial c = relative_chern(m, 2);
  // 1 + (a+b+c) + (-a^2 - b^2 + ab + ac + bc)
  GradedSeries expect = make(1, 2, {{Monomial::unit(), "1"},
                                    {mono_x({0}), "1"},
                                    {mono_x({1}), "1"},
                                    {mono_x({2}), "1"},
                                    {mono_x({0, 0}), "-1"},
                                    {mono_x({1, 1}), "-1"},
                                    {mono_x({0, 1}), "1"},
                                    {mono_x({0, 2}), "1"},
                                    {mono_x({1, 2}), "1"}});
  CHECK(c == expect);
}

TEST_CASE("relative Chern class of the A0 prototype") {
  const PrototypeModel m = bundled("A0", 1);
  const TorusPolynomial c = relative_chern(m, 3);
  CHECK(c == make(1, 3, {{Monomial::unit(), "1"}, {mono_x({0}), "1"}}));
}

TEST_CASE("relative Chern class is multiplicative over disjoint weight unions") {
  const PrototypeModel a = bundled("A1", 1);
  PrototypeModel b = bundled("A2", 1);
  // shift b's characters into fresh slots and take the union
  PrototypeModel uni = a;
  uni.rank = a.rank + b.rank;
  auto widen = [&](const std::vector<WeightVector>& src, int offset, int rank) {
    std::vector<WeightVector> out;
    for (const auto& w : src) {
      WeightVector v(rank, 0);
      for (std::size_t i = 0; i < w.size(); ++i) v[offset + i] = w[i];
      out.push_back(v);
    }
    return out;
  };
  uni.source_weights = widen(a.source_weights, 0, uni.rank);
  uni.target_weights = widen(a.target_weights, 0, uni.rank);
  for (auto& w : widen(b.source_weights, a.rank, uni.rank)) uni.source_weights.push_back(w);
  for (auto& w : widen(b.target_weights, a.rank, uni.rank)) uni.target_weights.push_back(w);

  PrototypeModel a_wide = a, b_wide = b;
  a_wide.source_weights = widen(a.source_weights, 0, uni.rank);
  a_wide.target_weights = widen(a.target_weights, 0, uni.rank);
  b_wide.source_weights = widen(b.source_weights, a.rank, uni.rank);
  b_wide.target_weights = widen(b.target_weights, a.rank, uni.rank);

  const int k = 4;
  CHECK(relative_chern(uni, k) ==
        truncated_product(relative_chern(a_wide, k), relative_chern(b_wide, k), k));
}

TEST_CASE("Euler ratios") {
  // I22 -> 4c
  CHECK(euler_ratio(bundled("I22", 1)) ==
        make(1, 1, {{mono_x({2}), "4"}}));
  // A0 at l=2 -> b1 b2
  CHECK(euler_ratio(bundled("A0", 2)) == make(2, 2, {{mono_x({0, 1}), "1"}}));
  // A1 at l=1 -> 2 beta
  CHECK(euler_ratio(bundled("A1", 1)) == make(1, 1, {{mono_x({1}), "2"}}));
}

TEST_CASE("evaluate s_211 at the I22 prototype") {
  const PrototypeModel m = bundled("I22", 1);
  GradedSeries s211 = make(1, 5, {{mono_s({2, 1, 1}), "1"}});
  const TorusPolynomial got = evaluate_at_prototype(s211, m, 5);
  // 4c (-a^2-b^2+ab+ac+bc)(a+b+c)^2
  TorusPolynomial eu = make(1, 5, {{mono_x({2}), "4"}});
  TorusPolynomial c2 = make(1, 5, {{mono_x({0, 0}), "-1"},
                                   {mono_x({1, 1}), "-1"},
                                   {mono_x({0, 1}), "1"},
                                   {mono_x({0, 2}), "1"},
                                   {mono_x({1, 2}), "1"}});
  TorusPolynomial c1 = make(1, 5, {{mono_x({0}), "1"}, {mono_x({1}), "1"}, {mono_x({2}), "1"}});
  TorusPolynomial expect =
      truncated_product(truncated_product(eu, c2, 5), truncated_product(c1, c1, 5), 5);
  CHECK(got == expect);
}

TEST_CASE("evaluate s_1 at the A0 prototype gives beta^2") {
  const PrototypeModel m = bundled("A0", 1);
  GradedSeries s1 = make(1, 3, {{mono_s({1}), "1"}});
  CHECK(evaluate_at_prototype(s1, m, 3) == make(1, 3, {{mono_x({0, 0}), "1"}}));
}

TEST_CASE("evaluate the constant series") {
  const PrototypeModel m = bundled("A2", 1);
  CHECK(evaluate_at_prototype(GradedSeries::constant(1, 4, 1), m, 4) ==
        GradedSeries::constant(1, 4, 1));
}

TEST_CASE("evaluate_at_prototype is a ring homomorphism") {
  const PrototypeModel m = bundled("A1", 1);
  std::mt19937 rng(41);
  for (int trial = 0; trial < 4; ++trial) {
    GradedSeries p = random_cs_series(rng, 1, 4);
    GradedSeries q = random_cs_series(rng, 1, 4);
    CHECK(evaluate_at_prototype(truncated_product(p, q, 4), m, 4) ==
          truncated_product(evaluate_at_prototype(p, m, 4),
                            evaluate_at_prototype(q, m, 4), 4));
  }
}

TEST_CASE("evaluated s_lambda is homogeneous of degree l + |lambda|") {
  for (const char* name : {"A1", "A2", "I22"}) {
    const PrototypeModel m = bundled(name, 1);
    GradedSeries s = make(1, 6, {{mono_s({2, 1}), "1"}});
    const TorusPolynomial v = evaluate_at_prototype(s, m, 6);
    for (int r = 0; r < 4; ++r) CHECK(graded_component(v, r).is_zero());
    CHECK_FALSE(graded_component(v, 4).is_zero());
  }
}

TEST_CASE("ssm class of the origin") {
  const TorusPolynomial o = ssm_origin(1, {{1}}, 3);
  CHECK(o == make(1, 3, {{mono_x({0}), "1"}, {mono_x({0, 0}), "-1"}, {mono_x({0, 0, 0}), "1"}}));

  const TorusPolynomial o2 = ssm_origin(2, {{1, 0}, {0, 1}}, 3);
  CHECK(graded_component(o2, 2) == make(2, 3, {{mono_x({0, 1}), "1"}}));
  CHECK(graded_component(o2, 3) ==
        make(2, 3, {{mono_x({0, 0, 1}), "-1"}, {mono_x({0, 1, 1}), "-1"}}));
  CHECK_THROWS_AS(ssm_origin(1, {{0}}, 3), Error);
}

TEST_CASE("ssm_origin times the total Chern class gives the Euler class exactly") {
  const std::vector<WeightVector> w = {{1, 0}, {2, -1}};
  const int k = 5;
  const TorusPolynomial o = ssm_origin(1, w, k);
  const TorusPolynomial total = total_chern_of_weights(w, 1, k);
  TorusPolynomial eu = GradedSeries::constant(1, k, 1);
  for (const auto& v : w) eu = truncated_product(eu, linear_form(v, 1, k), k);
  CHECK(truncated_product(o, total, k) == eu);
}

TEST_CASE("relative chern satisfies the clearing identity") {
  const PrototypeModel m = bundled("I23", 1);
  const int k = 6;
  const TorusPolynomial c = relative_chern(m, k);
  CHECK(truncated_product(c, total_chern_of_weights(m.source_weights, 1, k), k) ==
        total_chern_of_weights(m.target_weights, 1, k));
}

TEST_CASE("non-divisible Euler ratios are an error, not a fallback") {
  PrototypeModel m;
  m.l = 1;
  m.rank = 2;
  m.source_weights = {{1, 1}};
  m.target_weights = {{1, 0}, {0, 1}};
  m.scodim = 1;
  m.tcodim = 2;
  CHECK_THROWS_AS(static_cast<void>(euler_ratio(m)), Error);
}
