#pragma once

#include <vector>

#include "core/series.hpp"
#include "core/series_json.hpp"

namespace ssmthom {

// Quasihomogeneous germ data (C^m, 0) -> (C^{m+1}, 0): m source weights and
// m+1 target degrees, all positive, m <= 14.
struct WeightData {
  int m = 0;
  std::vector<long> weights;  // alpha_1..alpha_m
  std::vector<long> degrees;  // beta_1..beta_{m+1}

  void validate() const;
};

// K_1..K_D: graded parts of 1 - exp(master series) after s_lambda ->
// s_0 c_{lambda_1} ... c_{lambda_r}; each K_d is homogeneous of degree d
// under deg(s_0) = 1, deg(c_i) = i, and divisible by s_0.
struct KPolynomialSet {
  int max_degree = 0;
  std::string provenance;
  std::vector<GradedSeries> k;  // k[d-1] = K_d

  const GradedSeries& at(int d) const;
  Json to_json() const;
  static KPolynomialSet from_json(const Json& j, const std::string& context = "kpolys");
};

KPolynomialSet k_polynomials(const GradedSeries& master_l1, int max_degree);

enum class MilnorVerdict { Valid, Rejected };

struct MilnorResult {
  Rational rhs;      // (1/e_{m+1}(beta)) sum K_i e_{m+1-i}(beta)
  Rational mu;       // (-1)^m (rhs - 1)
  MilnorVerdict verdict = MilnorVerdict::Rejected;
};

// Exact image Milnor number of the germ with the given weights and degrees;
// Rejected when the value is not a nonnegative integer (then no finite
// quasihomogeneous germ with those data exists).
MilnorResult image_milnor(const WeightData& data, const KPolynomialSet& kset);

// Coefficientwise identity s_0 (L_0 + L_1 t + ... + L_5 t^5) =
// (K_1 + ... + K_6 t^5)(1 + c_1 t + ... + c_5 t^5) through t^5.
bool pp_crosscheck(const KPolynomialSet& kset, const std::vector<GradedSeries>& L);

// Symmetric-polynomial helpers over exact rationals.
Rational elementary_symmetric(const std::vector<long>& values, int k);
Rational complete_homogeneous(const std::vector<long>& values, int k);

}  // namespace ssmthom
