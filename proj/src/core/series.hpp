#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/partition.hpp"
#include "core/rational.hpp"

namespace ssmthom {

// Variable kinds, in canonical order. Cohomological degrees:
//   c_i -> i,  s_lambda -> l + |lambda|,  t_eta -> 0,  x_j -> 1.
enum class VarKind { Chern, SVar, TVar, XVar };

struct Variable {
  VarKind kind = VarKind::Chern;
  int index = 0;        // Chern / XVar
  Partition partition;  // SVar
  std::string token;    // TVar: monosingularity name

  static Variable chern(int i);
  static Variable s(Partition lambda);
  static Variable t(std::string token);
  static Variable x(int j);

  std::strong_ordering operator<=>(const Variable& other) const;
  bool operator==(const Variable& other) const = default;
};

// Multiset of variables, kept as a sorted (variable, exponent) list.
class Monomial {
public:
  Monomial() = default;  // the unit monomial

  static Monomial unit() { return Monomial(); }
  static Monomial of(const Variable& v, int exponent = 1);

  const std::vector<std::pair<Variable, int>>& factors() const { return factors_; }
  bool is_unit() const { return factors_.empty(); }

  int degree(int l) const;   // cohomological degree
  int sdegree() const;       // number of S factors with multiplicity
  bool has_kind(VarKind kind) const;
  // S-variable partition multiset is ignored here: multiplicity per token.
  std::vector<std::pair<std::string, int>> t_part() const;

  Monomial times(const Monomial& other) const;
  Monomial pow(int e) const;
  // Splits off all factors of the given kind; returns (that part, the rest).
  std::pair<Monomial, Monomial> split(VarKind kind) const;

  std::strong_ordering operator<=>(const Monomial& other) const;
  bool operator==(const Monomial& other) const = default;

private:
  std::vector<std::pair<Variable, int>> factors_;
};

// Truncated power series over exact rationals, graded by cohomological
// degree. Zero coefficients are never stored; `trunc` is the degree bound k
// below which the stored coefficients are authoritative.
struct GradedSeries {
  int l = 1;
  int trunc = 0;
  std::map<Monomial, Rational> terms;

  static GradedSeries zero(int l, int trunc);
  static GradedSeries constant(int l, int trunc, const Rational& value);

  bool is_zero() const { return terms.empty(); }
  Rational coeff(const Monomial& m) const;
  Rational constant_term() const;
  void add_term(const Monomial& m, const Rational& coefficient);
  int min_degree() const;  // trunc + 1 when zero

  bool operator==(const GradedSeries& other) const;
};

// Terms with t-monomials not contained in the bound are dropped eagerly.
// Multiplicity map: token -> maximal exponent.
using TBound = std::map<std::string, int>;

GradedSeries add(const GradedSeries& a, const GradedSeries& b);
GradedSeries sub(const GradedSeries& a, const GradedSeries& b);
GradedSeries negate(const GradedSeries& a);
GradedSeries scale(const GradedSeries& a, const Rational& factor);

GradedSeries truncated_product(const GradedSeries& a, const GradedSeries& b, int k,
                               const TBound* tbound = nullptr);
GradedSeries truncated_product(const GradedSeries& a, const GradedSeries& b);

// Sum over n of p^n/n! truncated at k. Requires p to have no degree-zero part.
GradedSeries series_exp(const GradedSeries& p, int k, const TBound* tbound = nullptr);
// Inverse of series_exp; requires constant term 1 and no other degree-zero part.
GradedSeries series_log(const GradedSeries& p, int k);
// Multiplicative inverse; requires constant term 1.
GradedSeries series_inverse(const GradedSeries& p, int k, const TBound* tbound = nullptr);

GradedSeries graded_component(const GradedSeries& p, int r);
GradedSeries graded_upto(const GradedSeries& p, int r);

// Ring-homomorphic substitution, truncated at k. Every S variable of p must
// have an image; C variables keep themselves unless an image is supplied.
// Images must be homogeneous of the variable's cohomological degree.
struct SubstitutionMap {
  std::map<Partition, GradedSeries> s_images;
  std::map<int, GradedSeries> c_images;
};
GradedSeries substitute_s(const GradedSeries& p, const SubstitutionMap& images, int k);

// Human-readable rendering in the printed-table style: "-s_0 + 1/2 s_1 + ...".
struct RenderOptions {
  bool compress_exponents = false;
  // Names for x_j; defaults to a, b, c, ... then x5, x6, ...
  std::vector<std::string> x_names;
};
std::string render(const GradedSeries& p, const RenderOptions& opts = {});
std::string render(const Monomial& m, const RenderOptions& opts = {});

// Lcm of the reduced coefficient denominators in the degree-r component.
Integer component_common_denominator(const GradedSeries& p, int r);

}  // namespace ssmthom
