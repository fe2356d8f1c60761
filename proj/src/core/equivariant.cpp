#include "core/equivariant.hpp"

#include <algorithm>

#include "core/errors.hpp"

namespace ssmthom {

TorusPolynomial linear_form(const WeightVector& w, int l, int trunc) {
  TorusPolynomial out = GradedSeries::zero(l, trunc);
  for (std::size_t j = 0; j < w.size(); ++j)
    if (w[j] != 0) out.add_term(Monomial::of(Variable::x(static_cast<int>(j))), Rational(w[j]));
  return out;
}

TorusPolynomial total_chern_of_weights(const std::vector<WeightVector>& weights, int l, int k) {
  TorusPolynomial out = GradedSeries::constant(l, k, 1);
  for (const auto& w : weights) {
    TorusPolynomial f = linear_form(w, l, k);
    f.add_term(Monomial::unit(), Rational(1));
    out = truncated_product(out, f, k);
  }
  return out;
}

namespace {

// Multiset difference of the prototype weights: shared unfolding weights (and
// any other coincidences) cancel exactly before division.
std::pair<std::vector<WeightVector>, std::vector<WeightVector>> cancelled_weights(
    const PrototypeModel& p) {
  std::vector<WeightVector> target = p.target_weights;
  std::vector<WeightVector> source;
  for (const auto& w : p.source_weights) {
    auto it = std::find(target.begin(), target.end(), w);
    if (it != target.end())
      target.erase(it);
    else
      source.push_back(w);
  }
  return {source, target};
}

int xvar_exponent(const Monomial& m, const Variable& x) {
  for (const auto& [v, f] : m.factors())
    if (v == x) return f;
  return 0;
}

}  // namespace

TorusPolynomial relative_chern(const PrototypeModel& p, int k) {
  const auto [source, target] = cancelled_weights(p);
  TorusPolynomial num = total_chern_of_weights(target, p.l, k);
  TorusPolynomial den = total_chern_of_weights(source, p.l, k);
  return truncated_product(num, series_inverse(den, k), k);
}

TorusPolynomial divide_by_linear(const TorusPolynomial& poly, const WeightVector& w) {
  // Synthetic division in the highest-index character of w: the divisor is
  // monic up to the constant w[pivot], so each pass strips the top exponent.
  int pivot = -1;
  for (int j = static_cast<int>(w.size()) - 1; j >= 0; --j)
    if (w[j] != 0) {
      pivot = j;
      break;
    }
  if (pivot < 0) fail(ErrorKind::InvalidArgument, "division by the zero linear form");
  const Rational lead(w[pivot]);
  const Variable xp = Variable::x(pivot);
  const TorusPolynomial lf = linear_form(w, poly.l, poly.trunc);

  TorusPolynomial quotient = GradedSeries::zero(poly.l, poly.trunc);
  TorusPolynomial rest = poly;
  while (!rest.is_zero()) {
    int best = 0;
    for (const auto& [m, c] : rest.terms) best = std::max(best, xvar_exponent(m, xp));
    if (best == 0) fail(ErrorKind::NonDivisible, "polynomial is not divisible by the linear form");
    TorusPolynomial chunk = GradedSeries::zero(poly.l, poly.trunc);
    for (const auto& [m, c] : rest.terms) {
      if (xvar_exponent(m, xp) != best) continue;
      Monomial reduced;
      for (const auto& [v, f] : m.factors())
        reduced = reduced.times(Monomial::of(v, v == xp ? f - 1 : f));
      chunk.add_term(reduced, c / lead);
    }
    quotient = add(quotient, chunk);
    rest = sub(rest, truncated_product(chunk, lf, poly.trunc));
  }
  return quotient;
}

TorusPolynomial euler_ratio(const PrototypeModel& p) {
  const auto [source, target] = cancelled_weights(p);
  for (const auto& w : source)
    if (std::all_of(w.begin(), w.end(), [](long x) { return x == 0; }))
      fail(ErrorKind::InvalidArgument, "zero source weight in Euler ratio");
  const int deg = static_cast<int>(target.size());
  TorusPolynomial num = GradedSeries::constant(p.l, deg, 1);
  for (const auto& w : target) num = truncated_product(num, linear_form(w, p.l, deg), deg);
  for (const auto& w : source) num = divide_by_linear(num, w);
  num.trunc = p.l;  // homogeneous of degree l
  return num;
}

TorusPolynomial evaluate_at_prototype(const GradedSeries& series, const PrototypeModel& p,
                                      int k) {
  if (series.l != p.l)
    fail(ErrorKind::InvalidArgument, "series and prototype have different relative dimensions");
  for (const auto& [m, c] : series.terms)
    if (m.has_kind(VarKind::TVar))
      fail(ErrorKind::InvalidArgument, "evaluate_at_prototype: t-variables are not allowed");

  const TorusPolynomial chern = relative_chern(p, k);
  TorusPolynomial eu = euler_ratio(p);
  eu.trunc = k;

  SubstitutionMap images;
  std::vector<TorusPolynomial> chern_comp(k + 1, GradedSeries::zero(p.l, k));
  for (int i = 1; i <= k; ++i) chern_comp[i] = graded_component(chern, i);
  for (int i = 1; i <= k; ++i) images.c_images.emplace(i, chern_comp[i]);
  for (const auto& [m, c] : series.terms) {
    for (const auto& [v, e] : m.factors()) {
      if (v.kind != VarKind::SVar || images.s_images.count(v.partition)) continue;
      TorusPolynomial img = eu;
      for (int part : v.partition.parts()) {
        if (part > k) {
          img = GradedSeries::zero(p.l, k);
          break;
        }
        img = truncated_product(img, chern_comp[part], k);
      }
      images.s_images.emplace(v.partition, img);
    }
  }
  return substitute_s(series, images, k);
}

TorusPolynomial ssm_origin(int l, const std::vector<WeightVector>& weights, int k) {
  TorusPolynomial num = GradedSeries::constant(l, k, 1);
  for (const auto& w : weights) {
    if (std::all_of(w.begin(), w.end(), [](long x) { return x == 0; }))
      fail(ErrorKind::InvalidArgument, "ssm_origin: zero weight");
    num = truncated_product(num, linear_form(w, l, k), k);
  }
  const TorusPolynomial den = total_chern_of_weights(weights, l, k);
  return truncated_product(num, series_inverse(den, k), k);
}

}  // namespace ssmthom
