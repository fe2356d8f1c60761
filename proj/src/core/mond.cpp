#include "core/mond.hpp"

#include <algorithm>

#include "core/errors.hpp"

namespace ssmthom {

void WeightData::validate() const {
  if (m < 1 || m > 14)
    fail(ErrorKind::InvalidArgument,
         "source dimension m must be in 1..14, got " + std::to_string(m));
  if (static_cast<int>(weights.size()) != m)
    fail(ErrorKind::InvalidArgument, "expected m weights");
  if (static_cast<int>(degrees.size()) != m + 1)
    fail(ErrorKind::InvalidArgument, "expected m+1 degrees");
  for (long w : weights)
    if (w <= 0) fail(ErrorKind::InvalidArgument, "weights must be positive");
  for (long d : degrees)
    if (d <= 0) fail(ErrorKind::InvalidArgument, "degrees must be positive");
}

const GradedSeries& KPolynomialSet::at(int d) const {
  if (d < 1 || d > max_degree)
    fail(ErrorKind::InvalidArgument, "K_" + std::to_string(d) + " is out of range");
  return k[d - 1];
}

Json KPolynomialSet::to_json() const {
  Json j = Json::object();
  j["max_degree"] = max_degree;
  j["provenance"] = provenance;
  Json arr = Json::array();
  for (int d = 1; d <= max_degree; ++d) {
    Json e = Json::object();
    e["d"] = d;
    e["series"] = series_to_json(k[d - 1]);
    arr.push_back(std::move(e));
  }
  j["k"] = std::move(arr);
  return j;
}

KPolynomialSet KPolynomialSet::from_json(const Json& j, const std::string& context) {
  if (!j.is_object() || !j.contains("max_degree") || !j.contains("k"))
    fail(ErrorKind::Schema, context + ": needs 'max_degree' and 'k'");
  KPolynomialSet out;
  out.max_degree = j["max_degree"].get<int>();
  out.provenance = j.value("provenance", std::string());
  out.k.assign(out.max_degree, GradedSeries::zero(1, 0));
  int seen = 0;
  for (const auto& e : j["k"]) {
    const int d = e["d"].get<int>();
    if (d < 1 || d > out.max_degree) fail(ErrorKind::Schema, context + ": K index out of range");
    out.k[d - 1] = series_from_json(e["series"], context + ".k[" + std::to_string(d) + "]");
    ++seen;
  }
  if (seen != out.max_degree) fail(ErrorKind::Schema, context + ": missing K polynomials");
  return out;
}

KPolynomialSet k_polynomials(const GradedSeries& master_l1, int max_degree) {
  if (master_l1.l != 1)
    fail(ErrorKind::InvalidArgument, "K polynomials are defined for the l = 1 master series");
  if (max_degree < 1 || max_degree > 15)
    fail(ErrorKind::InvalidArgument, "K polynomial degree must be in 1..15");
  if (master_l1.trunc < max_degree)
    fail(ErrorKind::InvalidArgument,
         "master series truncation " + std::to_string(master_l1.trunc) +
             " is below the requested degree " + std::to_string(max_degree));

  // Substitute s_lambda -> s_0 c_{lambda_1}...c_{lambda_r} first; the
  // substitution is a ring homomorphism, so it commutes with exp.
  SubstitutionMap images;
  for (const auto& [m, c] : master_l1.terms) {
    const Partition& lambda = m.factors().front().first.partition;
    if (images.s_images.count(lambda)) continue;
    Monomial img = Monomial::of(Variable::s(Partition()));
    for (int part : lambda.parts()) img = img.times(Monomial::of(Variable::chern(part)));
    GradedSeries s = GradedSeries::zero(1, max_degree);
    s.add_term(img, Rational(1));
    images.s_images.emplace(lambda, std::move(s));
  }
  const GradedSeries substituted = substitute_s(graded_upto(master_l1, max_degree), images,
                                                max_degree);
  const GradedSeries one_minus_exp =
      sub(GradedSeries::constant(1, max_degree, 1), series_exp(substituted, max_degree));

  KPolynomialSet out;
  out.max_degree = max_degree;
  out.provenance = "computed from master series (l=1)";
  for (int d = 1; d <= max_degree; ++d) {
    GradedSeries kd = graded_component(one_minus_exp, d);
    kd.trunc = d;
    for (const auto& [m, c] : kd.terms)
      if (m.sdegree() < 1)
        fail(ErrorKind::InvalidArgument, "K_" + std::to_string(d) + " is not divisible by s_0");
    out.k.push_back(std::move(kd));
  }
  return out;
}

Rational elementary_symmetric(const std::vector<long>& values, int k) {
  if (k < 0) return Rational(0);
  if (k == 0) return Rational(1);
  if (k > static_cast<int>(values.size())) return Rational(0);
  // dp[j] = e_j of the prefix processed so far.
  std::vector<Rational> dp(k + 1, Rational(0));
  dp[0] = 1;
  for (long v : values)
    for (int j = k; j >= 1; --j) dp[j] += Rational(v) * dp[j - 1];
  return dp[k];
}

Rational complete_homogeneous(const std::vector<long>& values, int k) {
  if (k < 0) return Rational(0);
  if (k == 0) return Rational(1);
  // dp over variables: h_k(x_1..x_i) = h_k(x_1..x_{i-1}) + x_i h_{k-1}(x_1..x_i).
  std::vector<Rational> dp(k + 1, Rational(0));
  dp[0] = 1;
  for (long v : values)
    for (int j = 1; j <= k; ++j) dp[j] += Rational(v) * dp[j - 1];
  return dp[k];
}

namespace {

Rational evaluate_k(const GradedSeries& kd, const Rational& s0,
                    const std::vector<Rational>& c) {
  Rational total(0);
  for (const auto& [m, coef] : kd.terms) {
    Rational term = coef;
    for (const auto& [v, e] : m.factors()) {
      Rational base(0);
      if (v.kind == VarKind::SVar && v.partition.empty()) {
        base = s0;
      } else if (v.kind == VarKind::Chern) {
        base = v.index < static_cast<int>(c.size()) ? c[v.index] : Rational(0);
      } else {
        fail(ErrorKind::InvalidArgument, "K polynomial contains an unexpected variable");
      }
      for (int i = 0; i < e; ++i) term *= base;
    }
    total += term;
  }
  return total;
}

}  // namespace

MilnorResult image_milnor(const WeightData& data, const KPolynomialSet& kset) {
  data.validate();
  const int m = data.m;
  if (kset.max_degree < m + 1)
    fail(ErrorKind::InvalidArgument, "K polynomials cover degrees up to " +
                                         std::to_string(kset.max_degree) + "; need " +
                                         std::to_string(m + 1));
  const Rational em_alpha = elementary_symmetric(data.weights, m);
  const Rational s0 = elementary_symmetric(data.degrees, m + 1) / em_alpha;
  std::vector<Rational> c(m + 1, Rational(0));
  for (int j = 1; j <= m; ++j) {
    Rational acc(0);
    for (int i = 0; i <= j; ++i) {
      Rational part = elementary_symmetric(data.degrees, i) *
                      complete_homogeneous(data.weights, j - i);
      if ((j - i) % 2 != 0) part = -part;
      acc += part;
    }
    c[j] = acc;
  }

  const Rational em1_beta = elementary_symmetric(data.degrees, m + 1);
  Rational rhs(0);
  for (int i = 1; i <= m + 1; ++i)
    rhs += evaluate_k(kset.at(i), s0, c) * elementary_symmetric(data.degrees, m + 1 - i);
  rhs /= em1_beta;

  MilnorResult out;
  out.rhs = rhs;
  out.mu = rhs - 1;
  if (m % 2 != 0) out.mu = -out.mu;
  out.verdict = (is_integer(out.mu) && out.mu >= 0) ? MilnorVerdict::Valid
                                                    : MilnorVerdict::Rejected;
  return out;
}

bool pp_crosscheck(const KPolynomialSet& kset, const std::vector<GradedSeries>& L) {
  if (kset.max_degree < 6)
    fail(ErrorKind::InvalidArgument, "pp_crosscheck needs K_1..K_6");
  if (L.size() < 6) fail(ErrorKind::InvalidArgument, "pp_crosscheck needs L_0..L_5");
  const int k = 6;
  const Monomial s0 = Monomial::of(Variable::s(Partition()));
  for (int j = 0; j <= 5; ++j) {
    GradedSeries lhs = GradedSeries::zero(1, k);
    for (const auto& [m, c] : L[j].terms) lhs.add_term(m.times(s0), c);
    GradedSeries rhs = GradedSeries::zero(1, k);
    for (int i = 0; i <= j; ++i) {
      GradedSeries ki = kset.at(j + 1 - i);
      ki.trunc = k;
      if (i == 0) {
        rhs = add(rhs, ki);
      } else {
        GradedSeries ci = GradedSeries::zero(1, k);
        ci.add_term(Monomial::of(Variable::chern(i)), Rational(1));
        rhs = add(rhs, truncated_product(ki, ci, k));
      }
    }
    lhs.trunc = rhs.trunc = k;
    if (!(lhs == rhs)) return false;
  }
  return true;
}

}  // namespace ssmthom
