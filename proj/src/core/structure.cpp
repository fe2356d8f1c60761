#include "core/structure.hpp"

#include <algorithm>

#include "core/errors.hpp"

namespace ssmthom {

namespace {

Monomial t_monomial(const Multisingularity& m) {
  Monomial out;
  for (const auto& [token, mult] : m.entries())
    out = out.times(Monomial::of(Variable::t(token), mult));
  return out;
}

TBound t_bound(const Multisingularity& psi0) {
  TBound b;
  for (const auto& [token, mult] : psi0.entries()) b[token] = mult;
  return b;
}

GradedSeries strip_t_coefficient(const GradedSeries& e, const Multisingularity& psi, int l,
                                 int k) {
  // t_part() lists factors in variable order (token strings), which need not
  // match the multisingularity's algebra order; compare in string order.
  const auto want = [&] {
    std::vector<std::pair<std::string, int>> v;
    for (const auto& [token, mult] : psi.entries()) v.emplace_back(token, mult);
    std::sort(v.begin(), v.end());
    return v;
  }();
  GradedSeries out = GradedSeries::zero(l, k);
  for (const auto& [m, c] : e.terms) {
    if (m.t_part() != want) continue;
    auto [tpart, rest] = m.split(VarKind::TVar);
    out.add_term(rest, c);
  }
  return out;
}

}  // namespace

std::map<Multisingularity, GradedSeries> assemble_exponential(
    const Multisingularity& psi0,
    const std::function<GradedSeries(const Multisingularity&)>& component, int l, int k,
    const std::vector<Multisingularity>& psis) {
  GradedSeries gen = GradedSeries::zero(l, k);
  for (const auto& sub : psi0.submultisets()) {
    const GradedSeries s = component(sub);
    const Rational weight = Rational(1) / Rational(Integer(sub.aut_order()));
    const Monomial tm = t_monomial(sub);
    for (const auto& [m, c] : s.terms) gen.add_term(m.times(tm), c * weight);
  }
  const TBound bound = t_bound(psi0);
  const GradedSeries e = series_exp(gen, k, &bound);

  std::map<Multisingularity, GradedSeries> out;
  for (const auto& psi : psis) {
    GradedSeries a = strip_t_coefficient(e, psi, l, k);
    a = scale(a, Rational(Integer(psi.aut_order())));
    out.emplace(psi, std::move(a));
  }
  return out;
}

SeriesTable assemble_target(const SeriesTable& s_table, const Multisingularity& psi0, int k) {
  if (psi0.is_s_flavor())
    fail(ErrorKind::InvalidArgument, "assemble_target expects a T-multisingularity");
  if (s_table.flavor != TableFlavor::SLinear)
    fail(ErrorKind::InvalidArgument, "assemble_target expects an S-flavor table");
  if (k > s_table.trunc)
    fail(ErrorKind::InvalidArgument,
         "assemble_target: degree bound " + std::to_string(k) +
             " exceeds the table truncation " + std::to_string(s_table.trunc));
  const auto subs = psi0.submultisets();
  for (const auto& sub : subs) {
    const GradedSeries& s = s_table.at(sub);  // raises MissingEntry
    if (!is_s_linear(s))
      fail(ErrorKind::InvalidArgument, "entry '" + sub.render() + "' is not s-linear");
  }
  auto components = assemble_exponential(
      psi0, [&](const Multisingularity& sub) { return s_table.at(sub); }, s_table.l, k, subs);

  SeriesTable out;
  out.l = s_table.l;
  out.trunc = k;
  out.flavor = TableFlavor::ThomTarget;
  out.provenance = "solved";
  for (auto& [psi, series] : components) out.put(psi, std::move(series));
  return out;
}

GradedSeries assemble_source(const SeriesTable& r_table, const SeriesTable& s_table,
                             const Multisingularity& psi, int k) {
  if (!psi.is_s_flavor())
    fail(ErrorKind::InvalidArgument, "assemble_source expects an S-multisingularity");
  if (r_table.flavor != TableFlavor::RSeries || s_table.flavor != TableFlavor::SLinear)
    fail(ErrorKind::InvalidArgument, "assemble_source expects an R-table and an S-table");
  if (r_table.l != s_table.l)
    fail(ErrorKind::InvalidArgument, "table relative dimensions differ");
  const int l = s_table.l;
  if (k > s_table.trunc || k > r_table.trunc - l)
    fail(ErrorKind::InvalidArgument,
         "assemble_source: degree bound " + std::to_string(k) +
             " exceeds the table coverage (S through " + std::to_string(s_table.trunc) +
             ", R through " + std::to_string(r_table.trunc - l) + ")");

  // sum over S-submultisingularities of R/|Aut| t^psi', times the target
  // generating function exp(sum S/|Aut| t^psi'').
  const Multisingularity base = psi.without_distinguished_mark();
  const TBound bound = t_bound(base);

  GradedSeries r_factor = GradedSeries::zero(l, k);
  for (const auto& ssub : psi.submultisets()) {
    const GradedSeries& r = r_table.at(ssub.without_distinguished_mark());
    const Rational weight = Rational(1) / Rational(Integer(ssub.aut_order()));
    const Monomial tm = t_monomial(ssub);
    for (const auto& [m, c] : r.terms) r_factor.add_term(m.times(tm), c * weight);
  }

  GradedSeries s_gen = GradedSeries::zero(l, k);
  for (const auto& tsub : base.submultisets()) {
    const GradedSeries& s = s_table.at(tsub);
    const Rational weight = Rational(1) / Rational(Integer(tsub.aut_order()));
    const Monomial tm = t_monomial(tsub);
    for (const auto& [m, c] : s.terms) s_gen.add_term(m.times(tm), c * weight);
  }
  const GradedSeries n_factor = series_exp(s_gen, k, &bound);
  const GradedSeries m_series = truncated_product(r_factor, n_factor, k, &bound);
  GradedSeries out = strip_t_coefficient(m_series, base, l, k);
  return scale(out, Rational(Integer(psi.aut_order())));
}

GradedSeries f_map(const GradedSeries& p) {
  GradedSeries out = GradedSeries::zero(p.l, p.trunc + p.l);
  for (const auto& [m, c] : p.terms) {
    std::vector<int> cparts;
    Monomial rest;
    for (const auto& [v, e] : m.factors()) {
      switch (v.kind) {
        case VarKind::Chern:
          for (int i = 0; i < e; ++i) cparts.push_back(v.index);
          break;
        case VarKind::SVar:
          rest = rest.times(Monomial::of(v, e));
          break;
        default:
          fail(ErrorKind::InvalidArgument, "f_map expects a series in c and s variables");
      }
    }
    std::sort(cparts.rbegin(), cparts.rend());
    out.add_term(rest.times(Monomial::of(Variable::s(Partition(cparts)))), c);
  }
  return out;
}

GradedSeries ff_map(const GradedSeries& p, int k) {
  const int ck = k - p.l;
  if (ck < 0) fail(ErrorKind::InvalidArgument, "ff_map needs k >= l");
  GradedSeries total = GradedSeries::constant(p.l, ck, 1);
  for (int i = 1; i <= ck; ++i)
    total.add_term(Monomial::of(Variable::chern(i)), Rational(1));
  const GradedSeries q =
      truncated_product(graded_upto(p, ck), series_inverse(total, ck), ck);
  GradedSeries out = f_map(q);
  out.trunc = std::min(k, p.trunc + p.l);
  return out;
}

GradedSeries r_from_s(const GradedSeries& s_series, int k) {
  if (!is_s_linear(s_series))
    fail(ErrorKind::InvalidArgument, "r_from_s expects an s-linear series");
  if (k > s_series.trunc)
    fail(ErrorKind::InvalidArgument, "r_from_s: degree bound exceeds the input truncation");
  const int ck = k - s_series.l;
  if (ck < 0) fail(ErrorKind::InvalidArgument, "r_from_s needs k >= l");
  GradedSeries a = GradedSeries::zero(s_series.l, ck);
  for (const auto& [m, c] : s_series.terms) {
    const Partition& lambda = m.factors().front().first.partition;
    Monomial cm;
    for (int part : lambda.parts()) cm = cm.times(Monomial::of(Variable::chern(part)));
    a.add_term(cm, c);
  }
  GradedSeries total = GradedSeries::constant(s_series.l, ck, 1);
  for (int i = 1; i <= ck; ++i)
    total.add_term(Monomial::of(Variable::chern(i)), Rational(1));
  return truncated_product(a, total, ck);
}

}  // namespace ssmthom
