#pragma once

#include <random>
#include <vector>

#include "core/rational.hpp"
#include "core/series.hpp"

namespace testutil {

using namespace ssmthom;

inline Monomial mono_s(std::vector<int> parts) {
  return Monomial::of(Variable::s(Partition(std::move(parts))));
}

inline Monomial mono_c(std::vector<int> indices) {
  Monomial m;
  for (int i : indices) m = m.times(Monomial::of(Variable::chern(i)));
  return m;
}

inline Monomial mono_x(std::vector<int> indices) {
  Monomial m;
  for (int j : indices) m = m.times(Monomial::of(Variable::x(j)));
  return m;
}

struct Term {
  Monomial m;
  const char* coeff;
};

inline GradedSeries make(int l, int trunc, std::vector<Term> terms) {
  GradedSeries out = GradedSeries::zero(l, trunc);
  for (const auto& t : terms) out.add_term(t.m, parse_rational(t.coeff));
  return out;
}

// Independent oracle: plain sum of powers p^n / n!.
inline GradedSeries naive_exp(const GradedSeries& p, int k) {
  GradedSeries out = GradedSeries::constant(p.l, k, 1);
  GradedSeries power = GradedSeries::constant(p.l, k, 1);
  Integer fact = 1;
  for (int n = 1; n <= k; ++n) {
    power = truncated_product(power, p, k);
    fact *= n;
    out = add(out, scale(power, Rational(1) / Rational(fact)));
    if (power.is_zero()) break;
  }
  return out;
}

// Deterministic random series with zero constant term in s-variables only.
inline GradedSeries random_s_series(std::mt19937& rng, int l, int trunc, int max_weight) {
  std::uniform_int_distribution<int> coeff(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  GradedSeries out = GradedSeries::zero(l, trunc);
  for (int w = 0; w <= max_weight; ++w) {
    for (const auto& lambda : partitions_of(w)) {
      const int c = coeff(rng);
      if (c == 0) continue;
      out.add_term(Monomial::of(Variable::s(lambda)), rational(c, den(rng)));
    }
  }
  return out;
}

// Random series in c and s variables (possibly with products), no constant.
inline GradedSeries random_cs_series(std::mt19937& rng, int l, int trunc) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> pick(0, 2);
  GradedSeries out = GradedSeries::zero(l, trunc);
  for (int tries = 0; tries < 24; ++tries) {
    Monomial m;
    int degree_left = trunc;
    while (degree_left > 0 && pick(rng) != 0) {
      if (pick(rng) == 1) {
        std::uniform_int_distribution<int> ci(1, std::max(1, degree_left));
        const int i = ci(rng);
        m = m.times(Monomial::of(Variable::chern(i)));
        degree_left -= i;
      } else {
        if (degree_left < l) break;
        std::uniform_int_distribution<int> wsel(0, std::max(0, degree_left - l));
        const auto parts = partitions_of(wsel(rng));
        std::uniform_int_distribution<std::size_t> psel(0, parts.size() - 1);
        m = m.times(Monomial::of(Variable::s(parts[psel(rng)])));
        degree_left -= l + parts[psel(rng)].weight();
      }
    }
    if (m.is_unit()) continue;
    const int c = coeff(rng);
    if (c != 0) out.add_term(m, Rational(c));
  }
  return out;
}

}  // namespace testutil
