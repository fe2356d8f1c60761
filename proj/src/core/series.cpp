#include "core/series.hpp"

#include <algorithm>

#include "core/errors.hpp"

namespace ssmthom {

Variable Variable::chern(int i) {
  if (i < 1) fail(ErrorKind::InvalidArgument, "c-variable index must be >= 1");
  Variable v;
  v.kind = VarKind::Chern;
  v.index = i;
  return v;
}

Variable Variable::s(Partition lambda) {
  Variable v;
  v.kind = VarKind::SVar;
  v.partition = std::move(lambda);
  return v;
}

Variable Variable::t(std::string token) {
  Variable v;
  v.kind = VarKind::TVar;
  v.token = std::move(token);
  return v;
}

Variable Variable::x(int j) {
  if (j < 0) fail(ErrorKind::InvalidArgument, "x-variable index must be >= 0");
  Variable v;
  v.kind = VarKind::XVar;
  v.index = j;
  return v;
}

std::strong_ordering Variable::operator<=>(const Variable& other) const {
  if (auto c = kind <=> other.kind; c != 0) return c;
  switch (kind) {
    case VarKind::Chern:
    case VarKind::XVar:
      return index <=> other.index;
    case VarKind::SVar:
      return partition <=> other.partition;
    case VarKind::TVar:
      return token.compare(other.token) <=> 0;
  }
  return std::strong_ordering::equal;
}

Monomial Monomial::of(const Variable& v, int exponent) {
  Monomial m;
  if (exponent < 0) fail(ErrorKind::InvalidArgument, "negative exponent");
  if (exponent > 0) m.factors_.emplace_back(v, exponent);
  return m;
}

int Monomial::degree(int l) const {
  int d = 0;
  for (const auto& [v, e] : factors_) {
    switch (v.kind) {
      case VarKind::Chern: d += v.index * e; break;
      case VarKind::SVar: d += (l + v.partition.weight()) * e; break;
      case VarKind::TVar: break;
      case VarKind::XVar: d += e; break;
    }
  }
  return d;
}

int Monomial::sdegree() const {
  int d = 0;
  for (const auto& [v, e] : factors_)
    if (v.kind == VarKind::SVar) d += e;
  return d;
}

bool Monomial::has_kind(VarKind kind) const {
  for (const auto& [v, e] : factors_)
    if (v.kind == kind) return true;
  return false;
}

std::vector<std::pair<std::string, int>> Monomial::t_part() const {
  std::vector<std::pair<std::string, int>> out;
  for (const auto& [v, e] : factors_)
    if (v.kind == VarKind::TVar) out.emplace_back(v.token, e);
  return out;
}

Monomial Monomial::times(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto ia = factors_.begin(), ib = other.factors_.begin();
  while (ia != factors_.end() && ib != other.factors_.end()) {
    if (ia->first == ib->first) {
      out.factors_.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    } else if (ia->first < ib->first) {
      out.factors_.push_back(*ia++);
    } else {
      out.factors_.push_back(*ib++);
    }
  }
  out.factors_.insert(out.factors_.end(), ia, factors_.end());
  out.factors_.insert(out.factors_.end(), ib, other.factors_.end());
  return out;
}

Monomial Monomial::pow(int e) const {
  if (e < 0) fail(ErrorKind::InvalidArgument, "negative exponent");
  Monomial out;
  if (e == 0) return out;
  out.factors_ = factors_;
  for (auto& [v, f] : out.factors_) f *= e;
  return out;
}

std::pair<Monomial, Monomial> Monomial::split(VarKind kind) const {
  Monomial matched, rest;
  for (const auto& f : factors_)
    (f.first.kind == kind ? matched : rest).factors_.push_back(f);
  return {matched, rest};
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  const auto& a = factors_;
  const auto& b = other.factors_;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (auto c = a[i].first <=> b[i].first; c != 0) return c;
    // Higher exponent of the same (earlier) variable sorts first.
    if (auto c = b[i].second <=> a[i].second; c != 0) return c;
  }
  return a.size() <=> b.size();
}

GradedSeries GradedSeries::zero(int l, int trunc) {
  GradedSeries s;
  s.l = l;
  s.trunc = trunc;
  return s;
}

GradedSeries GradedSeries::constant(int l, int trunc, const Rational& value) {
  GradedSeries s = zero(l, trunc);
  s.add_term(Monomial::unit(), value);
  return s;
}

Rational GradedSeries::coeff(const Monomial& m) const {
  auto it = terms.find(m);
  return it == terms.end() ? Rational(0) : it->second;
}

Rational GradedSeries::constant_term() const { return coeff(Monomial::unit()); }

void GradedSeries::add_term(const Monomial& m, const Rational& coefficient) {
  if (m.degree(l) > trunc) return;
  Rational c = coefficient;
  c.canonicalize();  // guard against values built from raw numerator/denominator
  if (c == 0) return;
  auto [it, inserted] = terms.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

int GradedSeries::min_degree() const {
  int best = trunc + 1;
  for (const auto& [m, c] : terms) best = std::min(best, m.degree(l));
  return best;
}

bool GradedSeries::operator==(const GradedSeries& other) const {
  return l == other.l && trunc == other.trunc && terms == other.terms;
}

namespace {

void check_same_l(const GradedSeries& a, const GradedSeries& b) {
  if (a.l != b.l)
    fail(ErrorKind::InvalidArgument, "series relative dimensions differ (" +
                                         std::to_string(a.l) + " vs " +
                                         std::to_string(b.l) + ")");
}

bool within_tbound(const Monomial& m, const TBound* tbound) {
  if (!tbound) return true;
  for (const auto& [token, e] : m.t_part()) {
    auto it = tbound->find(token);
    if (it == tbound->end() || e > it->second) return false;
  }
  return true;
}

}  // namespace

GradedSeries add(const GradedSeries& a, const GradedSeries& b) {
  check_same_l(a, b);
  GradedSeries out = GradedSeries::zero(a.l, std::min(a.trunc, b.trunc));
  for (const auto& [m, c] : a.terms) out.add_term(m, c);
  for (const auto& [m, c] : b.terms) out.add_term(m, c);
  return out;
}

GradedSeries sub(const GradedSeries& a, const GradedSeries& b) {
  return add(a, negate(b));
}

GradedSeries negate(const GradedSeries& a) {
  GradedSeries out = a;
  for (auto& [m, c] : out.terms) c = -c;
  return out;
}

GradedSeries scale(const GradedSeries& a, const Rational& factor) {
  GradedSeries out = GradedSeries::zero(a.l, a.trunc);
  if (factor == 0) return out;
  for (const auto& [m, c] : a.terms) out.terms.emplace(m, c * factor);
  return out;
}

GradedSeries truncated_product(const GradedSeries& a, const GradedSeries& b, int k,
                               const TBound* tbound) {
  check_same_l(a, b);
  GradedSeries out = GradedSeries::zero(a.l, k);
  for (const auto& [ma, ca] : a.terms) {
    const int da = ma.degree(a.l);
    if (da > k) continue;
    for (const auto& [mb, cb] : b.terms) {
      if (da + mb.degree(a.l) > k) continue;
      Monomial m = ma.times(mb);
      if (!within_tbound(m, tbound)) continue;
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

GradedSeries truncated_product(const GradedSeries& a, const GradedSeries& b) {
  return truncated_product(a, b, std::min(a.trunc, b.trunc));
}

namespace {

// Degree-weighted part: sum of deg(m)*c_m*m over terms of degree d.
GradedSeries theta_component(const GradedSeries& p, int d) {
  GradedSeries out = GradedSeries::zero(p.l, p.trunc);
  if (d == 0) return out;
  for (const auto& [m, c] : p.terms)
    if (m.degree(p.l) == d) out.terms.emplace(m, c * d);
  return out;
}

}  // namespace

GradedSeries series_exp(const GradedSeries& p, int k, const TBound* tbound) {
  for (const auto& [m, c] : p.terms)
    if (m.degree(p.l) == 0)
      fail(ErrorKind::InvalidArgument, "series_exp requires a zero degree-0 part");
  // E = exp(p) satisfies theta(E) = theta(p)*E with theta the degree scaling
  // derivation, so d*E_d = sum_j (theta p)_j * E_{d-j}.
  std::vector<GradedSeries> comps(k + 1, GradedSeries::zero(p.l, k));
  comps[0] = GradedSeries::constant(p.l, k, 1);
  GradedSeries out = comps[0];
  for (int d = 1; d <= k; ++d) {
    GradedSeries acc = GradedSeries::zero(p.l, k);
    for (int j = 1; j <= d; ++j) {
      GradedSeries tp = theta_component(p, j);
      if (tp.is_zero() || comps[d - j].is_zero()) continue;
      acc = add(acc, truncated_product(tp, comps[d - j], k, tbound));
    }
    comps[d] = scale(acc, Rational(1, d));
    out = add(out, comps[d]);
  }
  out.trunc = k;
  return out;
}

GradedSeries series_log(const GradedSeries& p, int k) {
  if (p.constant_term() != 1)
    fail(ErrorKind::InvalidArgument, "series_log requires constant term 1");
  for (const auto& [m, c] : p.terms)
    if (!m.is_unit() && m.degree(p.l) == 0)
      fail(ErrorKind::InvalidArgument, "series_log requires no degree-0 part besides 1");
  // theta(log p)_d from theta(p) = theta(log p)*p:
  //   d*L_d = (theta p)_d - sum_{j<d} j*L_j * p_{d-j}.
  std::vector<GradedSeries> lcomp(k + 1, GradedSeries::zero(p.l, k));
  GradedSeries out = GradedSeries::zero(p.l, k);
  for (int d = 1; d <= k; ++d) {
    GradedSeries acc = theta_component(p, d);
    for (int j = 1; j < d; ++j) {
      GradedSeries pj = graded_component(p, d - j);
      if (lcomp[j].is_zero() || pj.is_zero()) continue;
      acc = sub(acc, scale(truncated_product(lcomp[j], pj, k), Rational(j)));
    }
    lcomp[d] = scale(acc, Rational(1, d));
    out = add(out, lcomp[d]);
  }
  out.trunc = k;
  return out;
}

GradedSeries series_inverse(const GradedSeries& p, int k, const TBound* tbound) {
  if (p.constant_term() != 1)
    fail(ErrorKind::InvalidArgument, "series_inverse requires constant term 1");
  for (const auto& [m, c] : p.terms)
    if (!m.is_unit() && m.degree(p.l) == 0)
      fail(ErrorKind::InvalidArgument, "series_inverse requires no degree-0 part besides 1");
  // q_0 = 1, q_d = -sum_{j=1..d} p_j q_{d-j}.
  std::vector<GradedSeries> q(k + 1, GradedSeries::zero(p.l, k));
  q[0] = GradedSeries::constant(p.l, k, 1);
  GradedSeries out = q[0];
  for (int d = 1; d <= k; ++d) {
    GradedSeries acc = GradedSeries::zero(p.l, k);
    for (int j = 1; j <= d; ++j) {
      GradedSeries pj = graded_component(p, j);
      if (pj.is_zero() || q[d - j].is_zero()) continue;
      acc = add(acc, truncated_product(pj, q[d - j], k, tbound));
    }
    q[d] = negate(acc);
    out = add(out, q[d]);
  }
  out.trunc = k;
  return out;
}

GradedSeries graded_component(const GradedSeries& p, int r) {
  GradedSeries out = GradedSeries::zero(p.l, p.trunc);
  for (const auto& [m, c] : p.terms)
    if (m.degree(p.l) == r) out.terms.emplace(m, c);
  return out;
}

GradedSeries graded_upto(const GradedSeries& p, int r) {
  GradedSeries out = GradedSeries::zero(p.l, std::min(p.trunc, r));
  for (const auto& [m, c] : p.terms)
    if (m.degree(p.l) <= r) out.terms.emplace(m, c);
  return out;
}

namespace {

GradedSeries series_pow(const GradedSeries& base, int e, int k, int l) {
  GradedSeries out = GradedSeries::constant(l, k, 1);
  for (int i = 0; i < e; ++i) out = truncated_product(out, base, k);
  return out;
}

}  // namespace

GradedSeries substitute_s(const GradedSeries& p, const SubstitutionMap& images, int k) {
  // Degree homogeneity of the images keeps the substitution graded.
  for (const auto& [lambda, img] : images.s_images) {
    const int want = p.l + lambda.weight();
    for (const auto& [m, c] : img.terms)
      if (m.degree(img.l) != want)
        fail(ErrorKind::InvalidArgument,
             "image of s_" + lambda.render() + " is not homogeneous of degree " +
                 std::to_string(want));
  }
  for (const auto& [index, img] : images.c_images) {
    for (const auto& [m, c] : img.terms)
      if (m.degree(img.l) != index)
        fail(ErrorKind::InvalidArgument,
             "image of c_" + std::to_string(index) + " is not homogeneous of degree " +
                 std::to_string(index));
  }

  GradedSeries out = GradedSeries::zero(p.l, k);
  for (const auto& [m, c] : p.terms) {
    GradedSeries term = GradedSeries::constant(p.l, k, c);
    bool dead = false;
    for (const auto& [v, e] : m.factors()) {
      GradedSeries factor = GradedSeries::zero(p.l, k);
      switch (v.kind) {
        case VarKind::SVar: {
          auto it = images.s_images.find(v.partition);
          if (it == images.s_images.end())
            fail(ErrorKind::MissingEntry, "no image for s_" + v.partition.render());
          factor = it->second;
          factor.l = p.l;
          break;
        }
        case VarKind::Chern: {
          auto it = images.c_images.find(v.index);
          if (it != images.c_images.end()) {
            factor = it->second;
            factor.l = p.l;
          } else {
            factor = GradedSeries::zero(p.l, k);
            factor.add_term(Monomial::of(v), Rational(1));
          }
          break;
        }
        case VarKind::TVar:
        case VarKind::XVar:
          factor = GradedSeries::zero(p.l, k);
          factor.add_term(Monomial::of(v), Rational(1));
          break;
      }
      term = truncated_product(term, series_pow(factor, e, k, p.l), k);
      if (term.is_zero()) {
        dead = true;
        break;
      }
    }
    if (!dead) out = add(out, term);
  }
  out.trunc = k;
  return out;
}

namespace {

std::string default_x_name(int j, const RenderOptions& opts) {
  if (j < static_cast<int>(opts.x_names.size())) return opts.x_names[j];
  if (opts.x_names.empty() && j < 5) return std::string(1, static_cast<char>('a' + j));
  return "x" + std::to_string(j);
}

std::string render_factor(const Variable& v, int e, const RenderOptions& opts) {
  std::string base;
  switch (v.kind) {
    case VarKind::Chern: {
      base = "c_" + std::to_string(v.index);
      break;
    }
    case VarKind::SVar: {
      const std::string body = v.partition.render(opts.compress_exponents);
      base = (body.size() == 1) ? "s_" + body : "s_{" + body + "}";
      break;
    }
    case VarKind::TVar:
      base = "t_{" + v.token + "}";
      break;
    case VarKind::XVar:
      base = default_x_name(v.index, opts);
      break;
  }
  if (e > 1) base += "^" + std::to_string(e);
  return base;
}

}  // namespace

std::string render(const Monomial& m, const RenderOptions& opts) {
  if (m.is_unit()) return "1";
  // Adjacent c-factors merge into partition subscripts: c_2*c_1^2 -> c_{211}.
  std::vector<int> cparts;
  std::string rest;
  for (const auto& [v, e] : m.factors()) {
    if (v.kind == VarKind::Chern) {
      for (int i = 0; i < e; ++i) cparts.push_back(v.index);
    } else {
      if (!rest.empty()) rest += " ";
      rest += render_factor(v, e, opts);
    }
  }
  std::string out;
  if (!cparts.empty()) {
    std::sort(cparts.rbegin(), cparts.rend());
    const std::string body = Partition(cparts).render(opts.compress_exponents);
    out = (body.size() == 1) ? "c_" + body : "c_{" + body + "}";
  }
  if (!rest.empty()) out += (out.empty() ? "" : " ") + rest;
  return out;
}

std::string render(const GradedSeries& p, const RenderOptions& opts) {
  if (p.terms.empty()) return "0";
  // Group by cohomological degree, canonical monomial order within a degree.
  std::map<int, std::vector<std::pair<Monomial, Rational>>> by_degree;
  for (const auto& [m, c] : p.terms) by_degree[m.degree(p.l)].emplace_back(m, c);

  std::string out;
  bool first = true;
  for (const auto& [deg, terms] : by_degree) {
    for (const auto& [m, c] : terms) {
      const bool negative = c < 0;
      Rational a = negative ? Rational(-c) : c;
      if (first) {
        if (negative) out += "-";
        first = false;
      } else {
        out += negative ? " - " : " + ";
      }
      const std::string mono = m.is_unit() ? "" : render(m, opts);
      if (mono.empty()) {
        out += rational_str(a);
      } else {
        if (a != 1) out += rational_str(a) + " ";
        out += mono;
      }
    }
  }
  return out;
}

Integer component_common_denominator(const GradedSeries& p, int r) {
  Integer lcm = 1;
  for (const auto& [m, c] : p.terms) {
    if (m.degree(p.l) != r) continue;
    const Integer d = denominator(c);
    lcm = lcm / gcd(lcm, d) * d;
  }
  return lcm;
}

}  // namespace ssmthom
