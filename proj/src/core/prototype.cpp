#include "core/prototype.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "core/errors.hpp"
#include "core/rational.hpp"

namespace ssmthom {

namespace {

using Vec = std::vector<Rational>;

// Kernel basis of an integer constraint matrix, as primitive integer vectors.
// Deterministic: pivots scan columns left to right, free columns ascending.
std::vector<WeightVector> integer_kernel_basis(const std::vector<std::vector<long>>& rows,
                                               int cols) {
  std::vector<Vec> m;
  for (const auto& r : rows) {
    Vec v(cols);
    for (int j = 0; j < cols; ++j) v[j] = Rational(r[j]);
    m.push_back(std::move(v));
  }
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (int col = 0; col < cols && rank < m.size(); ++col) {
    std::size_t sel = rank;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[rank], m[sel]);
    const Rational inv = Rational(1) / m[rank][col];
    for (int j = 0; j < cols; ++j) m[rank][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][col] == 0) continue;
      const Rational f = m[i][col];
      for (int j = 0; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<WeightVector> basis;
  for (int col = 0; col < cols; ++col) {
    if (std::find(pivot_col.begin(), pivot_col.end(), col) != pivot_col.end()) continue;
    Vec v(cols, Rational(0));
    v[col] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m[i][col];
    // Scale to a primitive integer vector with positive leading entry.
    Integer lcm = 1;
    for (const auto& x : v) lcm = lcm / gcd(lcm, denominator(x)) * denominator(x);
    WeightVector w(cols);
    Integer g = 0;
    for (int j = 0; j < cols; ++j) {
      const Integer n = numerator(v[j]) * (lcm / denominator(v[j]));
      w[j] = n.get_si();
      g = gcd(g, n);
    }
    if (g > 1)
      for (auto& x : w) x /= g.get_si();
    for (auto& x : w)
      if (x != 0) {
        if (x < 0)
          for (auto& y : w) y = -y;
        break;
      }
    basis.push_back(std::move(w));
  }
  return basis;
}

struct TorusData {
  int rank = 0;                       // lattice rank + fresh characters
  int lattice_rank = 0;               // rank of the grading torus of the generators
  std::vector<WeightVector> gen_char;  // per generator
  std::vector<WeightVector> comp_char; // per genotype component
  std::vector<Rational> alpha;         // scalar weight = alpha . (lattice part)
};

TorusData torus_characters(const CatalogEntry& e) {
  const int a = e.generators;
  // Quasihomogeneity constraints: exponent differences inside each component.
  std::vector<std::vector<long>> constraints;
  for (const auto& comp : e.genotype) {
    for (std::size_t t = 1; t < comp.size(); ++t) {
      std::vector<long> row(a);
      for (int g = 0; g < a; ++g)
        row[g] = static_cast<long>(comp[t].exponents[g]) - comp[0].exponents[g];
      constraints.push_back(std::move(row));
    }
  }
  const auto basis = integer_kernel_basis(constraints, a);
  TorusData td;
  td.lattice_rank = static_cast<int>(basis.size());
  const int fresh = e.zero_components();
  td.rank = td.lattice_rank + fresh;
  for (int g = 0; g < a; ++g) {
    WeightVector c(td.rank, 0);
    for (int m = 0; m < td.lattice_rank; ++m) c[m] = basis[m][g];
    td.gen_char.push_back(std::move(c));
  }
  int next_fresh = td.lattice_rank;
  for (const auto& comp : e.genotype) {
    WeightVector c(td.rank, 0);
    if (comp.empty()) {
      c[next_fresh++] = 1;
    } else {
      for (int g = 0; g < a; ++g)
        for (int m = 0; m < td.lattice_rank; ++m)
          c[m] += static_cast<long>(comp[0].exponents[g]) * basis[m][g];
    }
    td.comp_char.push_back(std::move(c));
  }
  // Express the declared scalar grading in the lattice basis: alpha . V = u.
  if (td.lattice_rank > 0) {
    std::vector<Vec> sys;  // columns alpha_0..alpha_{rho-1} | rhs, one row per generator
    for (int g = 0; g < a; ++g) {
      Vec row(td.lattice_rank + 1);
      for (int m = 0; m < td.lattice_rank; ++m) row[m] = Rational(basis[m][g]);
      row[td.lattice_rank] = Rational(e.weights[g]);
      sys.push_back(std::move(row));
    }
    std::vector<int> pivots;
    std::size_t rank = 0;
    for (int col = 0; col < td.lattice_rank && rank < sys.size(); ++col) {
      std::size_t sel = rank;
      while (sel < sys.size() && sys[sel][col] == 0) ++sel;
      if (sel == sys.size()) continue;
      std::swap(sys[rank], sys[sel]);
      const Rational inv = Rational(1) / sys[rank][col];
      for (auto& x : sys[rank]) x *= inv;
      for (std::size_t i = 0; i < sys.size(); ++i) {
        if (i == rank || sys[i][col] == 0) continue;
        const Rational f = sys[i][col];
        for (int j = 0; j <= td.lattice_rank; ++j) sys[i][j] -= f * sys[rank][j];
      }
      pivots.push_back(col);
      ++rank;
    }
    for (std::size_t i = rank; i < sys.size(); ++i)
      if (sys[i][td.lattice_rank] != 0)
        fail(ErrorKind::InvalidArgument,
             e.name + ": declared weights are inconsistent with the grading torus");
    td.alpha.assign(td.lattice_rank, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) td.alpha[pivots[i]] = sys[i][td.lattice_rank];
  }
  return td;
}

WeightVector add_vec(const WeightVector& a, const WeightVector& b) {
  WeightVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

WeightVector sub_vec(const WeightVector& a, const WeightVector& b) {
  WeightVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

bool is_zero_vec(const WeightVector& v) {
  return std::all_of(v.begin(), v.end(), [](long x) { return x == 0; });
}

WeightVector monomial_char(const TorusData& td, const std::vector<int>& I) {
  WeightVector out(td.rank, 0);
  for (std::size_t g = 0; g < I.size(); ++g)
    for (int m = 0; m < td.rank; ++m) out[m] += static_cast<long>(I[g]) * td.gen_char[g][m];
  return out;
}

// All I >= 0 with u.I = weight, lexicographically descending.
void enumerate_by_weight(const std::vector<int>& u, long weight, std::vector<int>& cur,
                         std::size_t pos, std::vector<std::vector<int>>& out) {
  if (pos == u.size()) {
    if (weight == 0) out.push_back(cur);
    return;
  }
  const long maxe = weight / u[pos];
  for (long e = maxe; e >= 0; --e) {
    cur[pos] = static_cast<int>(e);
    enumerate_by_weight(u, weight - e * u[pos], cur, pos + 1, out);
  }
  cur[pos] = 0;
}

std::vector<std::vector<int>> monomials_with_char(const CatalogEntry& e, const TorusData& td,
                                                  const WeightVector& target) {
  for (int m = td.lattice_rank; m < td.rank; ++m)
    if (target[m] != 0) return {};
  if (e.generators == 0) {
    if (is_zero_vec(target)) return {std::vector<int>{}};
    return {};
  }
  Rational w(0);
  for (int m = 0; m < td.lattice_rank; ++m) w += td.alpha[m] * Rational(target[m]);
  if (!is_integer(w) || w < 0) return {};
  std::vector<std::vector<int>> cands;
  std::vector<int> cur(e.generators, 0);
  enumerate_by_weight(e.weights, numerator(w).get_si(), cur, 0, cands);
  std::vector<std::vector<int>> out;
  for (auto& I : cands)
    if (monomial_char(td, I) == target) out.push_back(std::move(I));
  return out;
}

int total_degree(const std::vector<int>& I) {
  return std::accumulate(I.begin(), I.end(), 0);
}

// Incremental Gaussian row basis over the rationals, indexed by dense slots.
class SpanBasis {
public:
  explicit SpanBasis(std::size_t dim) : dim_(dim) {}

  // Reduces v in place; returns true (and absorbs it) when independent.
  bool add(Vec v) {
    reduce(v);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (v[i] != 0) {
        const Rational inv = Rational(1) / v[i];
        for (auto& x : v) x *= inv;
        rows_.emplace(i, std::move(v));
        return true;
      }
    }
    return false;
  }

  bool contains(Vec v) const {
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
  }

private:
  void reduce(Vec& v) const {
    for (const auto& [pivot, row] : rows_) {
      if (v[pivot] == 0) continue;
      const Rational f = v[pivot];
      for (std::size_t j = pivot; j < dim_; ++j) v[j] -= f * row[j];
    }
  }

  std::size_t dim_;
  std::map<std::size_t, Vec> rows_;  // pivot slot -> normalized row
};

void check_no_linear_terms(const CatalogEntry& e) {
  for (const auto& comp : e.genotype)
    for (const auto& term : comp)
      if (total_degree(term.exponents) < 2)
        fail(ErrorKind::InvalidArgument,
             e.name + ": genotype components must have order >= 2 (minimal presentation)");
}

}  // namespace

int algebra_dimension(const CatalogEntry& e, int degree_cutoff) {
  if (e.generators == 0) return 1;
  check_no_linear_terms(e);
  const TorusData td = torus_characters(e);

  // Per-character blocks of the monomial ideal (g_1,...,g_{a+l}).
  struct Block {
    std::vector<std::vector<int>> monomials;       // block contents, fixed order
    std::map<std::vector<int>, std::size_t> index;
    std::vector<bool> member;                      // in the ideal?
    int deficiency = 0;                            // dim(block) - rank(columns)
  };
  std::map<WeightVector, Block> blocks;

  auto solve_block = [&](const WeightVector& chi) -> Block& {
    auto it = blocks.find(chi);
    if (it != blocks.end()) return it->second;
    Block b;
    b.monomials = monomials_with_char(e, td, chi);
    std::sort(b.monomials.begin(), b.monomials.end(),
              [](const std::vector<int>& x, const std::vector<int>& y) {
                if (total_degree(x) != total_degree(y)) return total_degree(x) < total_degree(y);
                return x > y;
              });
    for (std::size_t i = 0; i < b.monomials.size(); ++i) b.index[b.monomials[i]] = i;
    SpanBasis span(b.monomials.size());
    int rank = 0;
    for (std::size_t ci = 0; ci < e.genotype.size(); ++ci) {
      const auto& gi = e.genotype[ci];
      if (gi.empty()) continue;
      const auto shifts = monomials_with_char(e, td, sub_vec(chi, td.comp_char[ci]));
      for (const auto& J : shifts) {
        Vec col(b.monomials.size(), Rational(0));
        for (const auto& term : gi) {
          std::vector<int> m(J);
          for (int g = 0; g < e.generators; ++g) m[g] += term.exponents[g];
          col[b.index.at(m)] += Rational(term.coeff);
        }
        if (span.add(std::move(col))) ++rank;
      }
    }
    b.deficiency = static_cast<int>(b.monomials.size()) - rank;
    b.member.resize(b.monomials.size());
    for (std::size_t i = 0; i < b.monomials.size(); ++i) {
      Vec ind(b.monomials.size(), Rational(0));
      ind[i] = 1;
      b.member[i] = span.contains(std::move(ind));
    }
    return blocks.emplace(chi, std::move(b)).first->second;
  };

  for (int d = 1; d <= degree_cutoff; ++d) {
    std::vector<std::vector<int>> level;
    std::vector<int> cur(e.generators, 0);
    // All monomials of total degree d.
    auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
      if (pos + 1 == cur.size()) {
        cur[pos] = left;
        level.push_back(cur);
        return;
      }
      for (int v = left; v >= 0; --v) {
        cur[pos] = v;
        self(self, pos + 1, left - v);
      }
    };
    rec(rec, 0, d);
    bool all_member = true;
    for (const auto& I : level) {
      Block& b = solve_block(monomial_char(td, I));
      all_member = all_member && b.member[b.index.at(I)];
    }
    if (all_member) {
      int dim = 1;
      for (const auto& [chi, b] : blocks) dim += b.deficiency;
      return dim;
    }
  }
  fail(ErrorKind::NonFinite,
       e.name + ": ideal does not saturate within degree " + std::to_string(degree_cutoff) +
           "; the presented algebra is not finite-dimensional");
}

PrototypeModel build_prototype(const CatalogEntry& e, int jet_bound) {
  check_no_linear_terms(e);
  const TorusData td = torus_characters(e);
  const int a = e.generators;
  const int ncomp = a + e.l;

  PrototypeModel model;
  model.name = e.name;
  model.l = e.l;
  model.rank = td.rank;
  model.generator_weights = td.gen_char;
  model.component_weights = td.comp_char;

  if (a > 0) {
    const int dimq = algebra_dimension(e);
    const int bound = jet_bound > 0 ? jet_bound : 2 * dimq + e.max_term_degree();

    // Vector-field slot: (monomial exponents, component), character tau(I) - d_j.
    using Slot = std::pair<std::vector<int>, int>;
    std::set<WeightVector> block_chars;
    {
      std::vector<int> cur(a, 0);
      for (int d = 1; d <= bound; ++d) {
        std::vector<std::vector<int>> level;
        auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
          if (pos + 1 == cur.size()) {
            cur[pos] = left;
            level.push_back(cur);
            return;
          }
          for (int v = left; v >= 0; --v) {
            cur[pos] = v;
            self(self, pos + 1, left - v);
          }
        };
        rec(rec, 0, d);
        for (const auto& I : level) {
          const WeightVector tau = monomial_char(td, I);
          for (int j = 0; j < ncomp; ++j) block_chars.insert(sub_vec(tau, td.comp_char[j]));
        }
      }
    }

    for (const WeightVector& chi : block_chars) {
      // Full block contents: every (I, j) with tau(I) - d_j = chi and |I| >= 1.
      std::vector<Slot> slots;
      for (int j = 0; j < ncomp; ++j)
        for (auto& I : monomials_with_char(e, td, add_vec(chi, td.comp_char[j])))
          if (total_degree(I) >= 1) slots.emplace_back(std::move(I), j);
      if (slots.empty()) continue;
      std::sort(slots.begin(), slots.end(), [](const Slot& x, const Slot& y) {
        if (total_degree(x.first) != total_degree(y.first))
          return total_degree(x.first) < total_degree(y.first);
        if (x.first != y.first) return x.first > y.first;
        return x.second < y.second;
      });
      std::map<Slot, std::size_t> index;
      for (std::size_t i = 0; i < slots.size(); ++i) index[slots[i]] = i;

      SpanBasis span(slots.size());
      // Image of t_g: columns sum_i d g_i/d x_s * x^J e_i.
      for (int s = 0; s < a; ++s) {
        for (const auto& J : monomials_with_char(e, td, add_vec(chi, td.gen_char[s]))) {
          Vec col(slots.size(), Rational(0));
          bool nonzero = false;
          for (int i = 0; i < ncomp; ++i) {
            for (const auto& term : e.genotype[i]) {
              if (term.exponents[s] == 0) continue;
              std::vector<int> m(J);
              for (int g = 0; g < a; ++g) m[g] += term.exponents[g];
              m[s] -= 1;
              col[index.at({m, i})] += Rational(term.coeff) * Rational(term.exponents[s]);
              nonzero = true;
            }
          }
          if (nonzero) span.add(std::move(col));
        }
      }
      // Image of g^*(I_{a+l}) theta_g: columns g_i * x^J e_j.
      for (int i = 0; i < ncomp; ++i) {
        if (e.genotype[i].empty()) continue;
        for (int j = 0; j < ncomp; ++j) {
          for (const auto& J :
               monomials_with_char(e, td, sub_vec(add_vec(chi, td.comp_char[j]), td.comp_char[i]))) {
            Vec col(slots.size(), Rational(0));
            for (const auto& term : e.genotype[i]) {
              std::vector<int> m(J);
              for (int g = 0; g < a; ++g) m[g] += term.exponents[g];
              col[index.at({m, j})] += Rational(term.coeff);
            }
            span.add(std::move(col));
          }
        }
      }
      // Greedy complement among unspanned slots, minimal monomials first.
      for (std::size_t i = 0; i < slots.size(); ++i) {
        Vec ind(slots.size(), Rational(0));
        ind[i] = 1;
        if (span.add(std::move(ind))) model.complement_basis.push_back(slots[i]);
      }
    }

    std::sort(model.complement_basis.begin(), model.complement_basis.end(),
              [](const auto& x, const auto& y) {
                if (x.second != y.second) return x.second < y.second;
                if (total_degree(x.first) != total_degree(y.first))
                  return total_degree(x.first) < total_degree(y.first);
                return x.first > y.first;
              });
    for (const auto& [I, j] : model.complement_basis)
      if (total_degree(I) >= bound - 1)
        fail(ErrorKind::NonFinite,
             e.name + ": unfolding basis did not stabilize below the jet bound " +
                 std::to_string(bound) + "; raise the bound or check finiteness");
  }

  for (const auto& [I, j] : model.complement_basis)
    model.unfolding_weights.push_back(sub_vec(td.comp_char[j], monomial_char(td, I)));

  model.source_weights = td.gen_char;
  model.source_weights.insert(model.source_weights.end(), model.unfolding_weights.begin(),
                              model.unfolding_weights.end());
  model.target_weights = td.comp_char;
  model.target_weights.insert(model.target_weights.end(), model.unfolding_weights.begin(),
                              model.unfolding_weights.end());
  std::sort(model.source_weights.begin(), model.source_weights.end());
  std::sort(model.target_weights.begin(), model.target_weights.end());
  std::sort(model.unfolding_weights.begin(), model.unfolding_weights.end());
  model.scodim = static_cast<long>(a) + model.complement_basis.size();
  model.tcodim = model.scodim + e.l;

  for (const auto& w : model.source_weights)
    if (is_zero_vec(w))
      fail(ErrorKind::InvalidArgument,
           e.name + ": prototype has a zero source weight; equivariant Euler class vanishes");
  return model;
}

bool closed_form_check(const CatalogEntry& e, std::string* diagnostics) {
  const PrototypeModel m = build_prototype(e);
  const long expected = family_scodim(e.algebra(), e.l);
  if (m.scodim == expected) return true;
  if (diagnostics)
    *diagnostics = e.name + " l=" + std::to_string(e.l) + ": jet scodim " +
                   std::to_string(m.scodim) + " != closed form " + std::to_string(expected);
  return false;
}

}  // namespace ssmthom
