#include "core/solver.hpp"

#include <chrono>

#include "core/errors.hpp"
#include "core/linsolve.hpp"

namespace ssmthom {

namespace {

// Per-prototype evaluation cache for s_lambda(p) = eu * prod c_{lambda_i}(f).
class PrototypeEvaluator {
public:
  PrototypeEvaluator(const Monosingularity& zeta, int l, int k)
      : model_(build_prototype(zeta.entry)), k_(k) {
    chern_ = relative_chern(model_, k);
    chern_comp_.assign(k + 1, GradedSeries::zero(l, k));
    for (int i = 1; i <= k; ++i) chern_comp_[i] = graded_component(chern_, i);
    eu_ = euler_ratio(model_);
    eu_.trunc = k;
    total_chern_ = total_chern_of_weights(model_.target_weights, l, k);
  }

  const PrototypeModel& model() const { return model_; }
  const TorusPolynomial& target_total_chern() const { return total_chern_; }

  const TorusPolynomial& s_value(const Partition& lambda) {
    auto it = s_cache_.find(lambda);
    if (it != s_cache_.end()) return it->second;
    TorusPolynomial v = eu_;
    for (int part : lambda.parts()) {
      if (part > k_) {
        v = GradedSeries::zero(v.l, k_);
        break;
      }
      v = truncated_product(v, chern_comp_[part], k_);
    }
    return s_cache_.emplace(lambda, std::move(v)).first->second;
  }

  // Evaluates an s-linear series through the cache.
  TorusPolynomial evaluate_linear(const GradedSeries& s) {
    TorusPolynomial out = GradedSeries::zero(s.l, k_);
    for (const auto& [m, c] : s.terms) {
      const Partition& lambda = m.factors().front().first.partition;
      out = add(out, scale(s_value(lambda), c));
    }
    return out;
  }

private:
  PrototypeModel model_;
  int k_;
  TorusPolynomial chern_;
  std::vector<TorusPolynomial> chern_comp_;
  TorusPolynomial eu_;
  TorusPolynomial total_chern_;
  std::map<Partition, TorusPolynomial> s_cache_;
};

// A_psi evaluated at the prototype, assembled in the torus ring from the
// evaluated kernel rows (substitution commutes with the exponential).
TorusPolynomial assemble_at(PrototypeEvaluator& ev, const SeriesTable& table,
                            const Multisingularity& psi, int k) {
  auto values = assemble_exponential(
      psi,
      [&](const Multisingularity& sub) { return ev.evaluate_linear(table.at(sub)); },
      table.l, k, {psi});
  return values.at(psi);
}

std::vector<WeightVector> fresh_weights(int l) {
  std::vector<WeightVector> w;
  for (int j = 0; j < l; ++j) {
    WeightVector v(l, 0);
    v[j] = 1;
    w.push_back(std::move(v));
  }
  return w;
}

bool is_pure_a0_power(const Multisingularity& m) {
  if (m.is_s_flavor()) return false;
  if (m.empty()) return true;
  return m.entries().size() == 1 && m.entries().front().first == "A0";
}

// One linear equation per torus monomial of a residual polynomial:
// sum_lambda coeff * m_lambda = -base.
void append_rows(std::vector<std::vector<Rational>>& rows, std::vector<std::string>& labels,
                 const std::string& origin,
                 const std::vector<TorusPolynomial>& unknown_values,
                 const TorusPolynomial& base, int degree) {
  std::map<Monomial, std::vector<Rational>> by_monomial;
  auto slot = [&](const Monomial& m) -> std::vector<Rational>& {
    auto it = by_monomial.find(m);
    if (it == by_monomial.end())
      it = by_monomial.emplace(m, std::vector<Rational>(unknown_values.size() + 1, Rational(0)))
               .first;
    return it->second;
  };
  for (std::size_t u = 0; u < unknown_values.size(); ++u)
    for (const auto& [m, c] : unknown_values[u].terms)
      if (m.degree(unknown_values[u].l) == degree) slot(m)[u] = c;
  for (const auto& [m, c] : base.terms)
    if (m.degree(base.l) == degree) slot(m).back() = -c;
  for (auto& [m, row] : by_monomial) {
    rows.push_back(std::move(row));
    labels.push_back(origin + " [" + render(m) + "]");
  }
}

// First row index at which the growing system turns inconsistent.
std::string first_violated_row(const std::vector<std::vector<Rational>>& rows,
                               const std::vector<std::string>& labels, int n) {
  std::vector<std::vector<Rational>> prefix;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    prefix.push_back(rows[i]);
    if (!exact_solve(prefix, n).consistent)
      return i < labels.size() ? labels[i] : "row " + std::to_string(i);
  }
  return "unknown row";
}

}  // namespace

CatalogEntry make_a0_entry(int l) {
  CatalogEntry e;
  e.name = "A0";
  e.l = l;
  e.presentation = "family";
  e.maximal_torus = true;
  e.generators = 0;
  e.genotype.assign(l, GenotypeComponent{});
  e.citation = "point inclusion into C^l";
  return e;
}

SeriesTable solve_interpolation(const Multisingularity& psi0, int l, int k,
                                const Catalog& catalog, SolveReport* report) {
  if (!is_pure_a0_power(psi0))
    fail(ErrorKind::InvalidArgument,
         "solve: psi0 must be the empty multisingularity or a pure A0 power; the base-case "
         "condition is analytic only for A0");
  const int height = psi0.empty() ? 0 : psi0.entries().front().second;

  const auto zetas = catalog.monosingularities(l, k);
  std::vector<PrototypeEvaluator> evals;
  std::vector<long> tcodims;
  evals.reserve(zetas.size());
  for (const auto& z : zetas) {
    evals.emplace_back(z, l, k);
    tcodims.push_back(z.tcodim);
  }
  // The A0 base case: prototype pt -> C^l with fresh target weights.
  const Monosingularity a0{make_a0_entry(l), 0, l};
  PrototypeEvaluator a0_eval(a0, l, k);
  const TorusPolynomial origin = ssm_origin(l, fresh_weights(l), k);

  SeriesTable table;
  table.l = l;
  table.trunc = k;
  table.flavor = TableFlavor::SLinear;
  table.provenance = "solved";
  std::vector<Multisingularity> rows_order;
  for (int j = 0; j <= height; ++j) {
    Multisingularity psi = j == 0 ? Multisingularity()
                                  : Multisingularity({{std::string("A0"), j}});
    table.put(psi, GradedSeries::zero(l, k));
    rows_order.push_back(std::move(psi));
  }

  const auto t0 = std::chrono::steady_clock::now();
  if (report) {
    report->l = l;
    report->k = k;
    report->psi0 = psi0.render();
    report->stages.clear();
  }

  for (const auto& psi : rows_order) {
    const bool is_a0_row = !psi.empty() && psi.total_multiplicity() == 1;
    const long psi_tcodim = psi.empty() ? 0 : codims(psi, l).tcodim;
    for (int d = 1; d <= k; ++d) {
      const auto stage_start = std::chrono::steady_clock::now();
      std::vector<Partition> unknowns =
          d >= l ? partitions_of(d - l) : std::vector<Partition>{};

      std::vector<std::vector<Rational>> rows;
      std::vector<std::string> labels;
      for (std::size_t zi = 0; zi < evals.size(); ++zi) {
        if (tcodims[zi] > d) continue;
        Multisingularity zeta_multi({{zetas[zi].entry.name, 1}});
        if (psi == zeta_multi) continue;  // condition (2) excludes psi = {zeta}
        TorusPolynomial a = assemble_at(evals[zi], table, psi, d);
        TorusPolynomial base =
            truncated_product(a, evals[zi].target_total_chern(), d);
        std::vector<TorusPolynomial> unknown_values;
        for (const auto& lambda : unknowns)
          unknown_values.push_back(evals[zi].s_value(lambda));
        append_rows(rows, labels, "condition2 zeta=" + zetas[zi].entry.name, unknown_values,
                    base, d);
      }
      if (is_a0_row) {
        // Base-case rows: A_{A0}(i)|_d = ssm(origin)|_d.
        TorusPolynomial a = assemble_at(a0_eval, table, psi, d);
        TorusPolynomial base = sub(a, origin);
        std::vector<TorusPolynomial> unknown_values;
        for (const auto& lambda : unknowns)
          unknown_values.push_back(a0_eval.s_value(lambda));
        append_rows(rows, labels, "condition1 A0 base case", unknown_values, base, d);
      }

      // The forced low-degree vanishing rows; active rank increase is reported.
      std::vector<std::vector<Rational>> vanishing;
      if (!psi.empty() && d < psi_tcodim) {
        for (std::size_t u = 0; u < unknowns.size(); ++u) {
          std::vector<Rational> row(unknowns.size() + 1, Rational(0));
          row[u] = 1;
          vanishing.push_back(std::move(row));
          labels.push_back("vanishing below tcodim: s_" + unknowns[u].render());
        }
      }

      const int n = static_cast<int>(unknowns.size());
      std::vector<std::vector<Rational>> all_rows = rows;
      all_rows.insert(all_rows.end(), vanishing.begin(), vanishing.end());
      if (n == 0) {
        for (std::size_t i = 0; i < all_rows.size(); ++i)
          if (all_rows[i].back() != 0)
            fail(ErrorKind::Inconsistent,
                 "solve " + psi.render() + " degree " + std::to_string(d) +
                     ": constraints are inconsistent with no unknowns in range; violated: " +
                     (i < labels.size() ? labels[i] : "vanishing row"));
        continue;
      }
      ExactSolveOutcome outcome = exact_solve(all_rows, n);
      if (!outcome.consistent)
        fail(ErrorKind::Inconsistent,
             "solve " + psi.render() + " degree " + std::to_string(d) +
                 ": no exact solution (Inconsistent); first violated row: " +
                 first_violated_row(all_rows, labels, n));
      if (outcome.nullity > 0)
        fail(ErrorKind::Underdetermined,
             "solve " + psi.render() + " degree " + std::to_string(d) +
                 ": constraints are insufficient (Underdetermined, nullspace dimension " +
                 std::to_string(outcome.nullity) + ")");

      bool vanishing_active = false;
      if (!vanishing.empty()) {
        std::vector<std::vector<Rational>> coeff_only;
        for (const auto& r : rows) coeff_only.emplace_back(r.begin(), r.end() - 1);
        vanishing_active = exact_rank(coeff_only, n) < outcome.rank;
      }

      GradedSeries solved = table.at(psi);
      for (std::size_t u = 0; u < unknowns.size(); ++u)
        solved.add_term(Monomial::of(Variable::s(unknowns[u])), (*outcome.unique_solution)[u]);
      table.put(psi, std::move(solved));

      if (report) {
        SolveStage st;
        st.psi = psi.render();
        st.degree = d;
        st.unknowns = n;
        st.rows = static_cast<int>(all_rows.size());
        st.rank = outcome.rank;
        st.nullity = outcome.nullity;
        st.vanishing_active = vanishing_active;
        st.millis = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - stage_start)
                        .count();
        report->stages.push_back(std::move(st));
      }
    }
  }
  if (report)
    report->total_millis =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return table;
}

std::vector<TorusPolynomial> condition2_residual(const SeriesTable& tables,
                                                 const Multisingularity& psi,
                                                 const Monosingularity& zeta, int k) {
  if (zeta.entry.l != tables.l)
    fail(ErrorKind::InvalidArgument,
         "prototype and table have different relative dimensions");
  Multisingularity zeta_multi({{zeta.entry.name, 1}});
  if (psi == zeta_multi)
    fail(ErrorKind::InvalidArgument,
         "condition (2) excludes psi = {zeta}; the base case is condition (1)");
  if (zeta.tcodim > k)
    fail(ErrorKind::InvalidArgument, "tcodim(zeta) exceeds the degree bound");
  PrototypeEvaluator ev(zeta, tables.l, k);
  TorusPolynomial a = assemble_at(ev, tables, psi, k);
  TorusPolynomial res = truncated_product(a, ev.target_total_chern(), k);
  std::vector<TorusPolynomial> out;
  for (long r = zeta.tcodim; r <= k; ++r) out.push_back(graded_component(res, static_cast<int>(r)));
  return out;
}

std::vector<TorusPolynomial> condition1_residual_A0(const SeriesTable& tables, int l, int k) {
  const Monosingularity a0{make_a0_entry(l), 0, l};
  PrototypeEvaluator ev(a0, l, k);
  const Multisingularity psi({{std::string("A0"), 1}});
  TorusPolynomial a = assemble_at(ev, tables, psi, k);
  TorusPolynomial diff = sub(a, ssm_origin(l, fresh_weights(l), k));
  std::vector<TorusPolynomial> out;
  for (int r = 0; r <= k; ++r) out.push_back(graded_component(diff, r));
  return out;
}

VerifyReport verify_table(const SeriesTable& table, int l, int k, const Catalog& catalog) {
  VerifyReport report;
  report.l = l;
  report.k = k;
  const auto zetas = catalog.monosingularities(l, k);

  for (const auto& [psi, series] : table.entries) {
    // Low-degree vanishing below tcodim(psi).
    if (!psi.empty()) {
      const long tc = codims(psi, l).tcodim;
      for (int r = 1; r < tc && r <= k; ++r) {
        VerifyCheck c;
        c.kind = "vanishing";
        c.psi = psi.render();
        c.degree = r;
        c.pass = graded_component(series, r).is_zero();
        report.pass = report.pass && c.pass;
        report.checks.push_back(std::move(c));
      }
    }
    for (const auto& zeta : zetas) {
      Multisingularity zeta_multi({{zeta.entry.name, 1}});
      if (psi == zeta_multi) continue;
      const auto residual = condition2_residual(table, psi, zeta, k);
      for (std::size_t i = 0; i < residual.size(); ++i) {
        VerifyCheck c;
        c.kind = "condition2";
        c.psi = psi.render();
        c.zeta = zeta.entry.name;
        c.degree = static_cast<int>(zeta.tcodim + i);
        c.pass = residual[i].is_zero();
        report.pass = report.pass && c.pass;
        report.checks.push_back(std::move(c));
      }
    }
  }

  const Multisingularity a0_multi({{std::string("A0"), 1}});
  if (table.has(a0_multi) && table.has(Multisingularity())) {
    const auto residual = condition1_residual_A0(table, l, k);
    for (std::size_t r = 0; r < residual.size(); ++r) {
      VerifyCheck c;
      c.kind = "condition1-A0";
      c.psi = a0_multi.render();
      c.degree = static_cast<int>(r);
      c.pass = residual[r].is_zero();
      report.pass = report.pass && c.pass;
      report.checks.push_back(std::move(c));
    }
  }
  return report;
}

Json SolveReport::to_json() const {
  Json j = Json::object();
  j["l"] = l;
  j["k"] = k;
  j["mather_bound"] = mather_bound(l);
  j["psi0"] = psi0;
  j["total_millis"] = total_millis;
  Json stages_json = Json::array();
  for (const auto& s : stages) {
    Json sj = Json::object();
    sj["psi"] = s.psi;
    sj["degree"] = s.degree;
    sj["unknowns"] = s.unknowns;
    sj["rows"] = s.rows;
    sj["rank"] = s.rank;
    sj["nullity"] = s.nullity;
    sj["vanishing_active"] = s.vanishing_active;
    sj["millis"] = s.millis;
    stages_json.push_back(std::move(sj));
  }
  j["stages"] = std::move(stages_json);
  return j;
}

Json VerifyReport::to_json() const {
  Json j = Json::object();
  j["l"] = l;
  j["k"] = k;
  j["pass"] = pass;
  Json checks_json = Json::array();
  for (const auto& c : checks) {
    Json cj = Json::object();
    cj["kind"] = c.kind;
    cj["psi"] = c.psi;
    if (!c.zeta.empty()) cj["zeta"] = c.zeta;
    cj["degree"] = c.degree;
    cj["pass"] = c.pass;
    checks_json.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks_json);
  return j;
}

}  // namespace ssmthom
