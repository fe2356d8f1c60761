#pragma once

#include <functional>

#include "core/table.hpp"

namespace ssmthom {

// Generic exponential assembly. `component` supplies the kernel series S_psi
// for every submultiset of psi0 (in any series ring: symbolic s-variables or
// evaluated torus polynomials). Returns the coefficient of t^psi in
// exp(sum S/|Aut| t^psi)|_{<=k}, scaled by |Aut(psi)|, for each psi in psis.
std::map<Multisingularity, GradedSeries> assemble_exponential(
    const Multisingularity& psi0,
    const std::function<GradedSeries(const Multisingularity&)>& component, int l, int k,
    const std::vector<Multisingularity>& psis);

// Target Thom polynomials A_psi for all psi contained in psi0; requires an
// s-linear entry for every submultiset.
SeriesTable assemble_target(const SeriesTable& s_table, const Multisingularity& psi0, int k);

// Source Thom polynomial for an S-multisingularity: R entries for all
// S-submultisingularities combine with the target generating function.
GradedSeries assemble_source(const SeriesTable& r_table, const SeriesTable& s_table,
                             const Multisingularity& psi, int k);

// c_lambda * m(s) -> s_lambda * m(s); degree shifts by l, s-degree by one.
GradedSeries f_map(const GradedSeries& p);

// FF(W) = F(W / (1 + c_1 + c_2 + ...)); output valid through degree k.
GradedSeries ff_map(const GradedSeries& p, int k);

// Inverse of FF on c-only series: R = (sum a_lambda c_lambda)(1 + c_1 + ...),
// truncated at k - l on the c-side. Input must be s-linear.
GradedSeries r_from_s(const GradedSeries& s_series, int k);

}  // namespace ssmthom
