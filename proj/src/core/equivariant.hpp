#pragma once

#include "core/prototype.hpp"
#include "core/series.hpp"

namespace ssmthom {

// Polynomials in the torus characters x_0..x_{rank-1} are GradedSeries whose
// monomials carry only X variables (each of cohomological degree 1).
using TorusPolynomial = GradedSeries;

TorusPolynomial linear_form(const WeightVector& w, int l, int trunc);

// c(rho^T)/c(rho^S) truncated at k; shared unfolding weights cancel exactly
// before the series division.
TorusPolynomial relative_chern(const PrototypeModel& p, int k);

// eu(rho^T)/eu(rho^S): homogeneous of degree l. Exact division; a nonzero
// remainder raises NonDivisible.
TorusPolynomial euler_ratio(const PrototypeModel& p);

// Substitutes c_i -> c_i(f) and s_lambda -> euler_ratio * prod c_{lambda_i}(f).
// The input must not contain t-variables.
TorusPolynomial evaluate_at_prototype(const GradedSeries& series, const PrototypeModel& p, int k);

// prod w_j / prod (1 + w_j): equivariant class of the origin inside the
// weighted vector space, truncated at k. Weights must be nonzero.
TorusPolynomial ssm_origin(int l, const std::vector<WeightVector>& weights, int k);

// Total equivariant Chern class prod (1 + w) truncated at k.
TorusPolynomial total_chern_of_weights(const std::vector<WeightVector>& weights, int l, int k);

// Exact multivariate division by a linear form; remainder raises NonDivisible.
TorusPolynomial divide_by_linear(const TorusPolynomial& poly, const WeightVector& w);

}  // namespace ssmthom
