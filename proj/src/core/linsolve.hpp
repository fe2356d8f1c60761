#pragma once

#include <optional>
#include <vector>

#include "core/rational.hpp"

namespace ssmthom {

// Exact dense linear algebra over the rationals: rows are scaled to integers
// and eliminated fraction-free (Bareiss) with deterministic pivoting on the
// given column order.
struct ExactSolveOutcome {
  int rank = 0;
  int nullity = 0;
  bool consistent = true;
  std::optional<std::vector<Rational>> unique_solution;  // set iff consistent and nullity == 0
};

// rows: augmented (n coefficients + rhs).
ExactSolveOutcome exact_solve(const std::vector<std::vector<Rational>>& rows, int n);

// Rank of the coefficient matrix alone (rows of length n).
int exact_rank(const std::vector<std::vector<Rational>>& rows, int n);

}  // namespace ssmthom
