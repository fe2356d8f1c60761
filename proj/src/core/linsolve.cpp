#include "core/linsolve.hpp"

#include <vector>

#include "core/errors.hpp"

namespace ssmthom {

namespace {

// Scale a rational row to integers by the lcm of denominators.
std::vector<Integer> integer_row(const std::vector<Rational>& row) {
  Integer lcm = 1;
  for (const auto& x : row) lcm = lcm / gcd(lcm, denominator(x)) * denominator(x);
  std::vector<Integer> out;
  out.reserve(row.size());
  for (const auto& x : row) out.push_back(numerator(x) * (lcm / denominator(x)));
  return out;
}

struct Echelon {
  std::vector<std::vector<Integer>> m;
  std::vector<int> pivot_cols;  // one per pivot row, ascending
  int width = 0;
};

// Fraction-free elimination; pivot = first remaining row with a nonzero entry
// in the leftmost unprocessed column. Bareiss divisions are exact (entries
// stay minors of the integer matrix); this is asserted.
Echelon eliminate(const std::vector<std::vector<Rational>>& rows, int width) {
  Echelon e;
  e.width = width;
  for (const auto& r : rows) e.m.push_back(integer_row(r));
  Integer prev = 1;
  std::size_t rank = 0;
  for (int col = 0; col < width && rank < e.m.size(); ++col) {
    std::size_t sel = rank;
    while (sel < e.m.size() && e.m[sel][col] == 0) ++sel;
    if (sel == e.m.size()) continue;
    std::swap(e.m[rank], e.m[sel]);
    const std::size_t cols = e.m[rank].size();
    for (std::size_t i = rank + 1; i < e.m.size(); ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        Integer num = e.m[rank][col] * e.m[i][j] - e.m[i][col] * e.m[rank][j];
        Integer q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        if (r != 0) fail(ErrorKind::InvalidArgument, "fraction-free elimination division failed");
        e.m[i][j] = q;
      }
      e.m[i][col] = 0;
    }
    prev = e.m[rank][col];
    e.pivot_cols.push_back(col);
    ++rank;
  }
  return e;
}

}  // namespace

ExactSolveOutcome exact_solve(const std::vector<std::vector<Rational>>& rows, int n) {
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != n + 1)
      fail(ErrorKind::InvalidArgument, "augmented row width mismatch");
  ExactSolveOutcome out;
  const Echelon e = eliminate(rows, n);
  out.rank = static_cast<int>(e.pivot_cols.size());
  out.nullity = n - out.rank;
  for (std::size_t i = e.pivot_cols.size(); i < e.m.size(); ++i)
    if (e.m[i][n] != 0) out.consistent = false;
  if (!out.consistent || out.nullity > 0) return out;

  std::vector<Rational> x(n, Rational(0));
  for (int p = out.rank - 1; p >= 0; --p) {
    const int col = e.pivot_cols[p];
    Rational acc = Rational(e.m[p][n]);
    for (int j = col + 1; j < n; ++j)
      if (e.m[p][j] != 0) acc -= Rational(e.m[p][j]) * x[j];
    x[col] = acc / Rational(e.m[p][col]);
  }
  out.unique_solution = std::move(x);
  return out;
}

int exact_rank(const std::vector<std::vector<Rational>>& rows, int n) {
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != n)
      fail(ErrorKind::InvalidArgument, "row width mismatch");
  return static_cast<int>(eliminate(rows, n).pivot_cols.size());
}

}  // namespace ssmthom
