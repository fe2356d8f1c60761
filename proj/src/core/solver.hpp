#pragma once

#include "core/equivariant.hpp"
#include "core/structure.hpp"
#include "core/table.hpp"

namespace ssmthom {

struct SolveStage {
  std::string psi;
  int degree = 0;
  int unknowns = 0;
  int rows = 0;
  int rank = 0;
  int nullity = 0;
  bool vanishing_active = false;  // low-degree vanishing rows increased the rank
  double millis = 0.0;
};

struct SolveReport {
  int l = 0;
  int k = 0;
  std::string psi0;
  std::vector<SolveStage> stages;
  double total_millis = 0.0;
  Json to_json() const;
};

// Solves the interpolation constraints degree by degree for psi0 equal to the
// empty multisingularity or a pure A0 power; returns the S-table for all
// submultisets of psi0. Raises Underdetermined/Inconsistent with the failing
// degree when the linear stage is not uniquely solvable.
SeriesTable solve_interpolation(const Multisingularity& psi0, int l, int k,
                                const Catalog& catalog, SolveReport* report = nullptr);

// Residual of the degree-cut support condition at the prototype of zeta:
// components r = tcodim(zeta)..k of A_psi(p_zeta) * c(TN_zeta). All-zero
// means the constraint holds. psi must differ from {zeta}.
std::vector<TorusPolynomial> condition2_residual(const SeriesTable& tables,
                                                 const Multisingularity& psi,
                                                 const Monosingularity& zeta, int k);

// Residual of the A0 base-case normalization: components 0..k of
// A_{A0}(i) - ssm(origin in C^l).
std::vector<TorusPolynomial> condition1_residual_A0(const SeriesTable& tables, int l, int k);

struct VerifyCheck {
  std::string kind;  // "condition2" | "condition1-A0" | "vanishing"
  std::string psi;
  std::string zeta;  // empty for non-condition2 checks
  int degree = 0;
  bool pass = false;
};

struct VerifyReport {
  bool pass = true;
  int l = 0;
  int k = 0;
  std::vector<VerifyCheck> checks;
  Json to_json() const;
};

// Both interpolation conditions plus the low-degree vanishing check, run as a
// pass/fail matrix over every table row and every catalog prototype.
VerifyReport verify_table(const SeriesTable& table, int l, int k, const Catalog& catalog);

// Structural A0 catalog entry (pt -> C^l); used by the base-case condition.
CatalogEntry make_a0_entry(int l);

}  // namespace ssmthom
