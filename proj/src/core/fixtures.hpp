#pragma once

#include <string>
#include <vector>

#include "core/catalog.hpp"
#include "core/mond.hpp"
#include "core/table.hpp"

namespace ssmthom {

// Bundled data files. Directory resolution: explicit override, then the
// SSMTHOM_FIXTURE_DIR environment variable, then the compiled-in default.
namespace fixtures {

std::string directory();
void set_directory(const std::string& dir);
std::string path(const std::string& filename);

GradedSeries master_l1();            // l=1 master through degree 15
// As above, but first re-solves a low-degree prefix and demands coefficient
// equality with the bundled listing. prefix_degree <= 0 reads the
// SSMTHOM_MASTER_PREFIX_CHECK environment variable (default 6; 0 disables).
// The check runs once per fixture directory and is then cached.
GradedSeries master_l1_verified(int prefix_degree = 0);
GradedSeries master_prefix(int l);   // printed prefixes for l = 2, 3, 4
SeriesTable fig_sl1();               // 14 S-rows, degrees <= 6
SeriesTable fig_rl1();               // 11 R-rows, c-degrees <= 5
SeriesTable source_thom_examples();  // two worked source Thom polynomials
KPolynomialSet printed_k_polys();    // K_1..K_6
std::vector<GradedSeries> pp_l_polys();  // L_0..L_5
std::vector<long> norlund_denominators();
Catalog catalog();

}  // namespace fixtures

struct SelfTestCheck {
  std::string name;
  bool pass = false;
};

struct SelfTestResult {
  bool pass = true;
  std::vector<SelfTestCheck> checks;
};

// Re-derives the bundled data: R-to-S conversion of the printed tables, the
// interpolation verification of the S-table, the solver prefix of the master
// series, and the component denominators.
SelfTestResult fixtures_selftest(int solver_prefix_degree = 6);

}  // namespace ssmthom
