#pragma once

#include <string>
#include <vector>

#include "core/multisingularity.hpp"

namespace ssmthom {

// One genotype term: integer coefficient and an exponent vector over the
// generators. A component with no terms is a zero component (padding).
struct GenotypeTerm {
  long coeff = 0;
  std::vector<int> exponents;
};
using GenotypeComponent = std::vector<GenotypeTerm>;

struct CatalogEntry {
  std::string name;
  int l = 1;
  std::string presentation;  // "family" or "diagonal"
  bool maximal_torus = false;
  int generators = 0;
  std::vector<int> weights;  // positive grading weights, one per generator
  std::vector<GenotypeComponent> genotype;  // generators + l components
  std::string citation;

  int zero_components() const;
  int max_term_degree() const;
  AlgebraName algebra() const { return AlgebraName::parse(name); }
};

struct Monosingularity {
  CatalogEntry entry;
  long scodim = 0;
  long tcodim = 0;
};

// 6l+8 for l in {1,2,3}, 6l+7 for l >= 4.
int mather_bound(int l);

class Catalog {
public:
  static Catalog load(const std::string& path);
  static Catalog from_entries(std::vector<CatalogEntry> entries);

  // All bundled monosingularities of this l with tcodim <= k, solver-usable
  // (maximal-torus certified) presentations only, ordered by tcodim.
  // Errors when k exceeds the Mather bound M(l)+l or the bundled coverage.
  std::vector<Monosingularity> monosingularities(int l, int k) const;

  // Every bundled presentation for this l (including non-maximal ones).
  std::vector<CatalogEntry> presentations(const std::string& name, int l) const;
  std::vector<CatalogEntry> all_for_l(int l) const;

  const std::vector<CatalogEntry>& entries() const { return entries_; }

  // The bundled catalog is complete through this tcodim, for every bundled l.
  static constexpr int kCoverageTcodim = 10;

private:
  std::vector<CatalogEntry> entries_;
};

}  // namespace ssmthom
