#pragma once

#include <map>
#include <string>

#include "core/multisingularity.hpp"
#include "core/series.hpp"
#include "core/series_json.hpp"

namespace ssmthom {

enum class TableFlavor { SLinear, RSeries, ThomTarget, ThomSource };

std::string flavor_name(TableFlavor f);
TableFlavor flavor_from_name(const std::string& name);

// Mapping from multisingularities to series. Truncations are stored in the
// target-degree convention: R-flavor entries hold series truncated at
// trunc - l on the c-side.
struct SeriesTable {
  int l = 1;
  int trunc = 0;
  TableFlavor flavor = TableFlavor::SLinear;
  std::string provenance;  // "solved" | "bundled-from-paper" | "imported"
  std::map<Multisingularity, GradedSeries> entries;

  const GradedSeries& at(const Multisingularity& m) const;
  bool has(const Multisingularity& m) const { return entries.count(m) > 0; }
  void put(const Multisingularity& m, GradedSeries series);

  // Flavor invariants: S entries s-linear in s-variables only, R entries
  // c-only, matching l and truncation conventions.
  void validate() const;

  Json to_json() const;
  static SeriesTable from_json(const Json& j, const std::string& context = "table");
  static SeriesTable load(const std::string& path);
  void store(const std::string& path) const;
};

bool is_s_linear(const GradedSeries& p);
bool is_c_only(const GradedSeries& p);

}  // namespace ssmthom
