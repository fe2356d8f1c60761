#include "core/catalog.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

#include "core/errors.hpp"

namespace ssmthom {

int CatalogEntry::zero_components() const {
  int n = 0;
  for (const auto& comp : genotype)
    if (comp.empty()) ++n;
  return n;
}

int CatalogEntry::max_term_degree() const {
  int d = 0;
  for (const auto& comp : genotype)
    for (const auto& term : comp) {
      int t = 0;
      for (int e : term.exponents) t += e;
      d = std::max(d, t);
    }
  return d;
}

int mather_bound(int l) {
  if (l < 1) fail(ErrorKind::InvalidArgument, "Mather bound needs l >= 1");
  return l <= 3 ? 6 * l + 8 : 6 * l + 7;
}

namespace {

CatalogEntry entry_from_json(const nlohmann::ordered_json& j, const std::string& where) {
  CatalogEntry e;
  for (const char* key : {"name", "l", "generators", "weights", "genotype"})
    if (!j.contains(key))
      fail(ErrorKind::Schema, where + ": catalog entry is missing '" + std::string(key) + "'");
  e.name = j["name"].get<std::string>();
  e.l = j["l"].get<int>();
  e.presentation = j.value("presentation", std::string("family"));
  e.maximal_torus = j.value("maximal_torus", false);
  e.generators = j["generators"].get<int>();
  e.citation = j.value("citation", std::string());
  if (e.l < 1) fail(ErrorKind::Schema, where + ": l must be >= 1");
  if (e.generators < 0) fail(ErrorKind::Schema, where + ": negative generator count");
  for (const auto& w : j["weights"]) {
    const int wi = w.get<int>();
    if (wi <= 0) fail(ErrorKind::Schema, where + ": grading weights must be positive");
    e.weights.push_back(wi);
  }
  if (static_cast<int>(e.weights.size()) != e.generators)
    fail(ErrorKind::Schema, where + ": one grading weight per generator required");
  for (const auto& comp : j["genotype"]) {
    GenotypeComponent gc;
    for (const auto& term : comp) {
      if (!term.is_array() || term.size() != 2)
        fail(ErrorKind::Schema, where + ": genotype terms are [coeff, exponents]");
      GenotypeTerm t;
      t.coeff = term[0].get<long>();
      if (t.coeff == 0) fail(ErrorKind::Schema, where + ": zero genotype coefficient");
      for (const auto& ex : term[1]) {
        const int v = ex.get<int>();
        if (v < 0) fail(ErrorKind::Schema, where + ": negative exponent");
        t.exponents.push_back(v);
      }
      if (static_cast<int>(t.exponents.size()) != e.generators)
        fail(ErrorKind::Schema, where + ": exponent vector length must match generators");
      gc.push_back(std::move(t));
    }
    e.genotype.push_back(std::move(gc));
  }
  if (static_cast<int>(e.genotype.size()) != e.generators + e.l)
    fail(ErrorKind::Schema,
         where + ": genotype must have generators + l components, got " +
             std::to_string(e.genotype.size()));
  // Declared grading must make every nonzero component quasihomogeneous.
  for (std::size_t ci = 0; ci < e.genotype.size(); ++ci) {
    const auto& comp = e.genotype[ci];
    if (comp.empty()) continue;
    long w0 = -1;
    for (const auto& term : comp) {
      long w = 0;
      for (int g = 0; g < e.generators; ++g) w += static_cast<long>(term.exponents[g]) * e.weights[g];
      if (w0 < 0) w0 = w;
      if (w != w0)
        fail(ErrorKind::Schema, where + ": component " + std::to_string(ci) +
                                     " is not quasihomogeneous for the declared weights");
    }
  }
  AlgebraName::parse(e.name);
  return e;
}

}  // namespace

Catalog Catalog::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open catalog file '" + path + "'");
  nlohmann::ordered_json j;
  try {
    in >> j;
  } catch (const std::exception& ex) {
    fail(ErrorKind::Schema, "catalog '" + path + "': " + ex.what());
  }
  if (!j.is_array()) fail(ErrorKind::Schema, "catalog '" + path + "' must be a JSON array");
  std::vector<CatalogEntry> entries;
  std::size_t idx = 0;
  for (const auto& ej : j)
    entries.push_back(entry_from_json(ej, path + "[" + std::to_string(idx++) + "]"));
  return from_entries(std::move(entries));
}

Catalog Catalog::from_entries(std::vector<CatalogEntry> entries) {
  Catalog c;
  c.entries_ = std::move(entries);
  return c;
}

std::vector<Monosingularity> Catalog::monosingularities(int l, int k) const {
  if (k > mather_bound(l) + l)
    fail(ErrorKind::MatherBound,
         "degree bound " + std::to_string(k) + " exceeds the Mather bound M(" +
             std::to_string(l) + ")+l = " + std::to_string(mather_bound(l) + l));
  if (k > kCoverageTcodim + 0)
    fail(ErrorKind::CatalogIncomplete,
         "bundled catalog covers tcodim <= " + std::to_string(kCoverageTcodim) +
             " for l = " + std::to_string(l) + "; monosingularities with tcodim in " +
             std::to_string(kCoverageTcodim + 1) + ".." + std::to_string(k) +
             " are missing");
  std::vector<Monosingularity> out;
  for (const auto& e : entries_) {
    if (e.l != l || !e.maximal_torus) continue;
    Monosingularity m;
    m.entry = e;
    m.scodim = family_scodim(e.algebra(), l);
    m.tcodim = m.scodim + l;
    if (m.tcodim <= k) out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end(), [](const Monosingularity& a, const Monosingularity& b) {
    if (a.tcodim != b.tcodim) return a.tcodim < b.tcodim;
    return a.entry.algebra() < b.entry.algebra();
  });
  return out;
}

std::vector<CatalogEntry> Catalog::presentations(const std::string& name, int l) const {
  std::vector<CatalogEntry> out;
  for (const auto& e : entries_)
    if (e.name == name && e.l == l) out.push_back(e);
  return out;
}

std::vector<CatalogEntry> Catalog::all_for_l(int l) const {
  std::vector<CatalogEntry> out;
  for (const auto& e : entries_)
    if (e.l == l) out.push_back(e);
  return out;
}

}  // namespace ssmthom
