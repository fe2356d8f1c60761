#include "core/table.hpp"

#include <fstream>

#include "core/errors.hpp"

namespace ssmthom {

std::string flavor_name(TableFlavor f) {
  switch (f) {
    case TableFlavor::SLinear: return "S";
    case TableFlavor::RSeries: return "R";
    case TableFlavor::ThomTarget: return "thom-target";
    case TableFlavor::ThomSource: return "thom-source";
  }
  return {};
}

TableFlavor flavor_from_name(const std::string& name) {
  if (name == "S") return TableFlavor::SLinear;
  if (name == "R") return TableFlavor::RSeries;
  if (name == "thom-target") return TableFlavor::ThomTarget;
  if (name == "thom-source") return TableFlavor::ThomSource;
  fail(ErrorKind::Schema, "unknown table flavor '" + name + "'");
}

bool is_s_linear(const GradedSeries& p) {
  for (const auto& [m, c] : p.terms) {
    if (m.sdegree() != 1) return false;
    for (const auto& [v, e] : m.factors())
      if (v.kind != VarKind::SVar) return false;
  }
  return true;
}

bool is_c_only(const GradedSeries& p) {
  for (const auto& [m, c] : p.terms)
    for (const auto& [v, e] : m.factors())
      if (v.kind != VarKind::Chern) return false;
  return true;
}

const GradedSeries& SeriesTable::at(const Multisingularity& m) const {
  auto it = entries.find(m);
  if (it == entries.end())
    fail(ErrorKind::MissingEntry, "table has no entry for '" + m.render() + "'");
  return it->second;
}

void SeriesTable::put(const Multisingularity& m, GradedSeries series) {
  entries.insert_or_assign(m, std::move(series));
}

void SeriesTable::validate() const {
  for (const auto& [m, s] : entries) {
    if (s.l != l)
      fail(ErrorKind::Schema, "entry '" + m.render() + "' has mismatched l");
    switch (flavor) {
      case TableFlavor::SLinear:
        if (!is_s_linear(s))
          fail(ErrorKind::Schema, "entry '" + m.render() + "' is not s-linear");
        if (s.trunc != trunc)
          fail(ErrorKind::Schema, "entry '" + m.render() + "' truncation differs from table");
        break;
      case TableFlavor::RSeries:
        if (!is_c_only(s))
          fail(ErrorKind::Schema, "entry '" + m.render() + "' is not c-only");
        if (s.trunc != trunc - l)
          fail(ErrorKind::Schema, "R entry '" + m.render() +
                                      "' must be truncated at table truncation - l");
        break;
      case TableFlavor::ThomTarget:
      case TableFlavor::ThomSource:
        break;
    }
  }
}

Json SeriesTable::to_json() const {
  Json j = Json::object();
  j["l"] = l;
  j["truncation"] = trunc;
  j["flavor"] = flavor_name(flavor);
  j["provenance"] = provenance;
  Json arr = Json::array();
  for (const auto& [m, s] : entries) {
    Json e = Json::object();
    e["multisingularity"] = m.render();
    e["series"] = series_to_json(s);
    arr.push_back(std::move(e));
  }
  j["entries"] = std::move(arr);
  return j;
}

SeriesTable SeriesTable::from_json(const Json& j, const std::string& context) {
  if (!j.is_object()) fail(ErrorKind::Schema, context + ": table must be an object");
  for (const char* key : {"l", "truncation", "flavor", "entries"})
    if (!j.contains(key))
      fail(ErrorKind::Schema, context + ": table is missing '" + std::string(key) + "'");
  SeriesTable t;
  t.l = j["l"].get<int>();
  t.trunc = j["truncation"].get<int>();
  t.flavor = flavor_from_name(j["flavor"].get<std::string>());
  t.provenance = j.value("provenance", std::string());
  std::size_t idx = 0;
  for (const auto& e : j["entries"]) {
    const std::string where = context + ".entries[" + std::to_string(idx++) + "]";
    if (!e.is_object() || !e.contains("multisingularity") || !e.contains("series"))
      fail(ErrorKind::Schema, where + ": entry needs 'multisingularity' and 'series'");
    Multisingularity m = Multisingularity::parse(e["multisingularity"].get<std::string>());
    GradedSeries s = series_from_json(e["series"], where + ".series");
    if (t.entries.count(m)) fail(ErrorKind::Schema, where + ": duplicate multisingularity");
    t.entries.emplace(std::move(m), std::move(s));
  }
  t.validate();
  return t;
}

SeriesTable SeriesTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open table file '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& ex) {
    fail(ErrorKind::Schema, "table '" + path + "': " + ex.what());
  }
  return from_json(j, path);
}

void SeriesTable::store(const std::string& path) const {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::Io, "cannot write table file '" + path + "'");
  out << json_dump(to_json());
}

}  // namespace ssmthom
