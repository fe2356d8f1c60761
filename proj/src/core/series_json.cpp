#include "core/series_json.hpp"

#include "core/errors.hpp"

namespace ssmthom {

Json partition_to_json(const Partition& p) {
  Json arr = Json::array();
  for (int part : p.parts()) arr.push_back(part);
  return arr;
}

Partition partition_from_json(const Json& j, const std::string& context) {
  if (!j.is_array()) fail(ErrorKind::Schema, context + ": partition must be an array");
  std::vector<int> parts;
  for (const auto& e : j) {
    if (!e.is_number_integer() || e.get<int>() <= 0)
      fail(ErrorKind::Schema, context + ": partition parts must be positive integers");
    parts.push_back(e.get<int>());
  }
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i] > parts[i - 1])
      fail(ErrorKind::Schema, context + ": partition parts must be weakly decreasing");
  return Partition(parts);
}

namespace {

Json variable_to_json(const Variable& v) {
  Json j = Json::object();
  switch (v.kind) {
    case VarKind::Chern:
      j["kind"] = "c";
      j["index"] = v.index;
      break;
    case VarKind::SVar:
      j["kind"] = "s";
      j["partition"] = partition_to_json(v.partition);
      break;
    case VarKind::TVar:
      j["kind"] = "t";
      j["name"] = v.token;
      break;
    case VarKind::XVar:
      j["kind"] = "x";
      j["index"] = v.index;
      break;
  }
  return j;
}

Variable variable_from_json(const Json& j, const std::string& context) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    fail(ErrorKind::Schema, context + ": variable needs a string 'kind'");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "c" || kind == "x") {
    if (!j.contains("index") || !j["index"].is_number_integer())
      fail(ErrorKind::Schema, context + ": '" + kind + "' variable needs an integer 'index'");
    const int idx = j["index"].get<int>();
    if (kind == "c") {
      if (idx < 1) fail(ErrorKind::Schema, context + ": c-index must be >= 1");
      return Variable::chern(idx);
    }
    if (idx < 0) fail(ErrorKind::Schema, context + ": x-index must be >= 0");
    return Variable::x(idx);
  }
  if (kind == "s") {
    if (!j.contains("partition"))
      fail(ErrorKind::Schema, context + ": 's' variable needs a 'partition'");
    return Variable::s(partition_from_json(j["partition"], context));
  }
  if (kind == "t") {
    if (!j.contains("name") || !j["name"].is_string())
      fail(ErrorKind::Schema, context + ": 't' variable needs a string 'name'");
    return Variable::t(j["name"].get<std::string>());
  }
  fail(ErrorKind::Schema, context + ": unknown variable kind '" + kind + "'");
}

}  // namespace

Json series_to_json(const GradedSeries& p) {
  Json j = Json::object();
  j["l"] = p.l;
  j["truncation"] = p.trunc;
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms) {
    Json term = Json::object();
    Json mono = Json::array();
    for (const auto& [v, e] : m.factors())
      for (int i = 0; i < e; ++i) mono.push_back(variable_to_json(v));
    term["monomial"] = std::move(mono);
    term["coeff"] = rational_str(c);
    terms.push_back(std::move(term));
  }
  j["terms"] = std::move(terms);
  return j;
}

GradedSeries series_from_json(const Json& j, const std::string& context) {
  if (!j.is_object()) fail(ErrorKind::Schema, context + ": series must be an object");
  for (const char* key : {"l", "truncation", "terms"})
    if (!j.contains(key))
      fail(ErrorKind::Schema, context + ": series is missing '" + std::string(key) + "'");
  if (!j["l"].is_number_integer() || j["l"].get<int>() < 1)
    fail(ErrorKind::Schema, context + ": 'l' must be a positive integer");
  if (!j["truncation"].is_number_integer() || j["truncation"].get<int>() < 0)
    fail(ErrorKind::Schema, context + ": 'truncation' must be a nonnegative integer");
  GradedSeries out = GradedSeries::zero(j["l"].get<int>(), j["truncation"].get<int>());
  if (!j["terms"].is_array()) fail(ErrorKind::Schema, context + ": 'terms' must be an array");
  std::size_t idx = 0;
  for (const auto& term : j["terms"]) {
    const std::string where = context + ".terms[" + std::to_string(idx++) + "]";
    if (!term.is_object() || !term.contains("monomial") || !term.contains("coeff"))
      fail(ErrorKind::Schema, where + ": term needs 'monomial' and 'coeff'");
    if (!term["coeff"].is_string())
      fail(ErrorKind::Schema, where + ": 'coeff' must be a rational string");
    Rational c;
    try {
      c = parse_rational(term["coeff"].get<std::string>());
    } catch (const Error& e) {
      fail(ErrorKind::Schema, where + ": " + e.what());
    }
    if (c == 0) fail(ErrorKind::Schema, where + ": zero coefficients may not be stored");
    if (!term["monomial"].is_array())
      fail(ErrorKind::Schema, where + ": 'monomial' must be an array");
    Monomial m;
    for (const auto& vj : term["monomial"])
      m = m.times(Monomial::of(variable_from_json(vj, where)));
    if (m.degree(out.l) > out.trunc)
      fail(ErrorKind::Schema, where + ": monomial degree exceeds the truncation bound");
    if (out.terms.count(m)) fail(ErrorKind::Schema, where + ": duplicate monomial");
    out.terms.emplace(m, c);
  }
  return out;
}

std::string json_dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ssmthom
