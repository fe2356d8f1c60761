#include "core/fixtures.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>

#include "core/errors.hpp"
#include "core/solver.hpp"
#include "core/structure.hpp"

#ifndef SSMTHOM_DEFAULT_FIXTURE_DIR
#define SSMTHOM_DEFAULT_FIXTURE_DIR "fixtures"
#endif

namespace ssmthom {
namespace fixtures {

namespace {
std::string g_override;
std::mutex g_mutex;

Json load_json(const std::string& filename) {
  const std::string p = path(filename);
  std::ifstream in(p);
  if (!in) fail(ErrorKind::Io, "cannot open fixture '" + p + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& ex) {
    fail(ErrorKind::Schema, "fixture '" + p + "': " + ex.what());
  }
  return j;
}
}  // namespace

std::string directory() {
  {
    std::lock_guard<std::mutex> lock(g_mutex);
    if (!g_override.empty()) return g_override;
  }
  if (const char* env = std::getenv("SSMTHOM_FIXTURE_DIR"); env && *env) return env;
  return SSMTHOM_DEFAULT_FIXTURE_DIR;
}

void set_directory(const std::string& dir) {
  std::lock_guard<std::mutex> lock(g_mutex);
  g_override = dir;
}

std::string path(const std::string& filename) { return directory() + "/" + filename; }

GradedSeries master_l1() {
  return series_from_json(load_json("master_l1_deg14.json"), "master_l1_deg14.json");
}

GradedSeries master_l1_verified(int prefix_degree) {
  if (prefix_degree <= 0) {
    prefix_degree = 6;
    if (const char* env = std::getenv("SSMTHOM_MASTER_PREFIX_CHECK"); env && *env)
      prefix_degree = std::atoi(env);
  }
  GradedSeries master = master_l1();
  if (prefix_degree <= 0) return master;

  static std::mutex cache_mutex;
  static std::map<std::pair<std::string, int>, bool> cache;
  const std::pair<std::string, int> key{directory(), prefix_degree};
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) {
      if (it->second) return master;
      fail(ErrorKind::Inconsistent, "bundled master series failed the solver prefix check");
    }
  }
  const SeriesTable solved = solve_interpolation(Multisingularity(), 1, prefix_degree, catalog());
  GradedSeries prefix = graded_upto(master, prefix_degree);
  prefix.trunc = prefix_degree;
  const bool ok = solved.at(Multisingularity()) == prefix;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache[key] = ok;
  }
  if (!ok)
    fail(ErrorKind::Inconsistent,
         "bundled master series disagrees with the solver through degree " +
             std::to_string(prefix_degree));
  return master;
}

GradedSeries master_prefix(int l) {
  if (l < 2 || l > 4)
    fail(ErrorKind::InvalidArgument, "bundled master prefixes cover l = 2, 3, 4");
  const std::string name = "master_prefix_l" + std::to_string(l) + ".json";
  return series_from_json(load_json(name), name);
}

SeriesTable fig_sl1() { return SeriesTable::from_json(load_json("fig_sl1.json"), "fig_sl1.json"); }

SeriesTable fig_rl1() { return SeriesTable::from_json(load_json("fig_rl1.json"), "fig_rl1.json"); }

SeriesTable source_thom_examples() {
  return SeriesTable::from_json(load_json("source_thom_examples.json"),
                                "source_thom_examples.json");
}

KPolynomialSet printed_k_polys() {
  return KPolynomialSet::from_json(load_json("k_polys_printed.json"), "k_polys_printed.json");
}

std::vector<GradedSeries> pp_l_polys() {
  const Json j = load_json("pp_L_polynomials.json");
  if (!j.contains("L") || !j["L"].is_array() || j["L"].size() != 6)
    fail(ErrorKind::Schema, "pp_L_polynomials.json: needs an array 'L' of six series");
  std::vector<GradedSeries> out;
  int idx = 0;
  for (const auto& e : j["L"])
    out.push_back(series_from_json(e, "pp_L_polynomials.json.L[" + std::to_string(idx++) + "]"));
  return out;
}

std::vector<long> norlund_denominators() {
  const Json j = load_json("norlund_denominators.json");
  if (!j.contains("denominators") || !j["denominators"].is_array())
    fail(ErrorKind::Schema, "norlund_denominators.json: needs 'denominators'");
  std::vector<long> out;
  for (const auto& e : j["denominators"]) out.push_back(e.get<long>());
  return out;
}

Catalog catalog() { return Catalog::load(path("catalog.json")); }

}  // namespace fixtures

SelfTestResult fixtures_selftest(int solver_prefix_degree) {
  SelfTestResult result;
  auto check = [&](const std::string& name, bool pass) {
    result.checks.push_back({name, pass});
    result.pass = result.pass && pass;
  };

  const SeriesTable sl1 = fixtures::fig_sl1();
  const SeriesTable rl1 = fixtures::fig_rl1();

  // FF inverts the printed R-table onto the printed S-table, and the R-table
  // is recovered from the S-table.
  bool ff_ok = true, rs_ok = true;
  for (const auto& [psi, r] : rl1.entries) {
    GradedSeries r_full = r;
    r_full.trunc = rl1.trunc - rl1.l;
    GradedSeries ff = ff_map(r_full, rl1.trunc);
    ff_ok = ff_ok && sl1.has(psi) && (ff == sl1.at(psi));
    GradedSeries back = r_from_s(sl1.at(psi), sl1.trunc);
    rs_ok = rs_ok && (back == r);
  }
  check("ff_map(fig_rl1) == fig_sl1 rows", ff_ok);
  check("r_from_s(fig_sl1) == fig_rl1 rows", rs_ok);

  const Catalog cat = fixtures::catalog();
  check("verify_table(fig_sl1) passes", verify_table(sl1, sl1.l, sl1.trunc, cat).pass);

  const GradedSeries master = fixtures::master_l1();
  const SeriesTable solved =
      solve_interpolation(Multisingularity(), 1, solver_prefix_degree, cat);
  GradedSeries solved_master = solved.at(Multisingularity());
  GradedSeries bundled_prefix = graded_upto(master, solver_prefix_degree);
  bundled_prefix.trunc = solver_prefix_degree;
  check("solved master prefix == bundled master", solved_master == bundled_prefix);

  const std::vector<long> denoms = fixtures::norlund_denominators();
  bool denom_ok = static_cast<int>(denoms.size()) <= master.trunc;
  for (std::size_t i = 0; i < denoms.size() && denom_ok; ++i)
    denom_ok = component_common_denominator(master, static_cast<int>(i) + 1) == denoms[i];
  check("bundled master component denominators", denom_ok);

  return result;
}

}  // namespace ssmthom
