#include "ssmthom/ssmthom.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <string>

#include "core/errors.hpp"
#include "core/fixtures.hpp"
#include "core/mond.hpp"
#include "core/solver.hpp"
#include "core/structure.hpp"

using namespace ssmthom;

struct ssmthom_series {
  GradedSeries value;
};

struct ssmthom_table {
  SeriesTable value;
};

namespace {

thread_local std::string g_last_error;

int status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return SSMTHOM_ERR_INVALID;
    case ErrorKind::Schema: return SSMTHOM_ERR_SCHEMA;
    case ErrorKind::NonDivisible:
    case ErrorKind::Underdetermined:
    case ErrorKind::Inconsistent:
    case ErrorKind::CatalogIncomplete:
    case ErrorKind::MatherBound:
    case ErrorKind::NonFinite: return SSMTHOM_ERR_COMPUTE;
    case ErrorKind::MissingEntry: return SSMTHOM_ERR_MISSING;
    case ErrorKind::Io: return SSMTHOM_ERR_IO;
  }
  return SSMTHOM_ERR_INTERNAL;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    return SSMTHOM_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SSMTHOM_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return SSMTHOM_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool cond, const char* message) {
  if (!cond) fail(ErrorKind::InvalidArgument, message);
}

}  // namespace

extern "C" {

const char* ssmthom_last_error(void) { return g_last_error.c_str(); }

void ssmthom_string_free(char* s) { std::free(s); }
void ssmthom_series_free(ssmthom_series* s) { delete s; }
void ssmthom_table_free(ssmthom_table* t) { delete t; }

int ssmthom_set_fixture_dir(const char* dir) {
  return guarded([&] {
    require(dir != nullptr, "dir must not be NULL");
    fixtures::set_directory(dir);
  });
}

int ssmthom_fixture_dir(char** out) {
  return guarded([&] {
    require(out != nullptr, "out must not be NULL");
    *out = dup_string(fixtures::directory());
  });
}

int ssmthom_solve_master(int l, int degree, ssmthom_series** out, char** report_json) {
  return guarded([&] {
    require(out != nullptr, "out must not be NULL");
    SolveReport report;
    const Catalog cat = fixtures::catalog();
    SeriesTable t = solve_interpolation(Multisingularity(), l, degree, cat, &report);
    *out = new ssmthom_series{t.at(Multisingularity())};
    if (report_json) *report_json = dup_string(json_dump(report.to_json()));
  });
}

int ssmthom_solve_tower(int l, int degree, int height, ssmthom_table** out,
                        char** report_json) {
  return guarded([&] {
    require(out != nullptr, "out must not be NULL");
    require(height >= 1, "tower height must be >= 1");
    SolveReport report;
    const Catalog cat = fixtures::catalog();
    Multisingularity psi0({{std::string("A0"), height}});
    SeriesTable t = solve_interpolation(psi0, l, degree, cat, &report);
    *out = new ssmthom_table{std::move(t)};
    if (report_json) *report_json = dup_string(json_dump(report.to_json()));
  });
}

int ssmthom_series_load(const char* path, ssmthom_series** out) {
  return guarded([&] {
    require(path && out, "path and out must not be NULL");
    std::ifstream in(path);
    if (!in) fail(ErrorKind::Io, "cannot open '" + std::string(path) + "'");
    Json j;
    try {
      in >> j;
    } catch (const std::exception& ex) {
      fail(ErrorKind::Schema, std::string(path) + ": " + ex.what());
    }
    *out = new ssmthom_series{series_from_json(j, path)};
  });
}

int ssmthom_series_store(const ssmthom_series* s, const char* path) {
  return guarded([&] {
    require(s && path, "series and path must not be NULL");
    std::ofstream outf(path);
    if (!outf) fail(ErrorKind::Io, "cannot write '" + std::string(path) + "'");
    outf << json_dump(series_to_json(s->value));
  });
}

int ssmthom_series_to_json(const ssmthom_series* s, char** out) {
  return guarded([&] {
    require(s && out, "series and out must not be NULL");
    *out = dup_string(json_dump(series_to_json(s->value)));
  });
}

int ssmthom_series_from_json(const char* json_text, ssmthom_series** out) {
  return guarded([&] {
    require(json_text && out, "json and out must not be NULL");
    Json j;
    try {
      j = Json::parse(json_text);
    } catch (const std::exception& ex) {
      fail(ErrorKind::Schema, std::string("series JSON: ") + ex.what());
    }
    *out = new ssmthom_series{series_from_json(j, "series")};
  });
}

int ssmthom_series_render(const ssmthom_series* s, int compress_exponents, char** out) {
  return guarded([&] {
    require(s && out, "series and out must not be NULL");
    RenderOptions opts;
    opts.compress_exponents = compress_exponents != 0;
    *out = dup_string(render(s->value, opts));
  });
}

int ssmthom_table_load(const char* path, ssmthom_table** out) {
  return guarded([&] {
    require(path && out, "path and out must not be NULL");
    *out = new ssmthom_table{SeriesTable::load(path)};
  });
}

int ssmthom_table_store(const ssmthom_table* t, const char* path) {
  return guarded([&] {
    require(t && path, "table and path must not be NULL");
    t->value.store(path);
  });
}

int ssmthom_table_to_json(const ssmthom_table* t, char** out) {
  return guarded([&] {
    require(t && out, "table and out must not be NULL");
    *out = dup_string(json_dump(t->value.to_json()));
  });
}

int ssmthom_table_entry(const ssmthom_table* t, const char* multisingularity,
                        ssmthom_series** out) {
  return guarded([&] {
    require(t && multisingularity && out, "arguments must not be NULL");
    *out = new ssmthom_series{t->value.at(Multisingularity::parse(multisingularity))};
  });
}

int ssmthom_table_info(const ssmthom_table* t, int* l, int* truncation, char** flavor) {
  return guarded([&] {
    require(t != nullptr, "table must not be NULL");
    if (l) *l = t->value.l;
    if (truncation) *truncation = t->value.trunc;
    if (flavor) *flavor = dup_string(flavor_name(t->value.flavor));
  });
}

int ssmthom_table_keys(const ssmthom_table* t, char** out) {
  return guarded([&] {
    require(t && out, "table and out must not be NULL");
    std::string keys;
    for (const auto& [m, s] : t->value.entries) keys += m.render() + "\n";
    *out = dup_string(keys);
  });
}

int ssmthom_assemble_target(const ssmthom_table* s_table, const char* psi, int degree,
                            ssmthom_series** out) {
  return guarded([&] {
    require(s_table && psi && out, "arguments must not be NULL");
    const Multisingularity m = Multisingularity::parse(psi);
    SeriesTable assembled = assemble_target(s_table->value, m, degree);
    *out = new ssmthom_series{assembled.at(m)};
  });
}

int ssmthom_assemble_source(const ssmthom_table* r_table, const ssmthom_table* s_table,
                            const char* psi, int degree, ssmthom_series** out) {
  return guarded([&] {
    require(s_table && psi && out, "s_table, psi and out must not be NULL");
    const Multisingularity m = Multisingularity::parse(psi);
    SeriesTable r;
    if (r_table) {
      r = r_table->value;
    } else {
      // R rows derived from the S-table (independent of the distinguished
      // element), in the target-degree truncation convention.
      r.l = s_table->value.l;
      r.trunc = s_table->value.trunc;
      r.flavor = TableFlavor::RSeries;
      r.provenance = "solved";
      for (const auto& [key, series] : s_table->value.entries)
        if (!key.empty()) r.put(key, r_from_s(series, s_table->value.trunc));
    }
    *out = new ssmthom_series{assemble_source(r, s_table->value, m, degree)};
  });
}

int ssmthom_f_map(const ssmthom_series* s, ssmthom_series** out) {
  return guarded([&] {
    require(s && out, "series and out must not be NULL");
    *out = new ssmthom_series{f_map(s->value)};
  });
}

int ssmthom_ff_map(const ssmthom_series* s, int degree, ssmthom_series** out) {
  return guarded([&] {
    require(s && out, "series and out must not be NULL");
    *out = new ssmthom_series{ff_map(s->value, degree)};
  });
}

int ssmthom_r_from_s(const ssmthom_series* s, int degree, ssmthom_series** out) {
  return guarded([&] {
    require(s && out, "series and out must not be NULL");
    *out = new ssmthom_series{r_from_s(s->value, degree)};
  });
}

int ssmthom_verify_table(const ssmthom_table* t, int degree, int* pass, char** report_json) {
  return guarded([&] {
    require(t && pass, "table and pass must not be NULL");
    const Catalog cat = fixtures::catalog();
    const VerifyReport report = verify_table(t->value, t->value.l, degree, cat);
    *pass = report.pass ? 1 : 0;
    if (report_json) *report_json = dup_string(json_dump(report.to_json()));
  });
}

int ssmthom_prototype_render(const char* name, int l, const char* presentation, char** text,
                             char** json_out) {
  return guarded([&] {
    require(name && text, "name and text must not be NULL");
    const Catalog cat = fixtures::catalog();
    auto presentations = cat.presentations(name, l);
    if (presentations.empty())
      fail(ErrorKind::MissingEntry, "no bundled catalog entry '" + std::string(name) +
                                        "' for l = " + std::to_string(l));
    const CatalogEntry* chosen = nullptr;
    for (const auto& e : presentations) {
      if (presentation && e.presentation != presentation) continue;
      if (!chosen || (e.maximal_torus && !chosen->maximal_torus)) chosen = &e;
    }
    if (!chosen)
      fail(ErrorKind::MissingEntry, "no presentation '" + std::string(presentation) +
                                        "' bundled for '" + std::string(name) + "'");
    const PrototypeModel model = build_prototype(*chosen);

    auto render_weight = [](const WeightVector& w) {
      std::string out;
      for (std::size_t j = 0; j < w.size(); ++j) {
        if (w[j] == 0) continue;
        const std::string var =
            j < 5 ? std::string(1, static_cast<char>('a' + j)) : "x" + std::to_string(j);
        if (w[j] > 0 && !out.empty()) out += "+";
        if (w[j] == -1)
          out += "-";
        else if (w[j] != 1)
          out += std::to_string(w[j]);
        out += var;
      }
      return out.empty() ? std::string("0") : out;
    };
    auto render_list = [&](const std::vector<WeightVector>& ws) {
      std::string out = "{";
      for (std::size_t i = 0; i < ws.size(); ++i) {
        if (i) out += ", ";
        out += render_weight(ws[i]);
      }
      return out + "}";
    };
    std::string t;
    t += model.name + " (l=" + std::to_string(model.l) + ", presentation " +
         chosen->presentation + ")\n";
    t += "dims: scodim " + std::to_string(model.scodim) + ", tcodim " +
         std::to_string(model.tcodim) + ", torus rank " + std::to_string(model.rank) + "\n";
    t += "source weights: " + render_list(model.source_weights) + "\n";
    t += "target weights: " + render_list(model.target_weights) + "\n";
    t += "unfolding weights: " + render_list(model.unfolding_weights) + "\n";
    *text = dup_string(t);

    if (json_out) {
      Json j = Json::object();
      j["name"] = chosen->name;
      j["l"] = chosen->l;
      j["presentation"] = chosen->presentation;
      j["maximal_torus"] = chosen->maximal_torus;
      j["generators"] = chosen->generators;
      j["weights"] = chosen->weights;
      Json genotype = Json::array();
      for (const auto& comp : chosen->genotype) {
        Json cj = Json::array();
        for (const auto& term : comp) cj.push_back(Json::array({term.coeff, term.exponents}));
        genotype.push_back(std::move(cj));
      }
      j["genotype"] = std::move(genotype);
      j["rank"] = model.rank;
      j["scodim"] = model.scodim;
      j["tcodim"] = model.tcodim;
      j["source_weights"] = model.source_weights;
      j["target_weights"] = model.target_weights;
      j["unfolding_weights"] = model.unfolding_weights;
      *json_out = dup_string(json_dump(j));
    }
  });
}

int ssmthom_kpolys(int max_degree, char** json_out) {
  return guarded([&] {
    require(json_out != nullptr, "json_out must not be NULL");
    const KPolynomialSet kset = k_polynomials(fixtures::master_l1_verified(), max_degree);
    *json_out = dup_string(json_dump(kset.to_json()));
  });
}

int ssmthom_image_milnor(int m, const long* weights, const long* degrees, char** value,
                         int* valid) {
  return guarded([&] {
    require(weights && degrees && value && valid, "arguments must not be NULL");
    WeightData data;
    data.m = m;
    data.weights.assign(weights, weights + (m > 0 ? m : 0));
    data.degrees.assign(degrees, degrees + (m > 0 ? m + 1 : 0));
    data.validate();
    const KPolynomialSet kset = k_polynomials(fixtures::master_l1_verified(), m + 1);
    const MilnorResult result = image_milnor(data, kset);
    *value = dup_string(rational_str(result.mu));
    *valid = result.verdict == MilnorVerdict::Valid ? 1 : 0;
  });
}

int ssmthom_fixtures_selftest(int* pass, char** report) {
  return guarded([&] {
    require(pass != nullptr, "pass must not be NULL");
    const SelfTestResult result = fixtures_selftest();
    *pass = result.pass ? 1 : 0;
    if (report) {
      std::string out;
      for (const auto& c : result.checks)
        out += std::string(c.pass ? "PASS " : "FAIL ") + c.name + "\n";
      *report = dup_string(out);
    }
  });
}

}  // extern "C"
