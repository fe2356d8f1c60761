// Command-line surface over the ssmthom C API.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 computation or input error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ssmthom/ssmthom.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCompute = 3;

struct StringOut {
  char* value = nullptr;
  ~StringOut() { ssmthom_string_free(value); }
  std::string str() const { return value ? value : ""; }
};

using SeriesPtr = std::unique_ptr<ssmthom_series, decltype(&ssmthom_series_free)>;
using TablePtr = std::unique_ptr<ssmthom_table, decltype(&ssmthom_table_free)>;

SeriesPtr series_ptr(ssmthom_series* s = nullptr) { return {s, &ssmthom_series_free}; }
TablePtr table_ptr(ssmthom_table* t = nullptr) { return {t, &ssmthom_table_free}; }

[[noreturn]] void die(int status) {
  std::cerr << "error: " << ssmthom_last_error() << "\n";
  std::exit(status == SSMTHOM_ERR_INVALID ? kExitUsage : kExitCompute);
}

void check(int status) {
  if (status != SSMTHOM_OK) die(status);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot write '" << path << "'\n";
    std::exit(kExitCompute);
  }
  out << content;
}

void emit_series(ssmthom_series* s, const std::string& out_path, const std::string& format,
                 bool compress) {
  if (format == "json") {
    StringOut json;
    check(ssmthom_series_to_json(s, &json.value));
    std::cout << json.str();
  } else {
    StringOut text;
    check(ssmthom_series_render(s, compress ? 1 : 0, &text.value));
    std::cout << text.str() << "\n";
  }
  if (!out_path.empty()) {
    StringOut json;
    check(ssmthom_series_to_json(s, &json.value));
    write_file(out_path, json.str());
  }
}

std::vector<long> parse_csv_longs(const std::string& text) {
  std::vector<long> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(std::stol(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::stol(cur));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ssmthom: SSM-Thom polynomials of multisingularities, interpolation solver, "
               "and image Milnor numbers of quasihomogeneous germs"};
  app.require_subcommand(1);
  std::string fixture_dir;
  app.add_option("--fixtures", fixture_dir, "fixture directory override");

  // master
  auto* master = app.add_subcommand("master", "solve the master series S_0 for a given l");
  int m_l = 1, m_degree = 6;
  std::string m_out, m_format = "tpp", m_report;
  bool m_compress = false;
  master->add_option("--l", m_l, "relative dimension")->required();
  master->add_option("--degree", m_degree, "cohomological degree bound")->required();
  master->add_option("--out", m_out, "write canonical series JSON to a file");
  master->add_option("--format", m_format, "stdout format: tpp or json")
      ->check(CLI::IsMember({"tpp", "json"}));
  master->add_flag("--compress", m_compress, "compress partition exponents (s_{31^2})");
  master->add_option("--report", m_report, "write the solver report JSON to a file");

  // tower
  auto* tower = app.add_subcommand("tower", "solve the A0-tower S_{A0^j} rows");
  int t_l = 1, t_degree = 6, t_height = 6;
  std::string t_out, t_format = "tpp", t_report;
  bool t_compress = false;
  tower->add_option("--l", t_l, "relative dimension")->required();
  tower->add_option("--degree", t_degree, "cohomological degree bound")->required();
  tower->add_option("--height", t_height, "largest A0 power")->required();
  tower->add_option("--out", t_out, "write the S-table JSON to a file");
  tower->add_option("--format", t_format, "stdout format: tpp or json")
      ->check(CLI::IsMember({"tpp", "json"}));
  tower->add_flag("--compress", t_compress, "compress partition exponents");
  tower->add_option("--report", t_report, "write the solver report JSON to a file");

  // thom
  auto* thom = app.add_subcommand(
      "thom", "assemble a Thom polynomial from an S-table (source for psi with a "
              "distinguished prefix, target otherwise)");
  std::string th_psi, th_table, th_rtable, th_out, th_format = "tpp";
  int th_degree = 0;
  bool th_compress = false;
  thom->add_option("--psi", th_psi, "multisingularity, e.g. A0^2*A1 or A1:A0*A1")->required();
  thom->add_option("--table", th_table, "S-table JSON file")->required();
  thom->add_option("--rtable", th_rtable, "optional R-table JSON file (else derived)");
  thom->add_option("--degree", th_degree, "degree bound (default: table truncation)");
  thom->add_option("--out", th_out, "write canonical series JSON to a file");
  thom->add_option("--format", th_format, "stdout format: tpp or json")
      ->check(CLI::IsMember({"tpp", "json"}));
  thom->add_flag("--compress", th_compress, "compress partition exponents");

  // milnor
  auto* milnor = app.add_subcommand("milnor", "image Milnor number of a quasihomogeneous germ");
  std::string mi_weights, mi_degrees;
  milnor->add_option("--weights", mi_weights, "source weights, comma separated")->required();
  milnor->add_option("--degrees", mi_degrees, "target degrees, comma separated")->required();

  // kpoly
  auto* kpoly = app.add_subcommand("kpoly", "K polynomials of the bundled l=1 master series");
  int kp_degree = 15;
  std::string kp_out;
  kpoly->add_option("--max-degree", kp_degree, "largest K index (<= 15)")->required();
  kpoly->add_option("--out", kp_out, "write the K-polynomial set JSON to a file");

  // prototype
  auto* prototype = app.add_subcommand("prototype", "torus-weighted prototype of a bundled "
                                                    "monosingularity");
  std::string pr_name, pr_presentation;
  int pr_l = 1;
  bool pr_json = false;
  prototype->add_option("--name", pr_name, "algebra token, e.g. I22")->required();
  prototype->add_option("--l", pr_l, "relative dimension")->required();
  prototype->add_option("--presentation", pr_presentation, "genotype presentation name");
  prototype->add_flag("--json", pr_json, "emit the catalog-shaped JSON dump");

  // verify
  auto* verify = app.add_subcommand("verify", "interpolation verification of an S-table");
  std::string v_table, v_report;
  int v_degree = 6;
  bool v_quiet = false;
  verify->add_option("--table", v_table, "S-table JSON file")->required();
  verify->add_option("--degree", v_degree, "degree bound")->required();
  verify->add_option("--report", v_report, "write the check matrix JSON to a file");
  verify->add_flag("--quiet", v_quiet, "only print the summary line");

  // fixtures
  auto* fixtures = app.add_subcommand("fixtures", "bundled data files");
  bool f_selftest = false;
  fixtures->add_flag("--selftest", f_selftest, "re-derive the bundled tables and compare");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  if (!fixture_dir.empty()) check(ssmthom_set_fixture_dir(fixture_dir.c_str()));

  if (master->parsed()) {
    StringOut report;
    auto s = series_ptr();
    ssmthom_series* raw = nullptr;
    check(ssmthom_solve_master(m_l, m_degree, &raw, m_report.empty() ? nullptr : &report.value));
    s = series_ptr(raw);
    if (!m_report.empty()) write_file(m_report, report.str());
    emit_series(s.get(), m_out, m_format, m_compress);
    return kExitOk;
  }

  if (tower->parsed()) {
    StringOut report;
    ssmthom_table* raw = nullptr;
    check(ssmthom_solve_tower(t_l, t_degree, t_height, &raw,
                              t_report.empty() ? nullptr : &report.value));
    auto table = table_ptr(raw);
    if (!t_report.empty()) write_file(t_report, report.str());
    if (t_format == "json") {
      StringOut json;
      check(ssmthom_table_to_json(table.get(), &json.value));
      std::cout << json.str();
    } else {
      StringOut keys;
      check(ssmthom_table_keys(table.get(), &keys.value));
      std::string key;
      for (char c : keys.str()) {
        if (c != '\n') {
          key += c;
          continue;
        }
        ssmthom_series* entry = nullptr;
        check(ssmthom_table_entry(table.get(), key.c_str(), &entry));
        auto holder = series_ptr(entry);
        StringOut text;
        check(ssmthom_series_render(holder.get(), t_compress ? 1 : 0, &text.value));
        std::cout << (key == "1" ? "S_{}" : "S_{" + key + "}") << " = " << text.str() << "\n";
        key.clear();
      }
    }
    if (!t_out.empty()) {
      StringOut json;
      check(ssmthom_table_to_json(table.get(), &json.value));
      write_file(t_out, json.str());
    }
    return kExitOk;
  }

  if (thom->parsed()) {
    ssmthom_table* raw = nullptr;
    check(ssmthom_table_load(th_table.c_str(), &raw));
    auto table = table_ptr(raw);
    const bool source = th_psi.find(':') != std::string::npos;
    int degree = th_degree;
    if (degree <= 0) {
      int l = 1;
      check(ssmthom_table_info(table.get(), &l, &degree, nullptr));
      if (source) degree -= l;  // derived R rows cover one degree less
    }
    ssmthom_series* out = nullptr;
    if (source) {
      auto rtable = table_ptr();
      if (!th_rtable.empty()) {
        ssmthom_table* rraw = nullptr;
        check(ssmthom_table_load(th_rtable.c_str(), &rraw));
        rtable = table_ptr(rraw);
      }
      check(ssmthom_assemble_source(rtable.get(), table.get(), th_psi.c_str(), degree, &out));
    } else {
      check(ssmthom_assemble_target(table.get(), th_psi.c_str(), degree, &out));
    }
    auto holder = series_ptr(out);
    emit_series(holder.get(), th_out, th_format, th_compress);
    return kExitOk;
  }

  if (milnor->parsed()) {
    std::vector<long> weights, degrees;
    try {
      weights = parse_csv_longs(mi_weights);
      degrees = parse_csv_longs(mi_degrees);
    } catch (const std::exception&) {
      std::cerr << "error: --weights and --degrees must be comma-separated integers\n";
      return kExitUsage;
    }
    if (degrees.size() != weights.size() + 1) {
      std::cerr << "error: need one more degree than weights (germ C^m -> C^{m+1})\n";
      return kExitUsage;
    }
    StringOut value;
    int valid = 0;
    check(ssmthom_image_milnor(static_cast<int>(weights.size()), weights.data(), degrees.data(),
                               &value.value, &valid));
    std::cout << value.str() << (valid ? " (valid)" : " (rejected)") << "\n";
    return kExitOk;
  }

  if (kpoly->parsed()) {
    StringOut json;
    check(ssmthom_kpolys(kp_degree, &json.value));
    if (kp_out.empty())
      std::cout << json.str();
    else
      write_file(kp_out, json.str());
    return kExitOk;
  }

  if (prototype->parsed()) {
    StringOut text, json;
    check(ssmthom_prototype_render(pr_name.c_str(), pr_l,
                                   pr_presentation.empty() ? nullptr : pr_presentation.c_str(),
                                   &text.value, pr_json ? &json.value : nullptr));
    std::cout << text.str();
    if (pr_json) std::cout << json.str();
    return kExitOk;
  }

  if (verify->parsed()) {
    ssmthom_table* raw = nullptr;
    check(ssmthom_table_load(v_table.c_str(), &raw));
    auto table = table_ptr(raw);
    StringOut report;
    int pass = 0;
    check(ssmthom_verify_table(table.get(), v_degree, &pass, &report.value));
    if (!v_report.empty()) write_file(v_report, report.str());
    if (!v_quiet) {
      const auto j = nlohmann::json::parse(report.str());
      for (const auto& c : j["checks"]) {
        std::cout << (c["pass"].get<bool>() ? "pass" : "FAIL") << "  "
                  << c["kind"].get<std::string>() << "  psi=" << c["psi"].get<std::string>();
        if (c.contains("zeta")) std::cout << "  zeta=" << c["zeta"].get<std::string>();
        std::cout << "  r=" << c["degree"].get<int>() << "\n";
      }
    }
    std::cout << (pass ? "VERIFY PASS" : "VERIFY FAIL") << "\n";
    return pass ? kExitOk : kExitVerifyFailed;
  }

  if (fixtures->parsed()) {
    if (f_selftest) {
      int pass = 0;
      StringOut report;
      check(ssmthom_fixtures_selftest(&pass, &report.value));
      std::cout << report.str();
      std::cout << (pass ? "SELFTEST PASS" : "SELFTEST FAIL") << "\n";
      return pass ? kExitOk : kExitVerifyFailed;
    }
    StringOut dir;
    check(ssmthom_fixture_dir(&dir.value));
    std::cout << "fixture directory: " << dir.str() << "\n";
    return kExitOk;
  }

  return kExitUsage;
}
