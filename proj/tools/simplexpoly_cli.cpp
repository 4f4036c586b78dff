#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "simplexpoly/simplexpoly.h"

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 64;
constexpr int kConfig = 65;

// Owns a string returned by the library.
struct Owned {
  char* s = nullptr;
  ~Owned() { sp_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

int report_error(sp_status status) {
  std::cerr << "error: " << sp_status_name(status) << ": " << sp_last_error() << "\n";
  if (status == SP_ERR_INVALID_ARGUMENT) return kUsage;
  if (status == SP_ERR_CONFIG) return kConfig;
  return kFailure;
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

int print_poly(const std::string& family, const std::string& index, const std::string& params) {
  sp_poly* poly = nullptr;
  if (sp_status s = sp_poly_new(family.c_str(), index.c_str(), params.c_str(), &poly); s != SP_OK) return report_error(s);
  Owned text;
  const sp_status s = sp_poly_to_string(poly, &text.s);
  sp_poly_free(poly);
  if (s != SP_OK) return report_error(s);
  std::cout << text.str() << "\n";
  return kOk;
}

int run_one(sp_config* config, const std::string& suite, unsigned threads, bool all_reports, std::string& json) {
  sp_sweep* sweep = nullptr;
  if (sp_status s = sp_sweep_run(config, suite.c_str(), threads, &sweep); s != SP_OK) return -report_error(s);
  Owned text;
  const sp_status s = sp_sweep_json(sweep, all_reports ? 1 : 0, &text.s);
  const int code = sp_sweep_exit_code(sweep);
  std::fprintf(stderr, "%s: %zu failures, %zu erratum candidates, %.2f s\n", suite.c_str(), sp_sweep_failures(sweep),
               sp_sweep_erratum_candidates(sweep), sp_sweep_seconds(sweep));
  sp_sweep_free(sweep);
  if (s != SP_OK) return -report_error(s);
  json = text.str();
  return code;
}

int verify(const std::string& suite, const std::string& config_path, const std::string& out_path, bool all_reports,
           unsigned threads, const std::vector<std::string>& suites) {
  sp_config* config = nullptr;
  if (sp_status s = sp_config_load(config_path.c_str(), &config); s != SP_OK) return report_error(s);
  std::vector<std::string> run = suite == "all" ? suites : std::vector<std::string>{suite};
  int worst = kOk;
  std::string combined;
  for (const std::string& name : run) {
    if (suite == "all" && !sp_config_has_suite(config, name.c_str())) continue;
    std::string json;
    const int code = run_one(config, name, threads, all_reports, json);
    if (code < 0) {
      sp_config_free(config);
      return -code;
    }
    if (code == 2 || (code == 1 && worst == kOk)) worst = code;
    if (suite == "all") combined += combined.empty() ? "[\n" : ",\n";
    combined += json;
  }
  sp_config_free(config);
  if (suite == "all") combined += combined.empty() ? "[]\n" : "]\n";
  std::cout << combined;
  if (!out_path.empty() && !write_file(out_path, combined)) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return kFailure;
  }
  return worst;
}

int gram(int n, const std::string& family, const std::string& params, const std::string& out_path, bool check,
         unsigned threads) {
  sp_matrix* m = nullptr;
  const sp_status s = family == "triangle" ? sp_gram_triangle(n, params.c_str(), threads, &m)
                                           : sp_gram_simplex(n, params.c_str(), threads, &m);
  if (s != SP_OK) return report_error(s);
  Owned csv;
  if (sp_status c = sp_matrix_csv(m, &csv.s); c != SP_OK) {
    sp_matrix_free(m);
    return report_error(c);
  }
  int code = kOk;
  if (check) {
    double off = 0, diag = 0;
    int ok = 0;
    sp_matrix_check(m, 1e-10, &off, &diag, &ok);
    std::fprintf(stderr, "max normalized off-diagonal %.12g, max diagonal relative error %.12g: %s\n", off, diag,
                 ok ? "pass" : "fail");
    if (!ok) code = kFailure;
  }
  sp_matrix_free(m);
  if (out_path.empty()) {
    std::cout << csv.str();
  } else if (!write_file(out_path, csv.str())) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return kFailure;
  }
  return code;
}

int connect(const std::string& index, const std::string& params, const std::string& target) {
  Owned json;
  if (sp_status s = sp_connect(index.c_str(), params.c_str(), target.c_str(), &json.s); s != SP_OK)
    return report_error(s);
  std::cout << json.str();
  return json.str().find("\"reassembles\": true") != std::string::npos ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orthogonal polynomials on the simplex: construction and verification"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "worker threads (SIMPLEXPOLY_THREADS overrides)");

  std::string family, index, params;
  auto* pp = app.add_subcommand("print-poly", "print a family member");
  pp->add_option("--family", family)->required()->check(CLI::IsMember({"jacobi", "triangle", "simplex"}));
  pp->add_option("--index", index, "comma separated indices")->required();
  pp->add_option("--params", params, "comma separated rationals p or p/q")->required();

  const std::vector<std::string> suites = {"ladder1d", "m2d",        "theorem1", "second-order", "pde",
                                           "corollaries", "connections", "three-term", "monic", "gram"};
  std::vector<std::string> choices = suites;
  choices.push_back("all");
  std::string suite, config_path, out_path;
  bool all_reports = false;
  auto* vf = app.add_subcommand("verify", "run a verification sweep");
  vf->add_option("--suite", suite)->required()->check(CLI::IsMember(choices));
  vf->add_option("--config", config_path, "sweep config JSON")->required();
  vf->add_option("--out", out_path, "also write the report here");
  vf->add_flag("--all-reports", all_reports, "include passing checks in the report");

  int gram_n = 0;
  std::string gram_family = "simplex", gram_params, gram_out;
  bool gram_check = false;
  auto* gr = app.add_subcommand("gram", "Gram matrix of the basis up to total degree N");
  gr->add_option("--N", gram_n)->required()->check(CLI::NonNegativeNumber);
  gr->add_option("--params", gram_params)->required();
  gr->add_option("--family", gram_family)->check(CLI::IsMember({"simplex", "triangle"}));
  gr->add_option("--out", gram_out, "CSV output path");
  gr->add_flag("--check", gram_check, "compare against the closed-form norms");

  std::string c_index, c_params, c_target;
  auto* cn = app.add_subcommand("connect", "connection expansion to another parameter set");
  cn->add_option("--index", c_index)->required();
  cn->add_option("--params", c_params)->required();
  cn->add_option("--target", c_target, "xi, or phi,theta,eta,xi")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (pp->parsed()) return print_poly(family, index, params);
    if (vf->parsed()) return verify(suite, config_path, out_path, all_reports, threads, suites);
    if (gr->parsed()) return gram(gram_n, gram_family, gram_params, gram_out, gram_check, threads);
    if (cn->parsed()) return connect(c_index, c_params, c_target);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
