#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "simplexpoly/simplexpoly.h"

#include <string>

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  sp_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("poly construction and printing") {
  sp_poly* p = nullptr;
  REQUIRE(sp_poly_new("simplex", "1,0,0", "0,0,0,0,0,0", &p) == SP_OK);
  char* text = nullptr;
  REQUIRE(sp_poly_to_string(p, &text) == SP_OK);
  CHECK(take(text) == "4 * x^1 - 1");
  double v = 0;
  REQUIRE(sp_poly_eval(p, 0.5, 0.1, 0.1, &v) == SP_OK);
  CHECK(v == doctest::Approx(1.0));
  REQUIRE(sp_poly_eval_exact(p, "1/3,0,0", &text) == SP_OK);
  CHECK(take(text) == "1/3");

  sp_poly* q = nullptr;
  REQUIRE(sp_poly_new("jacobi", "1", "0,0", &q) == SP_OK);
  int eq = -1;
  REQUIRE(sp_poly_equal(p, q, &eq) == SP_OK);
  CHECK(eq == 0);
  sp_poly_free(q);
  REQUIRE(sp_poly_new("triangle", "1,0", "0,0,0,0", &q) == SP_OK);
  REQUIRE(sp_poly_to_string(q, &text) == SP_OK);
  CHECK(take(text) == "3 * x^1 - 1");
  sp_poly_free(q);
  sp_poly_free(p);
}

TEST_CASE("argument errors") {
  sp_poly* p = nullptr;
  CHECK(sp_poly_new("sphere", "1", "0,0", &p) == SP_ERR_INVALID_ARGUMENT);
  CHECK(std::string(sp_last_error()).find("family") != std::string::npos);
  CHECK(sp_poly_new("simplex", "1,0", "0,0,0,0,0,0", &p) == SP_ERR_INVALID_ARGUMENT);
  CHECK(sp_poly_new("simplex", "1,0,0", "0,0,x,0,0,0", &p) == SP_ERR_INVALID_ARGUMENT);
  CHECK(sp_poly_new("simplex", "-1,0,0", "0,0,0,0,0,0", &p) == SP_ERR_INVALID_ARGUMENT);
  CHECK(sp_poly_new("triangle", "1,2", "0,0,0,0", &p) == SP_ERR_INVALID_ARGUMENT);
  CHECK(sp_poly_new(nullptr, "1", "0,0", &p) == SP_ERR_INVALID_ARGUMENT);
  CHECK(p == nullptr);
  CHECK(std::string(sp_status_name(SP_ERR_CONFIG)) == "config_error");
}

TEST_CASE("config and sweep") {
  sp_config* c = nullptr;
  CHECK(sp_config_parse("{", &c) == SP_ERR_CONFIG);
  CHECK(sp_config_load("/nonexistent.json", &c) == SP_ERR_CONFIG);
  REQUIRE(sp_config_parse(R"({"suites": {"three-term": {"max_n": 2, "params": [[0,0,0,0,0,0]]}}})", &c) == SP_OK);
  CHECK(sp_config_has_suite(c, "three-term") == 1);
  CHECK(sp_config_has_suite(c, "pde") == 0);
  sp_sweep* s = nullptr;
  CHECK(sp_sweep_run(c, "pde", 1, &s) == SP_ERR_CONFIG);
  REQUIRE(sp_sweep_run(c, "three-term", 1, &s) == SP_OK);
  CHECK(sp_sweep_failures(s) == 0);
  CHECK(sp_sweep_erratum_candidates(s) == 0);
  CHECK(sp_sweep_exit_code(s) == 0);
  CHECK(sp_sweep_seconds(s) >= 0);
  char* json = nullptr;
  REQUIRE(sp_sweep_json(s, 1, &json) == SP_OK);
  const std::string text = take(json);
  CHECK(text.find("\"x-recurrence\"") != std::string::npos);
  CHECK(text.find("\"pass\": 10") != std::string::npos);
  sp_sweep_free(s);
  sp_config_free(c);
}

TEST_CASE("gram matrices") {
  sp_matrix* m = nullptr;
  REQUIRE(sp_gram_simplex(1, "0,0,0,0,0,0", 1, &m) == SP_OK);
  REQUIRE(sp_matrix_size(m) == 4);
  CHECK(sp_matrix_at(m, 0, 0) == doctest::Approx(1.0 / 6).epsilon(1e-14));
  CHECK(sp_matrix_at(m, 1, 1) == doctest::Approx(1.0 / 10).epsilon(1e-14));
  CHECK(sp_matrix_at(m, 9, 9) == 0.0);
  double off = 1, diag = 1;
  int ok = 0;
  REQUIRE(sp_matrix_check(m, 1e-10, &off, &diag, &ok) == SP_OK);
  CHECK(ok == 1);
  CHECK(off < 1e-10);
  sp_matrix_free(m);
  REQUIRE(sp_gram_simplex(0, "0,0,0,0,0,0", 1, &m) == SP_OK);
  char* csv = nullptr;
  REQUIRE(sp_matrix_csv(m, &csv) == SP_OK);
  CHECK(take(csv) == "0.166666666667\n");
  sp_matrix_free(m);
  REQUIRE(sp_gram_triangle(2, "1/3,0,1,-1/2", 1, &m) == SP_OK);
  CHECK(sp_matrix_size(m) == 6);
  REQUIRE(sp_matrix_check(m, 1e-10, nullptr, nullptr, &ok) == SP_OK);
  CHECK(ok == 1);
  sp_matrix_free(m);
  CHECK(sp_gram_simplex(-1, "0,0,0,0,0,0", 1, &m) == SP_ERR_INVALID_ARGUMENT);
  CHECK(sp_gram_simplex(1, "0,0,0", 1, &m) == SP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("rule dump and connections") {
  char* out = nullptr;
  REQUIRE(sp_tetra_rule_json("0,0,0,0,0,0", 0, &out) == SP_OK);
  CHECK(take(out).find("\"weights\"") != std::string::npos);
  REQUIRE(sp_connect("2,1,0", "0,0,0,0,0,0", "0", &out) == SP_OK);
  std::string text = take(out);
  CHECK(text.find("\"reassembles\": true") != std::string::npos);
  REQUIRE(sp_connect("1,1,1", "1/3,0,1,2,0,0", "1,-1/2,2,1/3", &out) == SP_OK);
  text = take(out);
  CHECK(text.find("\"reassembles\": true") != std::string::npos);
  CHECK(sp_connect("1,1,1", "0,0,0,0,0,0", "1,2", &out) == SP_ERR_INVALID_ARGUMENT);
}
