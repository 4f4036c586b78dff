#include "simplexpoly/simplexpoly.h"

#include <cstdlib>
#include <cstring>
#include <json.hpp>
#include <memory>
#include <string>

#include "simplexpoly/errors.hpp"
#include "simplexpoly/jacobi1d.hpp"
#include "simplexpoly/quadrature.hpp"
#include "simplexpoly/simplex3d.hpp"
#include "simplexpoly/sweep.hpp"
#include "simplexpoly/triangle2d.hpp"

using namespace simplexpoly;

struct sp_poly {
  MPoly poly;
};

struct sp_config {
  SweepConfig config;
};

struct sp_sweep {
  SweepResult result;
};

struct sp_matrix {
  Matrix g;
  int n = 0;
  bool simplex = true;
  SimplexParams sp;
  TriangleParams tp;
};

namespace {

thread_local std::string last_error;

sp_status fail(sp_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs f, mapping exceptions to status codes.
template <class F>
sp_status guarded(F f) {
  try {
    f();
    last_error.clear();
    return SP_OK;
  } catch (const PoleHit& e) {
    return fail(SP_ERR_POLE, e.what());
  } catch (const NonzeroRemainder& e) {
    return fail(SP_ERR_NONZERO_REMAINDER, e.what());
  } catch (const ConvergenceFailure& e) {
    return fail(SP_ERR_CONVERGENCE, e.what());
  } catch (const ConfigError& e) {
    return fail(SP_ERR_CONFIG, e.what());
  } catch (const InvalidArgument& e) {
    return fail(SP_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(SP_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(SP_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SP_ERR_INTERNAL, "unknown error");
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw InvalidArgument(std::string(what) + " is null");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<Rational> values(const char* text, std::size_t count, const char* what) {
  require(text, what);
  std::vector<Rational> v = parse_rational_list(text);
  if (v.size() != count)
    throw InvalidArgument(std::string(what) + ": expected " + std::to_string(count) + " values, got " +
                          std::to_string(v.size()));
  return v;
}

std::vector<std::int64_t> integers(const char* text, std::size_t count, const char* what) {
  std::vector<std::int64_t> out;
  for (const Rational& r : values(text, count, what)) {
    if (r.get_den() != 1 || r < 0) throw InvalidArgument(std::string(what) + ": entries must be non-negative integers");
    out.push_back(r.get_num().get_si());
  }
  return out;
}

SimplexParams simplex_params(const char* text) {
  const std::vector<Rational> v = values(text, 6, "params");
  return {v[0], v[1], v[2], v[3], v[4], v[5]};
}

TriangleParams triangle_params(const char* text) {
  const std::vector<Rational> v = values(text, 4, "params");
  return {v[0], v[1], v[2], v[3]};
}

}  // namespace

extern "C" {

const char* sp_last_error(void) { return last_error.c_str(); }

const char* sp_status_name(sp_status status) {
  switch (status) {
    case SP_OK: return "ok";
    case SP_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case SP_ERR_POLE: return "pole_hit";
    case SP_ERR_NONZERO_REMAINDER: return "nonzero_remainder";
    case SP_ERR_CONVERGENCE: return "convergence_failure";
    case SP_ERR_CONFIG: return "config_error";
    case SP_ERR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

const char* sp_version(void) { return "1.0.0"; }

void sp_string_free(char* s) { std::free(s); }

sp_status sp_poly_new(const char* family, const char* index, const char* params, sp_poly** out) {
  return guarded([&] {
    require(family, "family");
    require(out, "out");
    const std::string f = family;
    MPoly p;
    if (f == "jacobi") {
      const auto n = integers(index, 1, "index");
      const auto v = values(params, 2, "params");
      p = shifted_jacobi(n[0], {v[0], v[1]});
    } else if (f == "triangle") {
      const auto i = integers(index, 2, "index");
      if (i[1] > i[0]) throw InvalidArgument("index: k must not exceed n");
      p = triangle_poly({i[0], i[1]}, triangle_params(params));
    } else if (f == "simplex") {
      const auto i = integers(index, 3, "index");
      p = simplex_poly({i[0], i[1], i[2]}, simplex_params(params));
    } else {
      throw InvalidArgument("family must be jacobi, triangle or simplex");
    }
    *out = new sp_poly{std::move(p)};
  });
}

sp_status sp_poly_to_string(const sp_poly* poly, char** out) {
  return guarded([&] {
    require(poly, "poly");
    require(out, "out");
    *out = copy_string(poly->poly.to_string());
  });
}

sp_status sp_poly_eval(const sp_poly* poly, double x, double y, double z, double* out) {
  return guarded([&] {
    require(poly, "poly");
    require(out, "out");
    *out = poly->poly.eval(x, y, z);
  });
}

sp_status sp_poly_eval_exact(const sp_poly* poly, const char* point, char** out) {
  return guarded([&] {
    require(poly, "poly");
    require(out, "out");
    const auto v = values(point, 3, "point");
    *out = copy_string(to_string(poly->poly.eval(Point{v[0], v[1], v[2]})));
  });
}

sp_status sp_poly_equal(const sp_poly* lhs, const sp_poly* rhs, int* out) {
  return guarded([&] {
    require(lhs, "lhs");
    require(rhs, "rhs");
    require(out, "out");
    *out = lhs->poly == rhs->poly ? 1 : 0;
  });
}

void sp_poly_free(sp_poly* poly) { delete poly; }

sp_status sp_config_load(const char* path, sp_config** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new sp_config{load_sweep_config(path)};
  });
}

sp_status sp_config_parse(const char* json_text, sp_config** out) {
  return guarded([&] {
    require(json_text, "json_text");
    require(out, "out");
    *out = new sp_config{parse_sweep_config(json_text)};
  });
}

int sp_config_has_suite(const sp_config* config, const char* suite) {
  return config && suite && config->config.suites.count(suite) ? 1 : 0;
}

void sp_config_free(sp_config* config) { delete config; }

sp_status sp_sweep_run(const sp_config* config, const char* suite, unsigned threads, sp_sweep** out) {
  return guarded([&] {
    require(config, "config");
    require(suite, "suite");
    require(out, "out");
    const unsigned t = resolve_threads(threads ? threads : config->config.threads);
    *out = new sp_sweep{run_suite(suite, config->config, t)};
  });
}

sp_status sp_sweep_json(const sp_sweep* sweep, int all_reports, char** out) {
  return guarded([&] {
    require(sweep, "sweep");
    require(out, "out");
    *out = copy_string(sweep_json(sweep->result, all_reports != 0));
  });
}

size_t sp_sweep_failures(const sp_sweep* sweep) { return sweep ? sweep->result.failures() : 0; }

size_t sp_sweep_erratum_candidates(const sp_sweep* sweep) { return sweep ? sweep->result.erratum_candidates() : 0; }

int sp_sweep_exit_code(const sp_sweep* sweep) { return sweep ? sweep->result.exit_code() : 1; }

double sp_sweep_seconds(const sp_sweep* sweep) { return sweep ? sweep->result.seconds : 0.0; }

void sp_sweep_free(sp_sweep* sweep) { delete sweep; }

sp_status sp_gram_simplex(int n, const char* params, unsigned threads, sp_matrix** out) {
  return guarded([&] {
    require(out, "out");
    if (n < 0) throw InvalidArgument("N must be non-negative");
    auto m = std::make_unique<sp_matrix>();
    m->n = n;
    m->simplex = true;
    m->sp = simplex_params(params);
    m->g = gram_matrix(n, m->sp, resolve_threads(threads));
    *out = m.release();
  });
}

sp_status sp_gram_triangle(int n, const char* params, unsigned threads, sp_matrix** out) {
  return guarded([&] {
    require(out, "out");
    if (n < 0) throw InvalidArgument("N must be non-negative");
    auto m = std::make_unique<sp_matrix>();
    m->n = n;
    m->simplex = false;
    m->tp = triangle_params(params);
    m->g = triangle_gram_matrix(n, m->tp, resolve_threads(threads));
    *out = m.release();
  });
}

size_t sp_matrix_size(const sp_matrix* m) { return m ? m->g.size() : 0; }

double sp_matrix_at(const sp_matrix* m, size_t i, size_t j) {
  if (!m || i >= m->g.size() || j >= m->g.size()) return 0.0;
  return m->g[i][j];
}

sp_status sp_matrix_csv(const sp_matrix* m, char** out) {
  return guarded([&] {
    require(m, "matrix");
    require(out, "out");
    *out = copy_string(gram_csv(m->g));
  });
}

sp_status sp_matrix_check(const sp_matrix* m, double tol, double* max_offdiag, double* max_diag_error, int* ok) {
  return guarded([&] {
    require(m, "matrix");
    const GramCheck c = m->simplex ? check_gram(m->n, m->sp, m->g, tol) : check_triangle_gram(m->n, m->tp, m->g, tol);
    if (max_offdiag) *max_offdiag = c.max_offdiag;
    if (max_diag_error) *max_diag_error = c.max_diag_error;
    if (ok) *ok = c.ok ? 1 : 0;
  });
}

void sp_matrix_free(sp_matrix* m) { delete m; }

sp_status sp_tetra_rule_json(const char* params, int order, char** out) {
  return guarded([&] {
    require(out, "out");
    if (order < 0) throw InvalidArgument("order must be non-negative");
    *out = copy_string(rule_json(tetra_rule(simplex_params(params), order)));
  });
}

sp_status sp_connect(const char* index, const char* params, const char* target, char** out) {
  return guarded([&] {
    require(out, "out");
    require(target, "target");
    const auto i = integers(index, 3, "index");
    const Index3 idx{i[0], i[1], i[2]};
    const SimplexParams p = simplex_params(params);
    const std::vector<Rational> t = parse_rational_list(target);
    ConnectionExpansion ex;
    if (t.size() == 1) {
      ex = connect_alpha(idx, p, t[0]);
    } else if (t.size() == 4) {
      ex = connect_general(idx, p, {t[0], t[1], t[2], t[3]});
    } else {
      throw InvalidArgument("target: expected 1 or 4 values");
    }
    const auto strings = [](const SimplexParams& q) {
      return nlohmann::json::array(
          {to_string(q.alpha), to_string(q.beta), to_string(q.gamma), to_string(q.delta), to_string(q.a), to_string(q.b)});
    };
    nlohmann::json terms = nlohmann::json::array();
    for (const ConnectionTerm& term : ex.terms) {
      if (term.coeff == 0) continue;
      terms.push_back({{"index", {term.index.n1, term.index.n2, term.index.n3}},
                       {"coeff", to_string(term.coeff)},
                       {"s1_power", term.s1_power},
                       {"s2_power", term.s2_power}});
    }
    const nlohmann::json j{{"source", {idx.n1, idx.n2, idx.n3}},
                           {"source_params", strings(ex.source_params)},
                           {"target_params", strings(ex.target_params)},
                           {"terms", terms},
                           {"reassembles", ex.reassemble() == simplex_poly(idx, p)}};
    *out = copy_string(j.dump(2) + "\n");
  });
}

}  // extern "C"
