#include "simplexpoly/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <set>
#include <sstream>
#include <thread>

#include "simplexpoly/errors.hpp"
#include "simplexpoly/jacobi1d.hpp"
#include "simplexpoly/quadrature.hpp"
#include "simplexpoly/simplex3d.hpp"
#include "simplexpoly/triangle2d.hpp"

namespace simplexpoly {

namespace {

using json = nlohmann::json;

struct Task {
  std::size_t tuple;  // position in the suite's parameter list
  std::function<VerificationReport()> run;
};

class TaskList {
 public:
  explicit TaskList(const SuiteConfig& cfg) : cfg_(cfg) {}

  bool wanted(const std::string& relation) const {
    if (!cfg_.relations) return true;
    return std::find(cfg_.relations->begin(), cfg_.relations->end(), relation) != cfg_.relations->end();
  }

  template <class F>
  void add(const std::string& relation, std::size_t tuple, F f) {
    if (wanted(relation)) tasks_.push_back({tuple, std::function<VerificationReport()>(std::move(f))});
  }

  std::vector<Task>& tasks() { return tasks_; }

 private:
  const SuiteConfig& cfg_;
  std::vector<Task> tasks_;
};

std::size_t arity_of(const std::string& suite) {
  if (suite == "ladder1d") return 2;
  if (suite == "m2d" || suite == "corollaries") return 4;
  return 6;
}

SimplexParams simplex_params(const Tuple& t) { return {t[0], t[1], t[2], t[3], t[4], t[5]}; }
FourParams four_params(const Tuple& t) { return {t[0], t[1], t[2], t[3]}; }
TriangleParams triangle_params(const Tuple& t) { return {t[0], t[1], t[2], t[3]}; }

std::vector<Index3> indices3(int max_n) {
  std::vector<Index3> out;
  for (int n = 0; n <= max_n; ++n)
    for (int n1 = n; n1 >= 0; --n1)
      for (int n2 = n - n1; n2 >= 0; --n2) out.push_back({n1, n2, n - n1 - n2});
  return out;
}

std::vector<TriIndex> indices2(int max_n) {
  std::vector<TriIndex> out;
  for (int n = 0; n <= max_n; ++n)
    for (int k = 0; k <= n; ++k) out.push_back({n, k});
  return out;
}

std::string format12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void build_ladder1d(const SuiteConfig& cfg, TaskList& list) {
  for (std::size_t t = 0; t < cfg.params.size(); ++t) {
    const JacobiParams p{cfg.params[t][0], cfg.params[t][1]};
    for (std::int64_t n = 0; n <= cfg.max_n; ++n) {
      for (LadderOp op : kLadderOps) list.add(ladder_name(op), t, [=] { return verify_ladder(op, n, p); });
      for (const auto& id : second_order_identities_1d())
        list.add(id.name, t, [=, &id] { return verify_second_order_1d(id, n, p); });
    }
  }
}

void build_m2d(const SuiteConfig& cfg, TaskList& list) {
  for (std::size_t t = 0; t < cfg.params.size(); ++t) {
    const TriangleParams p = triangle_params(cfg.params[t]);
    for (const TriIndex& idx : indices2(cfg.max_n)) {
      for (int o = 0; o < kMOpCount; ++o) {
        const MOp op = static_cast<MOp>(o);
        list.add(m_op_name(op), t, [=] { return verify_m_relation(op, idx, p); });
      }
      for (const auto& id : second_order_identities_2d())
        list.add(id.name, t, [=, &id] { return verify_second_order_m(id, idx, p); });
      for (TrianglePde w : {TrianglePde::L1, TrianglePde::L2, TrianglePde::B1})
        list.add(triangle_pde_name(w), t, [=] { return verify_triangle_pde(w, idx, p); });
      list.add("d0-reduction", t, [=] { return verify_triangle_reduction_d0(idx, p.a, p.b, p.c); });
    }
  }
}

void build_theorem1(const SuiteConfig& cfg, TaskList& list) {
  for (std::size_t t = 0; t < cfg.params.size(); ++t) {
    const SimplexParams p = simplex_params(cfg.params[t]);
    const FourParams f = four_params(cfg.params[t]);
    for (const Index3& idx : indices3(cfg.max_n)) {
      for (int o = 0; o < kSOpCount; ++o) {
        const SOp op = static_cast<SOp>(o);
        list.add(s_op_name(op), t, [=] { return verify_theorem1(op, idx, p); });
      }
      list.add("ab0-reduction", t, [=] { return verify_reduction_ab0(idx, f); });
    }
  }
}

void build_second_order(const SuiteConfig& cfg, TaskList& list) {
  for (std::size_t t = 0; t < cfg.params.size(); ++t) {
    const SimplexParams p = simplex_params(cfg.params[t]);
    for (const Index3& idx : indices3(cfg.max_n))
      for (const auto& id : second_order_identities_3d())
        list.add(id.name, t, [=, &id] { return verify_second_order_3d(id, idx, p); });
  }
}

void build_pde(const SuiteConfig& cfg, TaskList& list) {
  for (std::size_t t = 0; t < cfg.params.size(); ++t) {
    const SimplexParams p = simplex_params(cfg.params[t]);
    const FourParams f = four_params(cfg.params[t]);
    for (const Index3& idx : indices3(cfg.max_n)) {
      for (SimplexPde w : {SimplexPde::T1, SimplexPde::T2, SimplexPde::T3, SimplexPde::T4})
        list.add(simplex_pde_name(w), t, [=] { return verify_simplex_pde(w, idx, p); });
      list.add("T1-ab0", t, [=] { return verify_t1_reduction_ab0(idx, f); });
    }
  }
}

void build_corollaries(const SuiteConfig& cfg, TaskList& list) {
  for (std::size_t t = 0; t < cfg.params.size(); ++t) {
    const FourParams f = four_params(cfg.params[t]);
    for (const Index3& idx : indices3(cfg.max_n)) {
      for (auto w : {DerivCorollary::XY, DerivCorollary::ZY, DerivCorollary::Z, DerivCorollary::ZXY})
        list.add(corollary_name(w), t, [=] { return verify_corollary_derivative(w, idx, f); });
      for (auto w : {WeightedCorollary::First, WeightedCorollary::Second, WeightedCorollary::Third,
                     WeightedCorollary::Fourth})
        list.add(corollary_name(w), t, [=] { return verify_corollary_weighted(w, idx, f); });
      for (auto w : {MultCorollary::X, MultCorollary::Y, MultCorollary::Z, MultCorollary::W})
        list.add(corollary_name(w), t, [=] { return verify_corollary_multiplication(w, idx, f); });
    }
  }
}

// A target equal to the source parameters leaves the source member with a unit
// coefficient and nothing else.
VerificationReport identity_collapse(const Index3& idx, const SimplexParams& p) {
  const Member at = simplex_member(idx, p);
  const char* name = "identity-collapse";
  try {
    for (const ConnectionExpansion& ex :
         {connect_alpha(idx, p, p.alpha), connect_general(idx, p, {p.alpha, p.beta, p.gamma, p.delta})}) {
      std::vector<const ConnectionTerm*> live;
      for (const ConnectionTerm& term : ex.terms)
        if (term.coeff != 0) live.push_back(&term);
      if (live.size() != 1) return failure("connections", name, at, std::to_string(live.size()) + " nonzero terms");
      const ConnectionTerm& only = *live.front();
      if (only.coeff != 1 || only.index.n1 != idx.n1 || only.index.n2 != idx.n2 || only.index.n3 != idx.n3 ||
          only.s1_power != 0 || only.s2_power != 0)
        return failure("connections", name, at, "surviving term is not the unit source term");
    }
  } catch (const PoleHit& e) {
    return not_applicable("connections", name, at, e.what());
  }
  VerificationReport r = make_report("connections", name, at, MPoly(), MPoly());
  r.detail = "single unit coefficient";
  return r;
}

void build_connections(const SuiteConfig& cfg, TaskList& list) {
  for (std::size_t t = 0; t < cfg.params.size(); ++t) {
    const SimplexParams p = simplex_params(cfg.params[t]);
    for (const Index3& idx : indices3(cfg.max_n)) {
      for (const Rational& xi : cfg.xi) list.add("connect-alpha", t, [=] { return verify_connect_alpha(idx, p, xi); });
      list.add("identity-collapse", t, [=] { return identity_collapse(idx, p); });
    }
    for (const Index3& idx : indices3(cfg.max_n_general))
      for (const Tuple& g : cfg.targets) {
        const ConnectionTarget target{g[0], g[1], g[2], g[3]};
        list.add("connect-general", t, [=] { return verify_connect_general(idx, p, target); });
      }
  }
}

void build_three_term(const SuiteConfig& cfg, TaskList& list) {
  for (std::size_t t = 0; t < cfg.params.size(); ++t) {
    const SimplexParams p = simplex_params(cfg.params[t]);
    for (const Index3& idx : indices3(cfg.max_n))
      list.add("x-recurrence", t, [=] { return verify_three_term(idx, p); });
  }
}

void build_monic(const SuiteConfig& cfg, TaskList& list) {
  for (std::size_t t = 0; t < cfg.params.size(); ++t) {
    const SimplexParams p = simplex_params(cfg.params[t]);
    for (const Index3& idx : indices3(cfg.max_n))
      list.add("monic-simplex", t, [=] { return verify_monic_simplex(idx, p); });
  }
  // Triangle tuples are numbered after the simplex ones.
  const std::size_t offset = cfg.params.size();
  for (std::size_t t = 0; t < cfg.triangle_params.size(); ++t) {
    const TriangleParams p = triangle_params(cfg.triangle_params[t]);
    for (const TriIndex& idx : indices2(cfg.max_n))
      list.add("monic-triangle", offset + t, [=] { return verify_monic_triangle(idx, p); });
  }
}

VerificationReport gram_report(const char* relation, const Member& at, const GramCheck& c) {
  VerificationReport r;
  r.suite = "gram";
  r.relation = relation;
  r.index = at.index;
  r.params = at.params;
  r.status = c.ok ? Status::Pass : Status::Fail;
  r.detail = "max normalized off-diagonal " + format12(c.max_offdiag) + ", max diagonal relative error " +
             format12(c.max_diag_error);
  return r;
}

void build_gram(const SuiteConfig& cfg, TaskList& list) {
  for (std::size_t t = 0; t < cfg.params.size(); ++t) {
    const SimplexParams p = simplex_params(cfg.params[t]);
    for (int N = 0; N <= cfg.max_n; ++N)
      list.add("gram-simplex", t, [=] {
        return gram_report("gram-simplex", Member{{N}, cfg.params[t]}, check_gram(N, p, gram_matrix(N, p)));
      });
  }
  const std::size_t offset = cfg.params.size();
  for (std::size_t t = 0; t < cfg.triangle_params.size(); ++t) {
    const TriangleParams p = triangle_params(cfg.triangle_params[t]);
    for (int N = 0; N <= cfg.max_n; ++N)
      list.add("gram-triangle", offset + t, [=] {
        return gram_report("gram-triangle", Member{{N}, cfg.triangle_params[t]},
                           check_triangle_gram(N, p, triangle_gram_matrix(N, p)));
      });
  }
}

using Builder = void (*)(const SuiteConfig&, TaskList&);

const std::map<std::string, Builder>& builders() {
  static const std::map<std::string, Builder> table = {
      {"ladder1d", build_ladder1d},       {"m2d", build_m2d},
      {"theorem1", build_theorem1},       {"second-order", build_second_order},
      {"pde", build_pde},                 {"corollaries", build_corollaries},
      {"connections", build_connections}, {"three-term", build_three_term},
      {"monic", build_monic},             {"gram", build_gram},
  };
  return table;
}

std::vector<VerificationReport> execute(std::vector<Task>& tasks, unsigned threads) {
  std::vector<VerificationReport> out(tasks.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        out[i] = tasks[i].run();
      } catch (const std::exception& e) {
        out[i].status = Status::Fail;
        out[i].detail = std::string("exception: ") + e.what();
      }
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return out;
}

void inject_failures(const std::vector<Task>& tasks, std::vector<VerificationReport>& reports) {
  const char* env = std::getenv("SIMPLEXPOLY_INJECT_FAILURE");
  if (env == nullptr || *env == '\0') return;
  std::string relation = env;
  std::optional<std::size_t> tuple;
  if (const auto at = relation.find('@'); at != std::string::npos) {
    tuple = std::stoul(relation.substr(at + 1));
    relation.resize(at);
  }
  for (std::size_t i = 0; i < reports.size(); ++i) {
    VerificationReport& r = reports[i];
    if (r.relation != relation || r.status != Status::Pass || (tuple && tasks[i].tuple != *tuple)) continue;
    r.status = Status::Fail;
    r.detail = "injected failure";
  }
}

}  // namespace

std::vector<RelationSummary> summarize_reports(const std::vector<VerificationReport>& reports,
                                               const std::vector<std::size_t>& tuples) {
  struct Acc {
    RelationSummary s;
    std::set<std::size_t> checked, failing;
  };
  std::map<std::pair<std::string, std::string>, Acc> acc;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const VerificationReport& r = reports[i];
    Acc& a = acc[{r.suite, r.relation}];
    a.s.suite = r.suite;
    a.s.relation = r.relation;
    switch (r.status) {
      case Status::Pass: ++a.s.pass; a.checked.insert(tuples[i]); break;
      case Status::Fail:
        ++a.s.fail;
        a.checked.insert(tuples[i]);
        a.failing.insert(tuples[i]);
        break;
      case Status::NotApplicable: ++a.s.not_applicable; break;
    }
  }
  std::vector<RelationSummary> out;
  for (auto& [key, a] : acc) {
    a.s.erratum_candidate = a.s.fail > 0 && a.failing == a.checked;
    out.push_back(a.s);
  }
  return out;
}

namespace {

Rational json_rational(const json& v) {
  if (v.is_number_integer()) return rational(v.get<std::int64_t>());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::exception& e) {
      throw ConfigError("bad rational '" + v.get<std::string>() + "'");
    }
  }
  throw ConfigError("rationals must be integers or \"num/den\" strings, got " + v.dump());
}

void check_value(const Rational& v) {
  if (v <= -1) throw ConfigError("parameter " + to_string(v) + " must exceed -1");
}

std::vector<Tuple> json_tuples(const json& v, std::size_t arity) {
  std::vector<Tuple> out;
  if (v.is_object()) {
    if (!v.contains("values") || !v["values"].is_array()) throw ConfigError("grid object needs a \"values\" list");
    std::vector<Rational> values;
    for (const json& x : v["values"]) values.push_back(json_rational(x));
    if (values.empty()) return out;
    std::vector<std::size_t> pos(arity, 0);
    while (true) {
      Tuple t;
      for (std::size_t k : pos) t.push_back(values[k]);
      out.push_back(t);
      std::size_t d = arity;
      while (d > 0 && ++pos[d - 1] == values.size()) pos[--d] = 0;
      if (d == 0) break;
    }
  } else if (v.is_array()) {
    for (const json& row : v) {
      if (!row.is_array() || row.size() != arity)
        throw ConfigError("expected tuples of " + std::to_string(arity) + " values, got " + row.dump());
      Tuple t;
      for (const json& x : row) t.push_back(json_rational(x));
      out.push_back(t);
    }
  } else {
    throw ConfigError("parameter grid must be a list of tuples or a {\"values\": [...]} object");
  }
  for (const Tuple& t : out)
    for (const Rational& x : t) check_value(x);
  return out;
}

int json_bound(const json& s, const char* key) {
  if (!s.contains(key)) return 0;
  if (!s[key].is_number_integer() || s[key].get<std::int64_t>() < 0)
    throw ConfigError(std::string(key) + " must be a non-negative integer");
  return s[key].get<int>();
}

SuiteConfig parse_suite(const std::string& name, const json& s) {
  if (!s.is_object()) throw ConfigError("suite '" + name + "' must be an object");
  static const std::set<std::string> known = {"max_n", "max_n_general", "params", "triangle_params",
                                              "xi",    "targets",       "relations"};
  for (const auto& [key, value] : s.items())
    if (!known.count(key)) throw ConfigError("unknown key '" + key + "' in suite '" + name + "'");
  SuiteConfig c;
  c.max_n = json_bound(s, "max_n");
  c.max_n_general = json_bound(s, "max_n_general");
  if (s.contains("params")) c.params = json_tuples(s["params"], arity_of(name));
  if (s.contains("triangle_params")) c.triangle_params = json_tuples(s["triangle_params"], 4);
  if (s.contains("targets")) c.targets = json_tuples(s["targets"], 4);
  if (s.contains("xi")) {
    if (!s["xi"].is_array()) throw ConfigError("xi must be a list");
    for (const json& x : s["xi"]) {
      c.xi.push_back(json_rational(x));
      check_value(c.xi.back());
    }
  }
  if (s.contains("relations")) {
    const json& r = s["relations"];
    if (r.is_string() && r.get<std::string>() == "all") {
    } else if (r.is_array()) {
      std::vector<std::string> names;
      for (const json& x : r) {
        if (!x.is_string()) throw ConfigError("relation ids must be strings");
        names.push_back(x.get<std::string>());
      }
      c.relations = names;
    } else {
      throw ConfigError("relations must be \"all\" or a list of ids");
    }
  }
  return c;
}

json report_object(const VerificationReport& r) {
  json params = json::array();
  for (const Rational& x : r.params) params.push_back(to_string(x));
  return json{{"suite", r.suite},   {"relation", r.relation},           {"index", r.index},
              {"params", params},   {"status", status_name(r.status)}, {"detail", r.detail}};
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"ladder1d",    "m2d",         "theorem1",   "second-order", "pde",
                                                 "corollaries", "connections", "three-term", "monic",        "gram"};
  return names;
}

SweepConfig parse_sweep_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("config must be a JSON object");
  SweepConfig cfg;
  if (root.contains("threads")) {
    if (!root["threads"].is_number_integer() || root["threads"].get<std::int64_t>() < 1)
      throw ConfigError("threads must be a positive integer");
    cfg.threads = root["threads"].get<unsigned>();
  }
  if (!root.contains("suites") || !root["suites"].is_object()) throw ConfigError("config needs a \"suites\" object");
  for (const auto& [name, body] : root["suites"].items()) {
    if (!builders().count(name)) throw ConfigError("unknown suite '" + name + "'");
    cfg.suites[name] = parse_suite(name, body);
  }
  return cfg;
}

SweepConfig load_sweep_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_sweep_config(ss.str());
}

unsigned resolve_threads(unsigned hint) {
  if (const char* env = std::getenv("SIMPLEXPOLY_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, hint);
}

std::size_t SweepResult::failures() const {
  std::size_t n = 0;
  for (const RelationSummary& s : summary) n += s.fail;
  return n;
}

std::size_t SweepResult::erratum_candidates() const {
  return static_cast<std::size_t>(
      std::count_if(summary.begin(), summary.end(), [](const RelationSummary& s) { return s.erratum_candidate; }));
}

int SweepResult::exit_code() const {
  if (erratum_candidates() > 0) return 2;
  return failures() > 0 ? 1 : 0;
}

SweepResult run_suite(const std::string& suite, const SweepConfig& config, unsigned threads) {
  const auto b = builders().find(suite);
  if (b == builders().end()) throw ConfigError("unknown suite '" + suite + "'");
  const auto c = config.suites.find(suite);
  if (c == config.suites.end()) throw ConfigError("config has no entry for suite '" + suite + "'");
  const auto start = std::chrono::steady_clock::now();
  TaskList list(c->second);
  b->second(c->second, list);
  SweepResult result;
  result.suite = suite;
  result.reports = execute(list.tasks(), threads);
  inject_failures(list.tasks(), result.reports);
  std::vector<std::size_t> tuples;
  for (const Task& t : list.tasks()) tuples.push_back(t.tuple);
  result.summary = summarize_reports(result.reports, tuples);
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::string sweep_json(const SweepResult& result, bool all_reports) {
  json relations = json::array();
  std::size_t pass = 0, fail = 0, na = 0;
  for (const RelationSummary& s : result.summary) {
    relations.push_back({{"suite", s.suite},
                         {"relation", s.relation},
                         {"pass", s.pass},
                         {"fail", s.fail},
                         {"not_applicable", s.not_applicable},
                         {"erratum_candidate", s.erratum_candidate}});
    pass += s.pass;
    fail += s.fail;
    na += s.not_applicable;
  }
  json reports = json::array();
  for (const VerificationReport& r : result.reports)
    if (all_reports || r.status == Status::Fail) reports.push_back(report_object(r));
  const json out{{"suite", result.suite},
                 {"relations", relations},
                 {"totals",
                  {{"pass", pass},
                   {"fail", fail},
                   {"not_applicable", na},
                   {"erratum_candidates", result.erratum_candidates()}}},
                 {"reports", reports}};
  return out.dump(2) + "\n";
}

std::string report_json(const VerificationReport& report) { return report_object(report).dump(); }

}  // namespace simplexpoly
