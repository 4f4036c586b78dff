#include "simplexpoly/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <thread>

#include "simplexpoly/errors.hpp"

namespace simplexpoly {

namespace {

double log_beta(double x, double y) { return std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y); }

double beta(double x, double y) { return std::exp(log_beta(x, y)); }

// Weights of the rule in one collapsed direction for (1-u)^a u^b.
QuadRule1D collapsed(int order, const Rational& a, const Rational& b) {
  return gauss_jacobi_01(std::max(1, order / 2 + 1), a, b);
}

template <class Eval>
Matrix assemble(std::size_t size, std::size_t npoints, const std::vector<double>& weights, Eval eval,
                unsigned threads) {
  // values[i][q] = P_i at point q.
  std::vector<std::vector<double>> values(size, std::vector<double>(npoints));
  for (std::size_t i = 0; i < size; ++i) eval(i, values[i]);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i; j < size; ++j) pairs.emplace_back(i, j);
  Matrix g(size, std::vector<double>(size, 0.0));
  const auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t t = begin; t < pairs.size(); t += step) {
      const auto [i, j] = pairs[t];
      double s = 0;
      for (std::size_t q = 0; q < npoints; ++q) s += weights[q] * values[i][q] * values[j][q];
      g[i][j] = s;
      g[j][i] = s;
    }
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, pairs.size()));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
    for (auto& t : pool) t.join();
  }
  return g;
}

std::string format12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

QuadRule1D gauss_jacobi_01(int m, const Rational& a, const Rational& b) {
  if (m < 1) throw InvalidArgument("gauss_jacobi_01: m must be positive");
  if (a <= -1 || b <= -1) throw InvalidArgument("gauss_jacobi_01: exponents must exceed -1");
  // Monic Jacobi recurrence on (-1,1) for (1-t)^a (1+t)^b, then x = (1+t)/2.
  const double al = to_double(a), be = to_double(b), ab = al + be;
  Eigen::VectorXd diag(m);
  Eigen::VectorXd sub(std::max(0, m - 1));
  diag(0) = (be - al) / (ab + 2);
  for (int k = 1; k < m; ++k) {
    const double s = 2.0 * k + ab;
    diag(k) = (be * be - al * al) / (s * (s + 2));
    const double bk = k == 1 ? 4 * (1 + al) * (1 + be) / ((2 + ab) * (2 + ab) * (3 + ab))
                             : 4.0 * k * (k + al) * (k + be) * (k + ab) / (s * s * (s + 1) * (s - 1));
    sub(k - 1) = std::sqrt(bk);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw ConvergenceFailure("gauss_jacobi_01: eigen-solver did not converge");
  const double mass = beta(al + 1, be + 1);
  QuadRule1D rule;
  rule.nodes.resize(m);
  rule.weights.resize(m);
  for (int i = 0; i < m; ++i) {
    const double v0 = solver.eigenvectors()(0, i);
    rule.nodes[i] = (1 + solver.eigenvalues()(i)) / 2;
    rule.weights[i] = mass * v0 * v0;
  }
  return rule;
}

SimplexRule tetra_rule(const SimplexParams& p, int order) {
  const QuadRule1D ru = collapsed(order, p.beta + p.gamma + p.delta + p.a + p.b + 2, p.alpha);
  const QuadRule1D rv = collapsed(order, p.gamma + p.delta + p.b + 1, p.beta);
  const QuadRule1D rt = collapsed(order, p.delta, p.gamma);
  SimplexRule rule;
  for (std::size_t i = 0; i < ru.nodes.size(); ++i)
    for (std::size_t j = 0; j < rv.nodes.size(); ++j)
      for (std::size_t k = 0; k < rt.nodes.size(); ++k) {
        const double u = ru.nodes[i], v = rv.nodes[j], t = rt.nodes[k];
        rule.points.push_back({u, v * (1 - u), t * (1 - u) * (1 - v)});
        rule.weights.push_back(ru.weights[i] * rv.weights[j] * rt.weights[k]);
      }
  return rule;
}

TriangleRule triangle_rule(const TriangleParams& p, int order) {
  const QuadRule1D ru = collapsed(order, p.b + p.c + p.d + 1, p.a);
  const QuadRule1D rv = collapsed(order, p.c, p.b);
  TriangleRule rule;
  for (std::size_t i = 0; i < ru.nodes.size(); ++i)
    for (std::size_t j = 0; j < rv.nodes.size(); ++j) {
      const double u = ru.nodes[i], v = rv.nodes[j];
      rule.points.push_back({u, v * (1 - u)});
      rule.weights.push_back(ru.weights[i] * rv.weights[j]);
    }
  return rule;
}

double simplex_moment(int i, int j, int k, const SimplexParams& p) {
  const double al = to_double(p.alpha), be = to_double(p.beta), ga = to_double(p.gamma);
  const double de = to_double(p.delta), a = to_double(p.a), b = to_double(p.b);
  return std::exp(log_beta(al + i + 1, be + ga + de + a + b + j + k + 3) + log_beta(be + j + 1, ga + de + b + k + 2) +
                  log_beta(ga + k + 1, de + 1));
}

double triangle_moment(int i, int j, const TriangleParams& p) {
  const double a = to_double(p.a), b = to_double(p.b), c = to_double(p.c), d = to_double(p.d);
  return std::exp(log_beta(a + i + 1, b + c + d + j + 2) + log_beta(b + j + 1, c + 1));
}

std::vector<Index3> simplex_basis(int N) {
  std::vector<Index3> out;
  for (int n = 0; n <= N; ++n)
    for (int n1 = n; n1 >= 0; --n1)
      for (int n2 = n - n1; n2 >= 0; --n2) out.push_back({n1, n2, n - n1 - n2});
  return out;
}

std::vector<TriIndex> triangle_basis(int N) {
  std::vector<TriIndex> out;
  for (int n = 0; n <= N; ++n)
    for (int k = 0; k <= n; ++k) out.push_back({n, k});
  return out;
}

Matrix gram_matrix(int N, const SimplexParams& p, const SimplexRule& rule, unsigned threads) {
  const std::vector<Index3> basis = simplex_basis(N);
  const auto eval = [&](std::size_t i, std::vector<double>& out) {
    const MPoly poly = simplex_poly(basis[i], p);
    for (std::size_t q = 0; q < rule.points.size(); ++q) {
      const auto& pt = rule.points[q];
      out[q] = poly.eval(pt[0], pt[1], pt[2]);
    }
  };
  return assemble(basis.size(), rule.points.size(), rule.weights, eval, threads);
}

Matrix gram_matrix(int N, const SimplexParams& p, unsigned threads) {
  return gram_matrix(N, p, tetra_rule(p, 2 * N), threads);
}

Matrix triangle_gram_matrix(int N, const TriangleParams& p, const TriangleRule& rule, unsigned threads) {
  const std::vector<TriIndex> basis = triangle_basis(N);
  const auto eval = [&](std::size_t i, std::vector<double>& out) {
    const MPoly poly = triangle_poly(basis[i], p);
    for (std::size_t q = 0; q < rule.points.size(); ++q) out[q] = poly.eval(rule.points[q][0], rule.points[q][1], 0);
  };
  return assemble(basis.size(), rule.points.size(), rule.weights, eval, threads);
}

Matrix triangle_gram_matrix(int N, const TriangleParams& p, unsigned threads) {
  return triangle_gram_matrix(N, p, triangle_rule(p, 2 * N), threads);
}

namespace {

template <class Norm>
GramCheck check(const Matrix& g, Norm norm, double tol) {
  GramCheck c;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double exact = norm(i);
    c.max_diag_error = std::max(c.max_diag_error, std::abs(g[i][i] - exact) / std::abs(exact));
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i == j) continue;
      c.max_offdiag = std::max(c.max_offdiag, std::abs(g[i][j]) / std::sqrt(std::abs(g[i][i] * g[j][j])));
    }
  }
  c.ok = c.max_diag_error <= tol && c.max_offdiag <= tol;
  return c;
}

}  // namespace

GramCheck check_gram(int N, const SimplexParams& p, const Matrix& g, double tol) {
  const std::vector<Index3> basis = simplex_basis(N);
  return check(g, [&](std::size_t i) { return simplex_norm(basis[i], p).absolute; }, tol);
}

GramCheck check_triangle_gram(int N, const TriangleParams& p, const Matrix& g, double tol) {
  const std::vector<TriIndex> basis = triangle_basis(N);
  return check(g, [&](std::size_t i) { return triangle_norm(basis[i], p); }, tol);
}

std::string gram_csv(const Matrix& g) {
  std::string out;
  for (const auto& row : g) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ',';
      out += format12(row[j]);
    }
    out += '\n';
  }
  return out;
}

std::string rule_json(const SimplexRule& rule) {
  nlohmann::json j;
  j["points"] = rule.points;
  j["weights"] = rule.weights;
  return j.dump();
}

}  // namespace simplexpoly
