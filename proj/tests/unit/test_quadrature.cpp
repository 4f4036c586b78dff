#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "simplexpoly/errors.hpp"
#include "simplexpoly/quadrature.hpp"

using namespace simplexpoly;

namespace {

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

// Integer-exponent weight expanded as a polynomial so that the exact
// monomial integrals apply.
MPoly simplex_weight(int al, int be, int ga, int de, int a, int b) {
  const MPoly w = MPoly(Rational(1)) - X() - Y() - Z();
  return X().pow(al) * Y().pow(be) * Z().pow(ga) * w.pow(de) * one_minus_x().pow(a) * one_minus_x_y().pow(b);
}

double apply(const SimplexRule& r, const MPoly& f) {
  double s = 0;
  for (std::size_t q = 0; q < r.points.size(); ++q) s += r.weights[q] * f.eval(r.points[q][0], r.points[q][1], r.points[q][2]);
  return s;
}

const SimplexParams kZero{Rational(0), Rational(0), Rational(0), Rational(0), Rational(0), Rational(0)};

std::vector<SimplexParams> gram_params() {
  return {kZero,
          {rational(-1, 2), rational(1, 3), Rational(1), Rational(0), rational(1, 3), rational(-1, 2)},
          {Rational(2), rational(-1, 2), rational(1, 3), Rational(1), Rational(0), Rational(2)},
          {rational(1, 3), Rational(1), rational(-1, 2), Rational(2), rational(-1, 2), Rational(1)}};
}

}  // namespace

TEST_CASE("gauss_jacobi_01 examples") {
  const QuadRule1D one = gauss_jacobi_01(1, Rational(0), Rational(0));
  REQUIRE(one.nodes.size() == 1);
  CHECK(one.nodes[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(one.weights[0] == doctest::Approx(1.0).epsilon(1e-15));

  const QuadRule1D two = gauss_jacobi_01(2, Rational(0), Rational(0));
  CHECK(two.nodes[0] == doctest::Approx(0.5 - 1 / (2 * std::sqrt(3.0))).epsilon(1e-14));
  CHECK(two.nodes[1] == doctest::Approx(0.5 + 1 / (2 * std::sqrt(3.0))).epsilon(1e-14));
  CHECK(two.weights[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(two.weights[1] == doctest::Approx(0.5).epsilon(1e-14));

  for (const Rational b : {rational(-1, 2), rational(1, 3), rational(5, 2)}) {
    const QuadRule1D r = gauss_jacobi_01(1, Rational(0), b);
    const double bd = to_double(b);
    CHECK(rel(r.nodes[0], (bd + 1) / (bd + 2)) < 1e-14);
    CHECK(rel(r.weights[0], 1 / (bd + 1)) < 1e-14);
  }
}

TEST_CASE("gauss_jacobi_01 moments") {
  const Rational vals[] = {rational(-1, 2), rational(-1, 4), Rational(0), rational(1, 3), Rational(1), rational(5, 2)};
  for (const Rational& a : vals)
    for (const Rational& b : vals)
      for (int m = 1; m <= 6; ++m) {
        const QuadRule1D r = gauss_jacobi_01(m, a, b);
        for (int i = 1; i < m; ++i) CHECK(r.nodes[i - 1] < r.nodes[i]);
        for (double w : r.weights) CHECK(w > 0);
        const double mass = std::exp(std::lgamma(to_double(a) + 1) + std::lgamma(to_double(b) + 1) -
                                     std::lgamma(to_double(a + b) + 2));
        // Moment k over mass is (b+1)_k / (a+b+2)_k.
        Rational ratio(1);
        for (int k = 0; k <= 2 * m - 1; ++k) {
          double s = 0;
          for (int q = 0; q < m; ++q) s += r.weights[q] * std::pow(r.nodes[q], k);
          CHECK(rel(s, mass * to_double(ratio)) < 1e-12);
          ratio *= (b + 1 + k) / (a + b + 2 + k);
        }
      }
}

TEST_CASE("gauss_jacobi_01 rejects bad input") {
  CHECK_THROWS_AS(gauss_jacobi_01(0, Rational(0), Rational(0)), InvalidArgument);
  CHECK_THROWS_AS(gauss_jacobi_01(2, Rational(-1), Rational(0)), InvalidArgument);
}

TEST_CASE("tetra_rule examples") {
  const SimplexRule r = tetra_rule(kZero, 1);
  double total = 0;
  for (double w : r.weights) total += w;
  CHECK(rel(total, 1.0 / 6) < 1e-14);
  CHECK(rel(apply(r, X()), 1.0 / 24) < 1e-14);
  const SimplexRule r2 = tetra_rule(kZero, 2);
  const MPoly f = X() * Rational(4) - MPoly(Rational(1));
  CHECK(rel(apply(r2, f * f), 1.0 / 10) < 1e-13);
  for (const auto& pt : r2.points) {
    CHECK(pt[0] > 0);
    CHECK(pt[1] > 0);
    CHECK(pt[2] > 0);
    CHECK(1 - pt[0] - pt[1] - pt[2] > 0);
  }
}

TEST_CASE("tetra_rule exact against integer-weight monomials") {
  const int tuples[][6] = {{0, 0, 0, 0, 0, 0}, {1, 0, 2, 0, 1, 0}, {0, 2, 1, 1, 0, 2}, {2, 1, 0, 1, 1, 1}};
  const int order = 6;
  for (const auto& t : tuples) {
    const SimplexParams p{Rational(t[0]), Rational(t[1]), Rational(t[2]), Rational(t[3]), Rational(t[4]), Rational(t[5])};
    const SimplexRule r = tetra_rule(p, order);
    const MPoly w = simplex_weight(t[0], t[1], t[2], t[3], t[4], t[5]);
    for (int i = 0; i <= order; ++i)
      for (int j = 0; i + j <= order; ++j)
        for (int k = 0; i + j + k <= order; ++k) {
          const MPoly mono = X().pow(i) * Y().pow(j) * Z().pow(k);
          const double exact = to_double(oracle::integrate_tetra(mono * w));
          CHECK(rel(apply(r, mono), exact) < 1e-12);
          CHECK(rel(simplex_moment(i, j, k, p), exact) < 1e-12);
        }
  }
}

TEST_CASE("tetra_rule exact against fractional-weight moments") {
  for (const SimplexParams& p : gram_params()) {
    const SimplexRule r = tetra_rule(p, 5);
    for (int i = 0; i <= 5; ++i)
      for (int j = 0; i + j <= 5; ++j)
        for (int k = 0; i + j + k <= 5; ++k)
          CHECK(rel(apply(r, X().pow(i) * Y().pow(j) * Z().pow(k)), simplex_moment(i, j, k, p)) < 1e-12);
  }
}

TEST_CASE("triangle_rule exact against integer-weight monomials") {
  const int tuples[][4] = {{0, 0, 0, 0}, {1, 2, 0, 1}, {2, 0, 1, 2}};
  for (const auto& t : tuples) {
    const TriangleParams p{Rational(t[0]), Rational(t[1]), Rational(t[2]), Rational(t[3])};
    const TriangleRule r = triangle_rule(p, 6);
    const MPoly w = X().pow(t[0]) * Y().pow(t[1]) * one_minus_x_y().pow(t[2]) * one_minus_x().pow(t[3]);
    for (int i = 0; i <= 6; ++i)
      for (int j = 0; i + j <= 6; ++j) {
        const MPoly mono = X().pow(i) * Y().pow(j);
        double s = 0;
        for (std::size_t q = 0; q < r.points.size(); ++q) s += r.weights[q] * mono.eval(r.points[q][0], r.points[q][1], 0);
        const double exact = to_double(oracle::integrate_triangle(mono * w));
        CHECK(rel(s, exact) < 1e-12);
        CHECK(rel(triangle_moment(i, j, p), exact) < 1e-12);
      }
  }
}

TEST_CASE("gram_matrix examples") {
  const Matrix g0 = gram_matrix(0, kZero);
  REQUIRE(g0.size() == 1);
  CHECK(rel(g0[0][0], 1.0 / 6) < 1e-14);
  const Matrix g1 = gram_matrix(1, kZero);
  REQUIRE(g1.size() == 4);
  CHECK(simplex_basis(1)[1].n1 == 1);
  CHECK(rel(g1[1][1], 1.0 / 10) < 1e-13);
  CHECK(std::abs(g1[0][1]) < 1e-15);
  CHECK(gram_csv(g0) == "0.166666666667\n");
}

TEST_CASE("gram_matrix orthogonality up to degree 4") {
  for (const SimplexParams& p : gram_params())
    for (int N = 0; N <= 4; ++N) {
      const Matrix g = gram_matrix(N, p, 2);
      CHECK(g.size() == static_cast<std::size_t>((N + 1) * (N + 2) * (N + 3) / 6));
      const GramCheck c = check_gram(N, p, g);
      CHECK(c.ok);
      CHECK(c.max_offdiag <= 1e-10);
      CHECK(c.max_diag_error <= 1e-10);
    }
}

TEST_CASE("triangle gram orthogonality up to degree 4") {
  const std::vector<TriangleParams> tuples = {{Rational(0), Rational(0), Rational(0), Rational(0)},
                                              {rational(-1, 2), rational(1, 3), Rational(1), Rational(2)},
                                              {Rational(2), rational(-1, 4), rational(5, 2), Rational(0)}};
  for (const TriangleParams& p : tuples)
    for (int N = 0; N <= 4; ++N) CHECK(check_triangle_gram(N, p, triangle_gram_matrix(N, p)).ok);
}

TEST_CASE("gram_matrix independent of thread count") {
  const SimplexParams p = gram_params()[1];
  CHECK(gram_matrix(3, p, 1) == gram_matrix(3, p, 3));
}

TEST_CASE("rule_json") {
  const std::string s = rule_json(tetra_rule(kZero, 0));
  CHECK(s.find("\"points\"") != std::string::npos);
  CHECK(s.find("\"weights\"") != std::string::npos);
}
