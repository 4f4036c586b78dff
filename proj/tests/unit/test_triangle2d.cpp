#include "doctest.h"
#include "oracles.hpp"
#include "simplexpoly/triangle2d.hpp"

using namespace simplexpoly;

namespace {

std::vector<TriangleParams> grid() {
  const Rational v[] = {rational(-1, 2), Rational(0), rational(1, 3), Rational(1)};
  std::vector<TriangleParams> out;
  for (int i = 0; i < 6; ++i) out.push_back({v[i % 4], v[(i + 1) % 4], v[(i * 3 + 2) % 4], v[(i / 2) % 4]});
  return out;
}

}  // namespace

TEST_CASE("triangle_poly small members") {
  const TriangleParams p{rational(1, 3), rational(-1, 2), Rational(2), rational(3, 4)};
  const Rational A = p.a + p.b + p.c + p.d;
  CHECK(triangle_poly({0, 0}, p) == MPoly(Rational(1)));
  CHECK(triangle_poly({1, 0}, p) == X() * Rational(A + 3) - MPoly(Rational(p.a + 1)));
  CHECK(triangle_poly({1, 1}, p) == Y() * Rational(p.b + p.c + 2) - one_minus_x() * Rational(p.b + 1));
  CHECK(triangle_poly({1, 2}, p).is_zero());
}

TEST_CASE("triangle norm ratio against exact integration") {
  const TriangleParams zero{Rational(0), Rational(0), Rational(0), Rational(0)};
  CHECK(triangle_norm_ratio({0, 0}, zero) == 1);
  CHECK(triangle_norm_ratio({1, 1}, zero) == rational(1, 6));
  // (1,0) at zero parameters is 3x - 1; its squared integral is 1/4.
  CHECK(triangle_poly({1, 0}, zero) == X() * Rational(3) - MPoly(Rational(1)));
  CHECK(triangle_norm_ratio({1, 0}, zero) == rational(1, 2));
  for (int a = 0; a <= 1; ++a)
    for (int d = 0; d <= 2; ++d) {
      const TriangleParams p{Rational(a), Rational(1), Rational(0), Rational(d)};
      const MPoly w = X().pow(a) * Y() * one_minus_x().pow(d);
      const Rational h0 = oracle::integrate_triangle(w);
      CHECK(triangle_norm({0, 0}, p) == doctest::Approx(to_double(h0)).epsilon(1e-13));
      for (int n = 0; n <= 3; ++n)
        for (int k = 0; k <= n; ++k) {
          const MPoly P = triangle_poly({n, k}, p);
          CHECK(oracle::integrate_triangle(w * P * P) / h0 == triangle_norm_ratio({n, k}, p));
          CHECK(oracle::integrate_triangle(w * P * triangle_poly({n, 0}, p)) == (k == 0 ? oracle::integrate_triangle(w * P * P) : Rational(0)));
        }
    }
}

TEST_CASE("m_operator encodings") {
  const TriangleParams p{rational(1, 3), rational(-1, 2), Rational(2), rational(3, 4)};
  const DiffOperator m01 = m_operator(MOp::M01, {2, 1}, p);
  CHECK(m01.c0.is_zero());
  CHECK(m01.cy == MPoly(Rational(1)));
  const DiffOperator m06 = m_operator(MOp::M06, {2, 1}, p);
  CHECK(m06.c0 == MPoly(p.b));
  CHECK(m06.cy == Y());
  const DiffOperator m40p = m_operator(MOp::M40p, {3, 1}, p);
  CHECK(m40p.c0 == MPoly(Rational(1)) - one_minus_x() * Rational(3));
  CHECK(m40p.cx == X() * one_minus_x());
  CHECK(m40p.cy == -(X() * Y()));
  CHECK(m40p.denom == one_minus_x());
  CHECK(m_operator(MOp::M02p, {1, 0}, p).denom == one_minus_x());
}

TEST_CASE("m relation examples") {
  const TriangleParams p{rational(1, 3), rational(-1, 2), Rational(2), rational(3, 4)};
  CHECK(verify_m_relation(MOp::M01, {1, 1}, p).status == Status::Pass);
  CHECK(verify_m_relation(MOp::M30p, {0, 0}, p).status == Status::Pass);
  CHECK(verify_m_relation(MOp::M20, {0, 0}, p).status == Status::Pass);
}

TEST_CASE("all m relations, compositions and PDEs on a small sweep") {
  for (const auto& p : grid())
    for (int n = 0; n <= 3; ++n)
      for (int k = 0; k <= n; ++k) {
        for (const auto& rel : m_relations()) {
          const auto r = verify_m_relation(rel.op, {n, k}, p);
          CHECK_MESSAGE(r.status == Status::Pass, r.relation, " n=", n, " k=", k, " ", r.detail);
        }
        for (const auto& id : second_order_identities_2d()) {
          const auto r = verify_second_order_m(id, {n, k}, p);
          CHECK_MESSAGE(r.status != Status::Fail, r.relation, " n=", n, " k=", k, " ", r.detail);
        }
        for (auto which : {TrianglePde::L1, TrianglePde::L2, TrianglePde::B1})
          CHECK_MESSAGE(pde_residual(which, {n, k}, p).is_zero(), triangle_pde_name(which), " n=", n, " k=", k);
      }
}

TEST_CASE("composition examples") {
  const auto& ids = second_order_identities_2d();
  const TriangleParams p{rational(1, 3), rational(-1, 2), Rational(2), rational(3, 4)};
  CHECK(ids[1].name == "M01*M01p");
  CHECK(ids[1].eigenvalue(triangle_member({0, 0}, p)) == p.b + p.c);
  CHECK(ids[13].eigenvalue(triangle_member({0, 0}, p)) == p.a + p.b + p.c + p.d + 1);
  CHECK(ids[22].name == "M60p*M60");
  CHECK(ids[22].eigenvalue(triangle_member({1, 0}, p)) == (1 + p.a) * (p.b + p.c + p.d + 2));
  CHECK(verify_second_order_m(ids[22], {1, 0}, p).status == Status::Pass);
}

TEST_CASE("d = 0 reduction") {
  // Independent oracle: P~ from the explicit binomial sum.
  const Rational a(1, 3), b(-1, 2), c(2);
  for (int n = 0; n <= 4; ++n)
    for (int k = 0; k <= n; ++k) {
      CHECK(verify_triangle_reduction_d0({n, k}, a, b, c).status == Status::Pass);
      const MPoly x_part = oracle::jacobi_explicit(n - k, Rational(2 * k) + b + c + 1, a);
      CHECK(triangle_poly({n, k}, {a, b, c, Rational(0)}) == x_part * koornwinder_triangle({k, k}, Rational(0), b, c));
    }
}

TEST_CASE("monic triangle solutions") {
  const TriangleParams zero{Rational(0), Rational(0), Rational(0), Rational(0)};
  CHECK(monic_triangle({0, 0}, zero) == MPoly(Rational(1)));
  CHECK(monic_triangle({1, 1}, zero) == Y());
  CHECK(monic_triangle({1, 0}, zero) == X() - MPoly(rational(1, 3)));
  for (const auto& p : grid())
    for (int n = 0; n <= 4; ++n)
      for (int k = 0; k <= n; ++k) {
        const auto r = verify_monic_triangle({n, k}, p);
        CHECK_MESSAGE(r.status == Status::Pass, r.detail);
      }
}
