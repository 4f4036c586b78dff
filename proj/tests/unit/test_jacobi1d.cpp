#include "doctest.h"
#include "oracles.hpp"
#include "simplexpoly/jacobi1d.hpp"

using namespace simplexpoly;

namespace {

const Rational kGrid[] = {rational(-1, 2), rational(-1, 4), Rational(0), rational(1, 3), Rational(1), rational(5, 2)};

}  // namespace

TEST_CASE("shifted_jacobi small cases") {
  const JacobiParams p{rational(2, 7), rational(-1, 3)};
  CHECK(shifted_jacobi(0, p) == MPoly(Rational(1)));
  CHECK(shifted_jacobi(1, p) == X() * Rational(p.a + p.b + 2) - MPoly(Rational(p.b + 1)));
  CHECK(shifted_jacobi(2, {Rational(0), Rational(0)}) ==
        X().pow(2) * Rational(6) - X() * Rational(6) + MPoly(Rational(1)));
  CHECK(shifted_jacobi(-1, p).is_zero());
}

TEST_CASE("shifted_jacobi agrees with independent oracles") {
  for (const auto& a : kGrid)
    for (const auto& b : kGrid)
      for (int n = 0; n <= 8; ++n) {
        const JacobiParams p{a, b};
        const MPoly P = shifted_jacobi(n, p);
        CHECK(P == oracle::jacobi_explicit(n, a, b));
        CHECK(P == oracle::jacobi_recurrence(n, a, b));
        CHECK(P == shifted_jacobi_hypergeometric(n, p));
      }
}

TEST_CASE("pole-free construction below the orthogonality range") {
  // a = -1 makes the hypergeometric denominator (a+1)_m vanish.
  const JacobiParams p{Rational(-1), rational(1, 2)};
  for (int n = 0; n <= 5; ++n) CHECK(shifted_jacobi(n, p) == oracle::jacobi_explicit(n, p.a, p.b));
}

TEST_CASE("norm_ratio") {
  CHECK(norm_ratio(0, {rational(1, 3), Rational(2)}) == 1);
  CHECK(norm_ratio(1, {Rational(0), Rational(0)}) == rational(1, 3));
  CHECK(norm_ratio(1, {Rational(1), Rational(0)}) == rational(1, 2));
  // Exact weighted integration for integer parameters.
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b) {
      const JacobiParams p{Rational(a), Rational(b)};
      const MPoly w = one_minus_x().pow(a) * X().pow(b);
      const Rational h0 = oracle::integrate_interval(w);
      CHECK(norm_h0(p) == doctest::Approx(to_double(h0)).epsilon(1e-13));
      for (int n = 0; n <= 6; ++n) {
        const MPoly P = shifted_jacobi(n, p);
        CHECK(oracle::integrate_interval(w * P * P) / h0 == norm_ratio(n, p));
        for (int m = 0; m < n; ++m) CHECK(oracle::integrate_interval(w * P * shifted_jacobi(m, p)) == 0);
      }
    }
  // a + b = -1: arcsine weight, variance 1/8.
  CHECK(norm_ratio(1, {rational(-1, 2), rational(-1, 2)}) == rational(1, 8));
}

TEST_CASE("ladder operator encodings") {
  const JacobiParams p{rational(1, 3), rational(5, 2)};
  const DiffOperator l1 = ladder_operator(LadderOp::L1, 3, p);
  CHECK(l1.c0.is_zero());
  CHECK(l1.cx == MPoly(Rational(1)));
  CHECK(l1.denom == MPoly(Rational(1)));
  const DiffOperator l6 = ladder_operator(LadderOp::L6, 3, p);
  CHECK(l6.c0 == MPoly(p.b));
  CHECK(l6.cx == X());
  const DiffOperator l5p = ladder_operator(LadderOp::L5p, 3, p);
  CHECK(l5p.c0 == MPoly(Rational(3)));
  CHECK(l5p.cx == one_minus_x());
  const DiffOperator l2 = ladder_operator(LadderOp::L2, 3, p);
  CHECK(l2.c0 == MPoly(Rational(p.a + p.b + 4)));
  CHECK(l2.cx == X());
}

TEST_CASE("verify_ladder examples") {
  CHECK(verify_ladder(LadderOp::L1, 1, {Rational(0), Rational(0)}).status == Status::Pass);
  CHECK(verify_ladder(LadderOp::L6, 0, {rational(1, 3), rational(-1, 4)}).status == Status::Pass);
  CHECK(verify_ladder(LadderOp::L2, 0, {rational(5, 2), Rational(1)}).status == Status::Pass);
  const auto zero_target = verify_ladder(LadderOp::L1, 0, {Rational(1), Rational(1)});
  CHECK(zero_target.status == Status::Pass);
  CHECK(zero_target.detail == "0 = 0");
}

TEST_CASE("all ladder relations and compositions on a small grid") {
  const auto& ids = second_order_identities_1d();
  CHECK(ids.size() == 24);
  for (const auto& a : kGrid)
    for (const auto& b : kGrid)
      for (int n = 0; n <= 4; ++n) {
        for (LadderOp op : kLadderOps) {
          const auto r = verify_ladder(op, n, {a, b});
          CHECK_MESSAGE(r.status == Status::Pass, r.relation, " n=", n);
        }
        for (const auto& id : ids) {
          const auto r = verify_second_order_1d(id, n, {a, b});
          CHECK_MESSAGE(r.status != Status::Fail, r.relation, " n=", n);
        }
      }
}

TEST_CASE("second-order examples") {
  const auto& ids = second_order_identities_1d();
  CHECK(ids[0].name == "L1p*L1:shifted");
  CHECK(ids[0].eigenvalue(jacobi_member(1, {Rational(1), Rational(1)})) == 2);
  CHECK(verify_second_order_1d(ids[0], 1, {Rational(1), Rational(1)}).status == Status::Pass);
  const JacobiParams p{rational(1, 3), rational(-1, 4)};
  CHECK(ids[10].eigenvalue(jacobi_member(0, p)) == p.a * p.b);
  CHECK(verify_second_order_1d(ids[10], 0, p).status == Status::Pass);
  CHECK(ids[13].eigenvalue(jacobi_member(0, {Rational(0), Rational(0)})) == 0);
  CHECK(verify_second_order_1d(ids[13], 0, {Rational(0), Rational(0)}).status == Status::Pass);
}
