#include "doctest.h"
#include "simplexpoly/errors.hpp"
#include "simplexpoly/special.hpp"

using namespace simplexpoly;

TEST_CASE("pochhammer") {
  CHECK(pochhammer(rational(7, 3), 0) == 1);
  CHECK(pochhammer(rational(1), 4) == 24);
  CHECK(pochhammer(rational(1, 2), 2) == rational(3, 4));
  const Rational lams[] = {rational(-5, 2), Rational(0), rational(1, 3), Rational(4)};
  for (const auto& lam : lams)
    for (int m = 0; m <= 10; ++m)
      for (int n = 0; n <= 10; ++n)
        CHECK(pochhammer(lam, m + n) == pochhammer(lam, m) * pochhammer(lam + m, n));
}

TEST_CASE("gamma_ratio") {
  CHECK(gamma_ratio({Rational(5), 0}) == 1);
  CHECK(gamma_ratio({Rational(3), 2}) == 12);
  CHECK(gamma_ratio({rational(1, 2), -1}) == -2);
  CHECK_THROWS_AS(gamma_ratio({Rational(1), -1}), PoleHit);
  const Rational bases[] = {rational(1, 3), rational(5, 2), Rational(7)};
  for (const auto& base : bases)
    for (int k = -3; k <= 3; ++k) CHECK(gamma_ratio({base, k}) * gamma_ratio({base + k, -k}) == 1);
}

TEST_CASE("hyper2F1_terminating") {
  const Rational b(2, 3), c(5, 4);
  CHECK(hyper2F1_terminating(0, b, c, X()) == MPoly(Rational(1)));
  CHECK(hyper2F1_terminating(1, b, c, X()) == MPoly(Rational(1)) - X() * Rational(b / c));
  CHECK(hyper2F1_terminating(2, rational(1), Rational(1), MPoly(Rational(1))).is_zero());
  CHECK(hyper2F1_terminating(2, rational(1), Rational(1), X()) == one_minus_x().pow(2));
  for (int n = 0; n < 6; ++n) CHECK(eval(hyper2F1_terminating(n, b, c, X()), Point{}) == 1);
  CHECK_THROWS_AS(hyper2F1_terminating(2, b, rational(-1), X()), PoleHit);
}

TEST_CASE("hyper3F2_unit") {
  CHECK(hyper3F2_unit(0, rational(2), Rational(3), rational(4), Rational(5)) == 1);
  CHECK(hyper3F2_unit(1, rational(2), Rational(3), rational(4), Rational(5)) == rational(7, 10));
  CHECK(hyper3F2_unit(4, rational(2), Rational(0), rational(4), Rational(5)) == 1);
  // a3 = b2 reduces to 2F1(-n, a2; b1; 1) = (b1 - a2)_n / (b1)_n.
  const Rational a2(1, 3), b1(7, 2), same(9, 5);
  for (int n = 0; n < 8; ++n) {
    const Rational red = eval(hyper2F1_terminating(n, a2, b1, MPoly(Rational(1))), Point{});
    CHECK(hyper3F2_unit(n, a2, same, b1, same) == red);
    CHECK(red == pochhammer(b1 - a2, n) / pochhammer(b1, n));
  }
}
