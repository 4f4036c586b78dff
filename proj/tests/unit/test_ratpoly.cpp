#include <random>

#include "doctest.h"
#include "simplexpoly/errors.hpp"
#include "simplexpoly/mpoly.hpp"

using namespace simplexpoly;

namespace {

MPoly random_poly(std::mt19937& rng, int max_deg, int terms) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  MPoly p;
  for (int i = 0; i < terms; ++i) {
    Monomial m{static_cast<std::uint64_t>(deg(rng)), static_cast<std::uint64_t>(deg(rng)),
               static_cast<std::uint64_t>(deg(rng))};
    p += MPoly::monomial(m, rational(num(rng), den(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/6") == rational(1, 2));
  CHECK(parse_rational("-1/4") == rational(-1, 4));
  CHECK(parse_rational(" 5 ") == Rational(5));
  CHECK(to_string(parse_rational("0/7")) == "0");
  CHECK(to_string(rational(-6, 4)) == "-3/2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK(parse_rational_list("0,1/2,-1").size() == 3);
}

TEST_CASE("add") {
  const MPoly x = X(), y = Y();
  CHECK((x + MPoly(Rational(1))) + (-x) == MPoly(Rational(1)));
  const MPoly p = x * y + Z();
  CHECK(p + MPoly() == p);
  CHECK(x * y + x * y == x * y * Rational(2));
}

TEST_CASE("mul") {
  const MPoly s = one_minus_x();
  CHECK(s * s == MPoly(Rational(1)) - X() * Rational(2) + X().pow(2));
  const MPoly p = X() + Y() * Z();
  CHECK(p * MPoly(Rational(1)) == p);
  CHECK((X() + Y()) * (X() - Y()) == X().pow(2) - Y().pow(2));
}

TEST_CASE("diff") {
  CHECK(diff(X().pow(2) * Y(), Var::X) == X() * Y() * Rational(2));
  CHECK(diff(MPoly(Rational(7)), Var::Z).is_zero());
  CHECK(diff(X() * Y() * Z(), Var::Z) == X() * Y());
}

TEST_CASE("div_exact") {
  const MPoly s = one_minus_x();
  CHECK(div_exact(s * s, s) == s);
  CHECK(div_exact(one_minus_x_y() * Y(), one_minus_x_y()) == Y());
  CHECK_THROWS_AS(div_exact(X(), s), NonzeroRemainder);
  try {
    div_exact(X(), s);
  } catch (const NonzeroRemainder& e) {
    CHECK(e.remainder() == "1");
  }
}

TEST_CASE("eval") {
  const Point pt{rational(1, 2), rational(1, 4), rational(1, 8)};
  CHECK(eval(X() + Y() + Z(), pt) == rational(7, 8));
  CHECK(eval(MPoly(), pt) == 0);
  CHECK(eval(one_minus_x().pow(2), Point{rational(1, 3), rational(0), Rational(0)}) == rational(4, 9));
}

TEST_CASE("to_string") {
  CHECK((X() * Rational(4) - MPoly(Rational(1))).to_string() == "4 * x^1 - 1");
  CHECK(MPoly().to_string() == "0");
  CHECK((Y() * Z() * rational(-1, 2) + X()).to_string() == "-1/2 * y^1 z^1 + 1 * x^1");
}

TEST_CASE("ring axioms and Leibniz rule on random inputs") {
  std::mt19937 rng(12345);
  const MPoly divisors[] = {one_minus_x(), one_minus_x_y(), one_minus_x_y_z(), one_minus_x() * one_minus_x_y()};
  for (int trial = 0; trial < 40; ++trial) {
    const MPoly p = random_poly(rng, 3, 5);
    const MPoly q = random_poly(rng, 3, 4);
    const MPoly r = random_poly(rng, 2, 3);
    CHECK((p + q) + r == p + (q + r));
    CHECK(p + q == q + p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * q == q * p);
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p - p == MPoly());
    for (Var v : {Var::X, Var::Y, Var::Z}) {
      CHECK(diff(p * q, v) == diff(p, v) * q + p * diff(q, v));
      CHECK(diff(p + q, v) == diff(p, v) + diff(q, v));
    }
    for (const auto& d : divisors) CHECK(div_exact(p * d, d) == p);
  }
}

TEST_CASE("identity testing on a grid agrees with canonical equality") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const MPoly p = random_poly(rng, 2, 4);
    const MPoly q = p + MPoly::monomial(Monomial{1, 1, 1}, Rational(trial % 2));
    bool same_on_grid = true;
    for (int i = 0; i <= 2; ++i)
      for (int j = 0; j <= 2; ++j)
        for (int k = 0; k <= 2; ++k) {
          const Point pt{rational(i, 3), rational(j, 5), rational(k, 7)};
          if (eval(p, pt) != eval(q, pt)) same_on_grid = false;
        }
    CHECK(same_on_grid == (p == q));
  }
}
