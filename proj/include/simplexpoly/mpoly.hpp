#ifndef SIMPLEXPOLY_MPOLY_HPP
#define SIMPLEXPOLY_MPOLY_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "simplexpoly/rational.hpp"

namespace simplexpoly {

enum class Var { X, Y, Z };

// Exponent triple of x^i y^j z^k. Ordered lexicographically on (i, j, k).
struct Monomial {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  std::uint64_t z = 0;

  std::uint64_t total_degree() const { return x + y + z; }
  std::uint64_t exponent(Var v) const;
  auto operator<=>(const Monomial&) const = default;
};

struct Point {
  Rational x;
  Rational y;
  Rational z;
};

// Sparse polynomial in (x, y, z) with exact rational coefficients. The term
// map never stores a zero coefficient, so structural equality is polynomial
// equality.
class MPoly {
 public:
  using Terms = std::map<Monomial, Rational>;

  MPoly() = default;
  MPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)

  static MPoly variable(Var v);
  static MPoly monomial(const Monomial& m, const Rational& coeff);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coeff(const Monomial& m) const;
  // Maximum exponent of v over all terms; 0 for the zero polynomial.
  std::uint64_t degree(Var v) const;
  std::uint64_t total_degree() const;

  MPoly& operator+=(const MPoly& other);
  MPoly& operator-=(const MPoly& other);
  MPoly& operator*=(const MPoly& other);
  MPoly& operator*=(const Rational& scalar);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& s) { return a *= s; }
  friend MPoly operator*(const Rational& s, MPoly a) { return a *= s; }
  MPoly operator-() const;

  friend bool operator==(const MPoly&, const MPoly&) = default;

  MPoly pow(unsigned exponent) const;

  Rational eval(const Point& at) const;
  double eval(double x, double y, double z) const;

  // Sorted "coeff * x^i y^j z^k" terms, highest total degree first, e.g.
  // "4 * x^1 - 1". The zero polynomial prints as "0".
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);

  Terms terms_;
};

MPoly add(const MPoly& p, const MPoly& q);
MPoly mul(const MPoly& p, const MPoly& q);
MPoly diff(const MPoly& p, Var v);

struct DivisionResult {
  MPoly quotient;
  MPoly remainder;
};

// Multivariate division by a single divisor using lex order x > y > z. For a
// divisor that is linear in its leading variable with a constant leading
// coefficient this is synthetic division in that variable; the remainder is
// zero iff d divides p.
DivisionResult divide(const MPoly& p, const MPoly& d);

// Quotient q with q * d == p. Throws NonzeroRemainder carrying the remainder.
MPoly div_exact(const MPoly& p, const MPoly& d);

Rational eval(const MPoly& p, const Point& at);

// Frequently used building blocks.
inline MPoly X() { return MPoly::variable(Var::X); }
inline MPoly Y() { return MPoly::variable(Var::Y); }
inline MPoly Z() { return MPoly::variable(Var::Z); }
// 1 - x, 1 - x - y and w = 1 - x - y - z.
MPoly one_minus_x();
MPoly one_minus_x_y();
MPoly one_minus_x_y_z();

}  // namespace simplexpoly

#endif  // SIMPLEXPOLY_MPOLY_HPP
