#ifndef SIMPLEXPOLY_TESTS_ORACLES_HPP
#define SIMPLEXPOLY_TESTS_ORACLES_HPP

// Independent constructions used only to cross-check the library.

#include <cstdint>
#include <vector>

#include "simplexpoly/mpoly.hpp"

namespace oracle {

using simplexpoly::MPoly;
using simplexpoly::Rational;

// Generalized binomial C(top, k) for rational top.
inline Rational binom(const Rational& top, std::int64_t k) {
  Rational r(1);
  for (std::int64_t i = 0; i < k; ++i) r = r * (top - Rational(i)) / Rational(i + 1);
  return r;
}

// Explicit sum P = sum_s C(n+a, n-s) C(n+b, s) (x-1)^s x^(n-s).
inline MPoly jacobi_explicit(std::int64_t n, const Rational& a, const Rational& b) {
  using namespace simplexpoly;
  if (n < 0) return {};
  MPoly out;
  const MPoly xm1 = X() - MPoly(Rational(1));
  for (std::int64_t s = 0; s <= n; ++s) {
    out += xm1.pow(static_cast<unsigned>(s)) * X().pow(static_cast<unsigned>(n - s)) *
           Rational(binom(Rational(n) + a, n - s) * binom(Rational(n) + b, s));
  }
  return out;
}

// Classical three-term recurrence for P_n^(a,b)(t) on (-1,1), evaluated at
// t = 2x - 1. Requires a + b not a negative integer in reach.
inline MPoly jacobi_recurrence(std::int64_t n, const Rational& a, const Rational& b) {
  using namespace simplexpoly;
  const MPoly t = X() * Rational(2) - MPoly(Rational(1));
  MPoly p0(Rational(1));
  if (n == 0) return p0;
  MPoly p1 = t * Rational((a + b + 2) / 2) + MPoly(Rational((a - b) / 2));
  for (std::int64_t k = 2; k <= n; ++k) {
    const Rational kk(k);
    const Rational c = 2 * kk + a + b;
    const Rational a1 = 2 * kk * (kk + a + b) * (c - 2);
    const Rational a2 = (c - 1) * (a * a - b * b);
    const Rational a3 = (c - 1) * c * (c - 2);
    const Rational a4 = 2 * (kk + a - 1) * (kk + b - 1) * c;
    MPoly p2 = (p1 * (t * a3 + MPoly(a2)) - p0 * a4) * Rational(1 / a1);
    p0 = std::move(p1);
    p1 = std::move(p2);
  }
  return p1;
}

// Exact integral of x^i y^j z^k over the unit tetrahedron.
inline Rational tetra_monomial(std::uint64_t i, std::uint64_t j, std::uint64_t k) {
  Rational num(1), den(1);
  for (std::uint64_t q = 2; q <= i; ++q) num *= Rational(static_cast<long>(q));
  for (std::uint64_t q = 2; q <= j; ++q) num *= Rational(static_cast<long>(q));
  for (std::uint64_t q = 2; q <= k; ++q) num *= Rational(static_cast<long>(q));
  for (std::uint64_t q = 2; q <= i + j + k + 3; ++q) den *= Rational(static_cast<long>(q));
  return num / den;
}

// Exact integral of x^i y^j over the unit triangle.
inline Rational triangle_monomial(std::uint64_t i, std::uint64_t j) {
  Rational num(1), den(1);
  for (std::uint64_t q = 2; q <= i; ++q) num *= Rational(static_cast<long>(q));
  for (std::uint64_t q = 2; q <= j; ++q) num *= Rational(static_cast<long>(q));
  for (std::uint64_t q = 2; q <= i + j + 2; ++q) den *= Rational(static_cast<long>(q));
  return num / den;
}

inline Rational integrate_tetra(const MPoly& p) {
  Rational s(0);
  for (const auto& [m, c] : p.terms()) s += c * tetra_monomial(m.x, m.y, m.z);
  return s;
}

inline Rational integrate_triangle(const MPoly& p) {
  Rational s(0);
  for (const auto& [m, c] : p.terms()) s += c * triangle_monomial(m.x, m.y);
  return s;
}

// Exact integral of x^i over (0,1).
inline Rational integrate_interval(const MPoly& p) {
  Rational s(0);
  for (const auto& [m, c] : p.terms()) s += c / Rational(static_cast<long>(m.x + 1));
  return s;
}

}  // namespace oracle

#endif
