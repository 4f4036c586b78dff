#ifndef SIMPLEXPOLY_SPECIAL_HPP
#define SIMPLEXPOLY_SPECIAL_HPP

#include <cstdint>

#include "simplexpoly/mpoly.hpp"
#include "simplexpoly/rational.hpp"

namespace simplexpoly {

// Rising factorial (lambda)_n = lambda (lambda + 1) ... (lambda + n - 1).
Rational pochhammer(const Rational& lambda, std::int64_t n);

// Gamma(base + offset) / Gamma(base) for an integer offset:
// (base)_offset when offset >= 0, 1 / (base + offset)_(-offset) otherwise.
struct GammaRatioSpec {
  Rational base;
  std::int64_t offset = 0;
};

// Throws PoleHit when a zero factor lands in a denominator.
Rational gamma_ratio(const GammaRatioSpec& spec);

// sum_{m=0}^{n} (-n)_m (b)_m / ((c)_m m!) x^m. Throws PoleHit if any of
// c, c+1, ..., c+n-1 vanishes.
MPoly hyper2F1_terminating(std::int64_t n, const Rational& b, const Rational& c, const MPoly& x);

// 3F2(-n, a2, a3; b1, b2; 1), evaluated by running products.
Rational hyper3F2_unit(std::int64_t n, const Rational& a2, const Rational& a3, const Rational& b1,
                       const Rational& b2);

Rational factorial(std::int64_t n);

}  // namespace simplexpoly

#endif  // SIMPLEXPOLY_SPECIAL_HPP
