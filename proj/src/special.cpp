#include "simplexpoly/special.hpp"

#include "simplexpoly/errors.hpp"

namespace simplexpoly {

Rational pochhammer(const Rational& lambda, std::int64_t n) {
  if (n < 0) throw InvalidArgument("pochhammer: negative length");
  Rational r(1);
  for (std::int64_t i = 0; i < n; ++i) r *= lambda + rational(i);
  return r;
}

Rational factorial(std::int64_t n) { return pochhammer(Rational(1), n); }

Rational gamma_ratio(const GammaRatioSpec& spec) {
  if (spec.offset >= 0) return pochhammer(spec.base, spec.offset);
  const Rational start = spec.base + rational(spec.offset);
  const Rational denom = pochhammer(start, -spec.offset);
  if (denom == 0) {
    throw PoleHit("gamma_ratio: zero factor in (" + to_string(start) + ")_" + std::to_string(-spec.offset));
  }
  return Rational(1) / denom;
}

MPoly hyper2F1_terminating(std::int64_t n, const Rational& b, const Rational& c, const MPoly& x) {
  if (n < 0) throw InvalidArgument("hyper2F1_terminating: negative degree");
  MPoly sum(Rational(1));
  MPoly power(Rational(1));
  Rational term(1);
  for (std::int64_t m = 0; m < n; ++m) {
    const Rational cm = c + rational(m);
    if (cm == 0) throw PoleHit("hyper2F1_terminating: (c)_m vanishes at c = " + to_string(c));
    term *= rational(m - n) * (b + rational(m)) / (cm * rational(m + 1));
    power *= x;
    sum += power * term;
  }
  return sum;
}

Rational hyper3F2_unit(std::int64_t n, const Rational& a2, const Rational& a3, const Rational& b1,
                       const Rational& b2) {
  if (n < 0) throw InvalidArgument("hyper3F2_unit: negative degree");
  Rational sum(1);
  Rational term(1);
  for (std::int64_t m = 0; m < n; ++m) {
    const Rational d1 = b1 + rational(m);
    const Rational d2 = b2 + rational(m);
    if (d1 == 0 || d2 == 0) throw PoleHit("hyper3F2_unit: vanishing lower Pochhammer factor");
    term *= rational(m - n) * (a2 + rational(m)) * (a3 + rational(m)) / (d1 * d2 * rational(m + 1));
    sum += term;
  }
  return sum;
}

}  // namespace simplexpoly
