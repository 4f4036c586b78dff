#ifndef SIMPLEXPOLY_RATIONAL_HPP
#define SIMPLEXPOLY_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace simplexpoly {

// Canonical (lowest terms, positive denominator) arbitrary-precision rational.
using Rational = mpq_class;

// Parses "p", "p/q" or "-p/q". Throws std::invalid_argument on malformed input
// or a zero denominator.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

// Comma separated list of rationals, e.g. "0,1/2,-1/3".
std::vector<Rational> parse_rational_list(std::string_view text);

inline Rational rational(std::int64_t value) {
  return Rational(static_cast<long>(value));
}

// num / den in canonical form.
inline Rational rational(std::int64_t num, std::int64_t den) {
  Rational r(static_cast<long>(num), static_cast<long>(den));
  r.canonicalize();
  return r;
}

}  // namespace simplexpoly

#endif  // SIMPLEXPOLY_RATIONAL_HPP
