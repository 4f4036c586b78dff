#ifndef SIMPLEXPOLY_ERRORS_HPP
#define SIMPLEXPOLY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace simplexpoly {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A Pochhammer or Gamma-ratio factor in a denominator position is zero.
class PoleHit : public Error {
 public:
  using Error::Error;
};

// Exact division left a remainder. `remainder()` is the textual remainder
// polynomial so that harnesses can report it.
class NonzeroRemainder : public Error {
 public:
  NonzeroRemainder(const std::string& what, std::string remainder)
      : Error(what), remainder_(std::move(remainder)) {}
  const std::string& remainder() const noexcept { return remainder_; }

 private:
  std::string remainder_;
};

class ConvergenceFailure : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Malformed or out-of-range sweep configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace simplexpoly

#endif  // SIMPLEXPOLY_ERRORS_HPP
