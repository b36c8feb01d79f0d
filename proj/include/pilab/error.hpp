#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pilab {

// Every failure raised by the library derives from Error; the CLI maps these
// to exit code 1 (domain error) as opposed to 2 (usage error).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on the mathematical inputs does not hold.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Not enough digits / working precision to certify a result.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

// A value lies too close to an integer to decide its floor.
class AmbiguityError : public PrecisionError {
 public:
  using PrecisionError::PrecisionError;
};

// Two independent computations disagree.
class ConsistencyError : public Error {
 public:
  ConsistencyError(const std::string& what, std::size_t first_difference)
      : Error(what), first_difference_(first_difference) {}
  std::size_t first_difference() const noexcept { return first_difference_; }

 private:
  std::size_t first_difference_;
};

// Factoring gave up on a composite; carries it in decimal.
class FactorError : public Error {
 public:
  FactorError(const std::string& what, std::string composite)
      : Error(what), composite_(std::move(composite)) {}
  const std::string& composite() const noexcept { return composite_; }

 private:
  std::string composite_;
};

}  // namespace pilab
