#pragma once

#include <stdexcept>
#include <string>

namespace primesums {

/// Precondition violated by the caller (bad modulus, missing parameter, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A run configuration failed to parse or validate.
class ConfigError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A query reaches past the sieved range of an ArithTable.
class TableTooSmall : public std::out_of_range {
 public:
  TableTooSmall(unsigned long long needed, unsigned long long limit)
      : std::out_of_range("arithmetic table too small: need " + std::to_string(needed) +
                          ", limit is " + std::to_string(limit)),
        needed_(needed),
        limit_(limit) {}

  unsigned long long needed() const noexcept { return needed_; }
  unsigned long long limit() const noexcept { return limit_; }

 private:
  unsigned long long needed_;
  unsigned long long limit_;
};

/// An enumeration would visit more terms than the configured cap.
class WorkLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The closed form for a complete mixed sum needs beta >= t + 2.
class ClosedFormRangeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// c^2 + l r^2 h^2 vanished mod p, so the root set is a double root.
class DegenerateDiscriminant : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace primesums
