#pragma once

#include <stdexcept>
#include <string>

namespace xxz {

/// Argument outside the domain of a total-looking function (poles, zero inverse, wrong parity).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An operation that must be exact was not (nonzero remainder, non-integral product).
/// Almost always means a formula was transcribed wrongly.
class ExactnessError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A symmetric-function table was indexed past the entries it holds.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Enumeration or dense-matrix guard exceeded.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Zero pivot or zero interior divisor where the algorithm cannot continue.
class SingularError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Iterative numeric method failed to converge.
class NumericFailure : public std::runtime_error {
 public:
  NumericFailure(const std::string& what, std::string diagnostics)
      : std::runtime_error(what), diagnostics_(std::move(diagnostics)) {}
  explicit NumericFailure(const std::string& what) : std::runtime_error(what) {}

  const std::string& diagnostics() const noexcept { return diagnostics_; }

 private:
  std::string diagnostics_;
};

}  // namespace xxz
