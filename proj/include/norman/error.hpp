#ifndef NORMAN_ERROR_HPP
#define NORMAN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace norman {

// Bad parameters supplied by the caller (ranges, non-primes, degree mismatch).
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A value lies outside the domain an operation is defined on
// (e.g. a permutation that is not a product of interval reversals).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// A configured size cap would be exceeded.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Cycle-notation text could not be parsed. `position` is a 0-based offset.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

// Two computations that must agree did not. Always an implementation bug.
class VerificationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace norman

#endif
