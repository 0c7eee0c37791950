#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weylproper {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Arithmetic between scalars declared over different irrational bases.
class BasisMismatch : public Error {
public:
  BasisMismatch() : Error("scalars belong to different irrational bases") {}
};

/// Interval refinement ran out of budget before the sign was decided.
class UndecidedSign : public Error {
public:
  explicit UndecidedSign(std::size_t depth)
      : Error("sign undecided after " + std::to_string(depth) + " refinements") {}
};

/// A product of two formal irrationals, which leaves the rational span of the basis.
class UnsupportedProduct : public Error {
public:
  UnsupportedProduct() : Error("product of two irrational scalars is not representable") {}
};

class InvalidArgument : public Error {
public:
  using Error::Error;
};

class PreconditionViolation : public Error {
public:
  using Error::Error;
};

/// Malformed textual input; `position` is a 0-based byte offset into the input.
class ParseError : public Error {
public:
  ParseError(std::string message, std::size_t position)
      : Error("at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

} // namespace weylproper
