#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyreg {

/// Base of every recoverable error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NotOrthogonal : public Error {
 public:
  using Error::Error;
};

class NotSliceRegularForm : public Error {
 public:
  using Error::Error;
};

class NotReducible : public Error {
 public:
  using Error::Error;
};

class EmptyProbeSet : public Error {
 public:
  EmptyProbeSet() : Error("probe set is empty") {}
};

class SliceMismatch : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomial : public Error {
 public:
  using Error::Error;
};

class UnknownSuite : public Error {
 public:
  explicit UnknownSuite(const std::string& name) : Error("unknown suite: " + name) {}
};

/// Raised by the text parsers. `offset` is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found);

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// An identity that must hold by construction failed. Always a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void check_invariant(bool ok, const char* what) {
  if (!ok) throw InvariantViolation(what);
}

}  // namespace polyreg
