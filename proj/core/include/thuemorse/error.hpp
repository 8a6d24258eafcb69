#pragma once

#include <stdexcept>
#include <string>

namespace thuemorse {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A generator index is out of range for the alphabet, or an inverse letter
/// was used where only positive letters are allowed.
class InvalidLetter : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Operation not available in the element's mode or coefficient ring.
class UnsupportedMode : public Error {
 public:
  using Error::Error;
};

/// The linear system attached to a self-similar character has no unique
/// solution.
class SingularSystem : public Error {
 public:
  using Error::Error;
};

/// A closure exceeded its class/state budget.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t reached)
      : Error(what), reached_(reached) {}
  std::size_t reached() const noexcept { return reached_; }

 private:
  std::size_t reached_;
};

}  // namespace thuemorse
