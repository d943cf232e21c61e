#pragma once

#include <stdexcept>
#include <string>

namespace harmonia {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// Raised when a rule's algebraic degree is too low for the requested
// computation, or a polynomial has the wrong parity of degree.
class DegreeError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// An averaging operator is not invertible on the requested degree:
// the Gegenbauer coefficient with index `index()` (= 2j) vanishes.
class SingularKernelError : public Error {
 public:
  SingularKernelError(int index, const std::string& what)
      : Error(what), index_(index) {}
  int index() const noexcept { return index_; }

 private:
  int index_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace harmonia
