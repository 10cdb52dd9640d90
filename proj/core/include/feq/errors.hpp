#pragma once

#include <stdexcept>
#include <string>

namespace feq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Element or function does not conform to the group it is used with.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// Operation needs a finite group (or a finite evaluation set) and did not get one.
class UnsupportedDomainError : public Error {
 public:
  using Error::Error;
};

// Solution-family or solver parameters violate a case constraint.
class ParameterError : public Error {
 public:
  using Error::Error;
};

class EvaluationError : public Error {
 public:
  using Error::Error;
};

}  // namespace feq
