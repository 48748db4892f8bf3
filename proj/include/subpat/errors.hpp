#pragma once

#include <stdexcept>
#include <string>

namespace subpat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class NotAPermutationMatrix : public Error {
 public:
  using Error::Error;
};

/// An element was handed to a class whose ground set it does not belong to.
class WrongGroundSet : public Error {
 public:
  using Error::Error;
};

/// A requested rank or search bound is larger than the configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace subpat
