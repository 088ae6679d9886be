#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace comatrix {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class ArithmeticOverflow : public Error {
 public:
  using Error::Error;
};

class InfiniteField : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::string what, std::uint64_t required, std::uint64_t budget)
      : Error(what + ": " + std::to_string(required) + " items exceed budget " + std::to_string(budget)),
        required_(required),
        budget_(budget) {}

  std::uint64_t required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

class NotClosed : public Error {
 public:
  using Error::Error;
};

class MissingUnit : public Error {
 public:
  using Error::Error;
};

class NotProjective : public Error {
 public:
  using Error::Error;
};

class NotColinear : public Error {
 public:
  using Error::Error;
};

class NoCertificate : public Error {
 public:
  using Error::Error;
};

/// A map prescribed on tensor representatives does not vanish on the relation span.
class IllDefinedMap : public Error {
 public:
  using Error::Error;
};

class InvalidStructure : public Error {
 public:
  using Error::Error;
};

}  // namespace comatrix
