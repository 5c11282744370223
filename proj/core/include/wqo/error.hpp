#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wqo {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input, element/qo mismatch, violated precondition.
class InputError : public Error {
 public:
  using Error::Error;
};

// A truncation or search bound was too small to reach a verdict.
class BoundError : public Error {
 public:
  using Error::Error;
};

// A prefix that was supposed to be bad is not; carries the offending indices.
class NotBadError : public Error {
 public:
  NotBadError(std::size_t i, std::size_t j)
      : Error("not bad: (" + std::to_string(i) + "," + std::to_string(j) + ")"), first(i), second(j) {}
  std::size_t first;
  std::size_t second;
};

}  // namespace wqo
