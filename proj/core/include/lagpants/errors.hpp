#pragma once

#include <stdexcept>
#include <string>

namespace lagpants {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent user input.
class InputError : public Error {
 public:
  using Error::Error;
};

class DegeneracyError : public Error {
 public:
  using Error::Error;
};

// Point outside the domain where a map is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Iterative solver failed to converge.
class NumericError : public Error {
 public:
  using Error::Error;
};

// Gluing schedule violates one of its constraints.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace lagpants
