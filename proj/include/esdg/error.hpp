#pragma once

#include <stdexcept>
#include <string>

namespace esdg {

/// Base class of every error raised by the solver library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidDegree : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IntegrationFailure : public Error {
 public:
  using Error::Error;
};

/// A node state with nonpositive density or temperature.
class NonphysicalState : public Error {
 public:
  NonphysicalState(const std::string& what, std::string field, double value,
                   int element = -1, int node = -1)
      : Error(what), field_(std::move(field)), value_(value),
        element_(element), node_(node) {}

  const std::string& field() const noexcept { return field_; }
  double value() const noexcept { return value_; }
  int element() const noexcept { return element_; }
  int node() const noexcept { return node_; }

 private:
  std::string field_;
  double value_;
  int element_;
  int node_;
};

}  // namespace esdg
